#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers. All strings in this library are UTF-8 and are
// NFC-normalized at ingestion, so suffix/prefix tests can work on bytes:
// a valid UTF-8 needle can only byte-match at a codepoint boundary.
namespace banlemma::text {

// NFC normalization (ICU-backed). Throws banlemma::Error on invalid UTF-8.
std::string nfc(std::string_view utf8);

bool is_nfc(std::string_view utf8);

// Number of Unicode scalar values. Marker lengths are measured in
// codepoints, never bytes or grapheme clusters.
std::size_t codepoint_count(std::string_view utf8);

bool ends_with(std::string_view word, std::string_view suffix);
bool starts_with(std::string_view word, std::string_view prefix);

// word minus a suffix it is known to end with.
std::string_view drop_suffix(std::string_view word, std::string_view suffix);

// Removes ZWJ, ZWNJ, ZWSP and BOM/ZWNBSP codepoints.
std::string strip_invisibles(std::string_view utf8);

// Splits on Unicode whitespace; no empty tokens.
std::vector<std::string> split_whitespace(std::string_view utf8);

// Punctuation detached by the tokenizer when it dangles at a token edge:
// danda/double danda, ASCII sentence punctuation, quotes, brackets, dashes.
bool is_detachable_punct(char32_t cp);

}  // namespace banlemma::text
