#include "banlemma/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "banlemma/errors.hpp"

namespace banlemma::text {

namespace {

const icu::Normalizer2& nfc_instance() {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || norm == nullptr) {
        throw Error("ICU NFC normalizer unavailable");
    }
    return *norm;
}

}  // namespace

std::string nfc(std::string_view utf8) {
    icu::UnicodeString source = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString normalized = nfc_instance().normalize(source, status);
    if (U_FAILURE(status)) {
        throw Error("NFC normalization failed");
    }
    std::string out;
    normalized.toUTF8String(out);
    return out;
}

bool is_nfc(std::string_view utf8) {
    icu::UnicodeString source = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    UErrorCode status = U_ZERO_ERROR;
    UBool result = nfc_instance().isNormalized(source, status);
    return U_SUCCESS(status) && result;
}

std::size_t codepoint_count(std::string_view utf8) {
    std::size_t count = 0;
    for (char c : utf8) {
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
    }
    return count;
}

bool ends_with(std::string_view word, std::string_view suffix) {
    return word.size() >= suffix.size() &&
           word.substr(word.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view word, std::string_view prefix) {
    return word.substr(0, prefix.size()) == prefix;
}

std::string_view drop_suffix(std::string_view word, std::string_view suffix) {
    return word.substr(0, word.size() - suffix.size());
}

namespace {

bool is_invisible(UChar32 cp) {
    return cp == 0x200B || cp == 0x200C || cp == 0x200D || cp == 0xFEFF;
}

}  // namespace

std::string strip_invisibles(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
    int32_t length = static_cast<int32_t>(utf8.size());
    int32_t i = 0;
    while (i < length) {
        int32_t start = i;
        UChar32 cp;
        U8_NEXT(bytes, i, length, cp);
        if (cp < 0) {
            // invalid byte: keep as-is rather than destroy data
            out.append(utf8.substr(start, i - start));
            continue;
        }
        if (!is_invisible(cp)) {
            out.append(utf8.substr(start, i - start));
        }
    }
    return out;
}

std::vector<std::string> split_whitespace(std::string_view utf8) {
    std::vector<std::string> tokens;
    const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
    int32_t length = static_cast<int32_t>(utf8.size());
    int32_t i = 0;
    std::string current;
    while (i < length) {
        int32_t start = i;
        UChar32 cp;
        U8_NEXT(bytes, i, length, cp);
        bool space = cp >= 0 && u_isUWhiteSpace(cp);
        if (space) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.append(utf8.substr(start, i - start));
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

bool is_detachable_punct(char32_t cp) {
    switch (cp) {
        case U'।':  // danda
        case U'॥':  // double danda
        case U'?':
        case U'!':
        case U',':
        case U'.':
        case U';':
        case U':':
        case U'"':
        case U'\'':
        case U'“':
        case U'”':
        case U'‘':
        case U'’':
        case U'(':
        case U')':
        case U'[':
        case U']':
        case U'{':
        case U'}':
        case U'–':
        case U'—':
        case U'…':
            return true;
        default:
            return false;
    }
}

}  // namespace banlemma::text
