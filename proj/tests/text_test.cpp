#include "banlemma/text.hpp"

#include <doctest.h>

#include "banlemma/errors.hpp"

using namespace banlemma;

TEST_CASE("nfc composes split vowel signs") {
    // BENGALI VOWEL SIGN E + AA compose to VOWEL SIGN O
    std::string split = "গো";  // গ + ে + া
    std::string composed = "গো";     // গ + ো
    CHECK(text::nfc(split) == composed);
    CHECK(text::nfc(composed) == composed);
}

TEST_CASE("nfc decomposes ya-with-nukta") {
    // U+09DF is composition-excluded; both spellings must meet in one form
    std::string precomposed = "য়ে";        // য় + ে
    std::string decomposed = "য়ে";   // য + ় + ে
    CHECK(text::nfc(precomposed) == text::nfc(decomposed));
    CHECK(text::nfc(precomposed) == decomposed);
}

TEST_CASE("nfc is idempotent") {
    for (std::string s : {"মানুষগুলোকেও", "গিয়েছিলাম", "বড়", "abc", ""}) {
        std::string once = text::nfc(s);
        CHECK(text::nfc(once) == once);
        CHECK(text::is_nfc(once));
    }
}

TEST_CASE("codepoint_count counts scalars not bytes") {
    CHECK(text::codepoint_count("") == 0);
    CHECK(text::codepoint_count("abc") == 3);
    CHECK(text::codepoint_count("কে") == 2);
    CHECK(text::codepoint_count("গুলো") == 4);
    // decomposed য় is two codepoints
    CHECK(text::codepoint_count(text::nfc("য়")) == 2);
}

TEST_CASE("suffix helpers are byte-exact") {
    CHECK(text::ends_with("ছেলের", "র"));
    CHECK(text::ends_with("ছেলের", "ের"));
    CHECK_FALSE(text::ends_with("ছেলের", "কে"));
    CHECK(text::drop_suffix("ছেলের", "র") == "ছেলে");
    CHECK(text::starts_with("ছেলের", "ছেলে"));
}

TEST_CASE("strip_invisibles removes joiners only") {
    std::string with_zwnj = "র‍যাব‌";
    CHECK(text::strip_invisibles(with_zwnj) == "রযাব");
    CHECK(text::strip_invisibles("মানুষ") == "মানুষ");
}

TEST_CASE("split_whitespace handles unicode spaces") {
    auto tokens = text::split_whitespace("আমি ভাত  খাই\n");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0] == "আমি");
    CHECK(tokens[2] == "খাই");
    CHECK(text::split_whitespace("   ").empty());
}
