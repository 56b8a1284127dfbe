#include "banlemma/stripper.hpp"

#include <doctest.h>

#include <random>

#include "banlemma/text.hpp"
#include "support/fixtures.hpp"

using namespace banlemma;
using banlemma::testing::sample_resources;

namespace {

std::vector<std::string> sorted(std::initializer_list<const char*> raw) {
    std::vector<std::string> markers;
    for (const char* m : raw) markers.push_back(text::nfc(m));
    sort_markers(markers);
    return markers;
}

LemmaCluster cluster_of(std::initializer_list<std::pair<const char*, const char*>> raw) {
    LemmaCluster cluster;
    for (auto [w, l] : raw) cluster.emplace(text::nfc(w), text::nfc(l));
    return cluster;
}

}  // namespace

TEST_CASE("a shorter marker with a dictionary hit beats a longer plain match") {
    // ের matches first but ছেল is no entry; continuing finds র with ছেলে
    auto markers = sorted({"ের", "র", "কে", "তে"});
    auto cluster = cluster_of({{"ছেলে", "ছেলে"}});
    StripOutcome out = strip_marker(text::nfc("ছেলের"), markers, cluster);
    CHECK(out.resolved);
    CHECK(out.result == text::nfc("ছেলে"));
    REQUIRE(out.stripped_marker.has_value());
    CHECK(*out.stripped_marker == text::nfc("র"));
}

TEST_CASE("no matching marker returns the word untouched") {
    auto markers = sorted({"কে", "তে"});
    LemmaCluster empty;
    StripOutcome out = strip_marker(text::nfc("কেতন"), markers, empty);
    CHECK_FALSE(out.resolved);
    CHECK(out.result == text::nfc("কেতন"));
    CHECK_FALSE(out.stripped_marker.has_value());
}

TEST_CASE("longest matching marker is stripped without a dictionary hit") {
    const auto& plural = sample_resources().markers.of(MarkerCategory::Plural);
    LemmaCluster empty;
    StripOutcome out = strip_marker(text::nfc("বালকগুলো"), plural, empty);
    CHECK_FALSE(out.resolved);
    CHECK(out.result == text::nfc("বালক"));
    REQUIRE(out.stripped_marker.has_value());
    CHECK(*out.stripped_marker == text::nfc("গুলো"));
}

TEST_CASE("a marker equal to the whole word is not a candidate") {
    auto markers = sorted({"রা"});
    auto cluster = cluster_of({{"রা", "রা"}});
    StripOutcome out = strip_marker(text::nfc("রা"), markers, cluster);
    CHECK_FALSE(out.resolved);
    CHECK(out.result == text::nfc("রা"));
    CHECK_FALSE(out.stripped_marker.has_value());
}

TEST_CASE("strip_sequence resolves through the dictionary mid-walk") {
    const MarkerSet& markers = sample_resources().markers;
    auto cluster = cluster_of({{"জনগণ", "জনগণ"}});
    const MarkerCategory seq[] = {MarkerCategory::Emphasis, MarkerCategory::Case,
                                  MarkerCategory::Determiner};
    std::vector<TraceEntry> trace;
    StripOutcome out = strip_sequence(text::nfc("জনগণই"), seq, markers, cluster, &trace);
    CHECK(out.resolved);
    CHECK(out.result == text::nfc("জনগণ"));
    REQUIRE(trace.size() == 1);
    CHECK(trace[0] == TraceEntry{"EM", text::nfc("ই")});
}

TEST_CASE("strip_sequence is the identity on marker-free input") {
    const MarkerSet& markers = sample_resources().markers;
    LemmaCluster empty;
    const MarkerCategory seq[] = {MarkerCategory::Emphasis, MarkerCategory::Case,
                                  MarkerCategory::Determiner};
    StripOutcome out = strip_sequence(text::nfc("মানুষ"), seq, markers, empty);
    CHECK_FALSE(out.resolved);
    CHECK(out.result == text::nfc("মানুষ"));
}

TEST_CASE("strip_sequence walks EM then CM then DM") {
    const MarkerSet& markers = sample_resources().markers;
    LemmaCluster empty;
    const MarkerCategory seq[] = {MarkerCategory::Emphasis, MarkerCategory::Case,
                                  MarkerCategory::Determiner};
    std::vector<TraceEntry> trace;
    StripOutcome out = strip_sequence(text::nfc("গাছটাতেও"), seq, markers, empty, &trace);
    CHECK_FALSE(out.resolved);
    CHECK(out.result == text::nfc("গাছ"));
    REQUIRE(trace.size() == 3);
    CHECK(trace[0] == TraceEntry{"EM", text::nfc("ও")});
    CHECK(trace[1] == TraceEntry{"CM", text::nfc("তে")});
    CHECK(trace[2] == TraceEntry{"DM", text::nfc("টা")});
}

TEST_CASE("membership is tested even when a step strips nothing") {
    const MarkerSet& markers = sample_resources().markers;
    auto cluster = cluster_of({{"মানুষ", "মানব"}});
    const MarkerCategory seq[] = {MarkerCategory::Emphasis};
    StripOutcome out = strip_sequence(text::nfc("মানুষ"), seq, markers, cluster);
    CHECK(out.resolved);
    CHECK(out.result == text::nfc("মানব"));
}

// ---- properties over random inputs ----

namespace {

struct Generator {
    std::mt19937 rng{20240517};
    // no canonically-composing pairs in this alphabet, so concatenations
    // stay NFC
    const std::vector<std::string> alphabet = {"ক", "খ", "গ", "ই", "া", "ত"};

    std::string word(std::size_t min_len, std::size_t max_len) {
        std::uniform_int_distribution<std::size_t> len(min_len, max_len);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        std::string out;
        std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) out += alphabet[pick(rng)];
        return out;
    }

    bool chance(double p) {
        return std::uniform_real_distribution<double>(0, 1)(rng) < p;
    }

    std::size_t upto(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n)(rng);
    }
};

}  // namespace

TEST_CASE("prefix, shrinkage and single-strip properties hold under fuzz") {
    Generator gen;
    for (int iter = 0; iter < 3000; ++iter) {
        std::string word = gen.word(1, 8);
        std::vector<std::string> markers;
        for (std::size_t i = 0, n = gen.upto(5); i < n; ++i) {
            markers.push_back(gen.chance(0.5) && word.size() >= 3
                                  ? word.substr(word.size() - 3)
                                  : gen.word(1, 3));
        }
        sort_markers(markers);
        LemmaCluster cluster;
        for (std::size_t i = 0, n = gen.upto(4); i < n; ++i) {
            cluster.emplace(gen.word(1, 6), gen.word(1, 6));
        }

        StripOutcome out = strip_marker(word, markers, cluster);
        if (!out.resolved) {
            // result is a (possibly equal) codepoint prefix of the input
            CHECK(text::starts_with(word, out.result));
            CHECK(text::codepoint_count(out.result) <= text::codepoint_count(word));
            if (out.stripped_marker) {
                CHECK(out.result.size() < word.size());
                CHECK(out.result + *out.stripped_marker == word);
            } else {
                CHECK(out.result == word);
            }
        } else {
            REQUIRE(out.stripped_marker.has_value());
            std::string remainder(text::drop_suffix(word, *out.stripped_marker));
            REQUIRE(cluster.contains(remainder));
            CHECK(cluster.at(remainder) == out.result);
        }

        // determinism
        StripOutcome again = strip_marker(word, markers, cluster);
        CHECK(again.result == out.result);
        CHECK(again.resolved == out.resolved);
        CHECK(again.stripped_marker == out.stripped_marker);
    }
}

TEST_CASE("dictionary dominance: the longest hit-producing marker wins") {
    Generator gen;
    for (int iter = 0; iter < 3000; ++iter) {
        std::string word = gen.word(2, 8);
        std::vector<std::string> markers;
        for (std::size_t i = 0, n = 1 + gen.upto(4); i < n; ++i) {
            std::size_t cut = 1 + gen.upto(std::min<std::size_t>(2, word.size() / 3 - 0));
            std::string suffix = word.substr(word.size() - std::min(word.size() - 3, cut * 3));
            markers.push_back(suffix.empty() ? gen.word(1, 2) : suffix);
        }
        sort_markers(markers);
        LemmaCluster cluster;
        // seed hits for every matching marker at random
        for (const std::string& m : markers) {
            if (text::ends_with(word, m) && m.size() < word.size() && gen.chance(0.5)) {
                cluster.emplace(std::string(text::drop_suffix(word, m)), gen.word(1, 4));
            }
        }

        StripOutcome out = strip_marker(word, markers, cluster);
        // find the longest marker whose remainder is a key
        const std::string* best = nullptr;
        for (const std::string& m : markers) {
            if (!text::ends_with(word, m) || m.size() >= word.size()) continue;
            if (cluster.contains(std::string(text::drop_suffix(word, m)))) {
                best = &m;  // markers are sorted, first match is the winner
                break;
            }
        }
        if (best != nullptr) {
            CHECK(out.resolved);
            CHECK(out.result ==
                  cluster.at(std::string(text::drop_suffix(word, *best))));
        } else {
            CHECK_FALSE(out.resolved);
        }
    }
}
