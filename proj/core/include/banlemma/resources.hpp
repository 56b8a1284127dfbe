#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "banlemma/pos.hpp"

namespace banlemma {

// PoS-clustered marker inventories. Every list is kept sorted by codepoint
// length descending, ties broken lexicographically, with no duplicates or
// empty strings; the loader enforces this regardless of file order.
struct MarkerSet {
    std::array<std::vector<std::string>, kAllMarkerCategories.size()> by_category;

    const std::vector<std::string>& of(MarkerCategory category) const {
        return by_category[static_cast<std::size_t>(category)];
    }
    std::vector<std::string>& of(MarkerCategory category) {
        return by_category[static_cast<std::size_t>(category)];
    }

    bool operator==(const MarkerSet&) const = default;
};

using LemmaCluster = std::unordered_map<std::string, std::string>;

// Index into LemmaDictionary::clusters, or npos for classes that carry no
// cluster (conjunction, interjection, other).
std::size_t cluster_index(PosClass pos);
inline constexpr std::size_t kNoCluster = static_cast<std::size_t>(-1);
inline constexpr std::size_t kClusterCount = 6;

// Word -> lemma maps for the six lemmatizable classes. Base words map to
// themselves; inflected entries are expected and normal.
struct LemmaDictionary {
    std::array<LemmaCluster, kClusterCount> clusters;

    const LemmaCluster* cluster(PosClass pos) const;
    LemmaCluster* cluster(PosClass pos);
    std::size_t size() const;

    bool operator==(const LemmaDictionary&) const = default;
};

// Verb suffix inventory (length-descending) plus the root -> lemma map used
// by the second pass of verb lemmatization.
struct VerbResources {
    std::vector<std::string> suffixes;
    std::unordered_map<std::string, std::string> root_lemma;

    bool operator==(const VerbResources&) const = default;
};

// Everything the lemmatizer needs, immutable after load and safe to share
// across threads.
struct ResourceBundle {
    MarkerSet markers;
    LemmaDictionary dictionary;
    VerbResources verbs;
    PosProjection projection;
};

// In-place: codepoint length descending, ties lexicographic, duplicates
// removed. This is strip_marker's iteration-order precondition.
void sort_markers(std::vector<std::string>& markers);

// Parsers take JSON text; `origin` names the source in error messages.
MarkerSet parse_markers(std::string_view json_text, std::string_view origin);
LemmaDictionary parse_dictionary(std::string_view json_text, std::string_view origin);
VerbResources parse_verbs(std::string_view json_text, std::string_view origin);
PosProjection parse_projection(std::string_view json_text, std::string_view origin);

MarkerSet load_markers(const std::filesystem::path& path);
LemmaDictionary load_dictionary(const std::filesystem::path& path);
VerbResources load_verbs(const std::filesystem::path& path);
PosProjection load_projection(const std::filesystem::path& path);

ResourceBundle load_resources(const std::filesystem::path& dictionary_path,
                              const std::filesystem::path& markers_path,
                              const std::filesystem::path& verb_path,
                              const std::optional<std::filesystem::path>& projection_path = {});

// Canonical JSON text in the same shape the loaders accept; loading the
// output of serialize_* reproduces the in-memory value exactly.
std::string serialize_markers(const MarkerSet& markers);
std::string serialize_dictionary(const LemmaDictionary& dictionary);
std::string serialize_verbs(const VerbResources& verbs);

}  // namespace banlemma
