#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "banlemma/pos.hpp"
#include "banlemma/resources.hpp"

namespace banlemma {

// Result of one marker-stripping step.
//
// resolved == true means result came out of a dictionary lookup and is a
// final lemma. Otherwise result is the (possibly unchanged) running word:
// if stripped_marker is present it is a strict codepoint prefix of the
// input, else it equals the input.
struct StripOutcome {
    std::string result;
    bool resolved = false;
    std::optional<std::string> stripped_marker;
};

// One stripping event: which category (PM/CM/DM/EM/DgM or verb-suffix)
// removed which string.
struct TraceEntry {
    std::string label;
    std::string stripped;

    bool operator==(const TraceEntry&) const = default;
};

// Single-category marker stripping.
//
// Walks `markers` in order (caller keeps them length-descending). For each
// marker that is a suffix of `word` and leaves a non-empty remainder: if the
// remainder is a cluster key, returns its lemma immediately; otherwise the
// first such marker (the longest) is remembered and stripped after the walk.
// A marker equal to the whole word is not a candidate at all.
StripOutcome strip_marker(std::string_view word,
                          std::span<const std::string> markers,
                          const LemmaCluster& cluster);

// Applies strip_marker once per category in `sequence`, threading the
// result. After every step the running word is looked up in `cluster`;
// either kind of dictionary hit stops the walk with resolved == true.
// Each marker actually removed is appended to `trace` when given.
StripOutcome strip_sequence(std::string_view word,
                            std::span<const MarkerCategory> sequence,
                            const MarkerSet& marker_set,
                            const LemmaCluster& cluster,
                            std::vector<TraceEntry>* trace = nullptr);

}  // namespace banlemma
