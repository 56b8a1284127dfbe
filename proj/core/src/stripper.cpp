#include "banlemma/stripper.hpp"

#include "banlemma/text.hpp"

namespace banlemma {

StripOutcome strip_marker(std::string_view word,
                          std::span<const std::string> markers,
                          const LemmaCluster& cluster) {
    const std::string* longest_match = nullptr;
    for (const std::string& marker : markers) {
        if (!text::ends_with(word, marker)) continue;
        std::string_view remainder = text::drop_suffix(word, marker);
        // a marker equal to the whole word is not a candidate
        if (remainder.empty()) continue;
        if (auto it = cluster.find(std::string(remainder)); it != cluster.end()) {
            return {it->second, true, marker};
        }
        if (longest_match == nullptr) longest_match = &marker;
    }
    if (longest_match != nullptr) {
        return {std::string(text::drop_suffix(word, *longest_match)), false,
                *longest_match};
    }
    return {std::string(word), false, std::nullopt};
}

StripOutcome strip_sequence(std::string_view word,
                            std::span<const MarkerCategory> sequence,
                            const MarkerSet& marker_set,
                            const LemmaCluster& cluster,
                            std::vector<TraceEntry>* trace) {
    std::string running(word);
    for (MarkerCategory category : sequence) {
        StripOutcome step = strip_marker(running, marker_set.of(category), cluster);
        if (step.stripped_marker && trace != nullptr) {
            trace->push_back({std::string(category_label(category)),
                              *step.stripped_marker});
        }
        if (step.resolved) {
            return {step.result, true, step.stripped_marker};
        }
        running = step.result;
        // membership is tested after every step, change or no change
        if (auto it = cluster.find(running); it != cluster.end()) {
            return {it->second, true, std::nullopt};
        }
    }
    return {running, false, std::nullopt};
}

}  // namespace banlemma
