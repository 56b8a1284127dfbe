#include "banlemma/lemmatizer.hpp"

#include <array>

#include "banlemma/text.hpp"

namespace banlemma {

namespace {

LemmaResult from_sequences(std::string_view word, const LemmaCluster& cluster,
                           const MarkerSet& markers,
                           std::span<const MarkerCategory> first,
                           std::span<const MarkerCategory> second) {
    if (auto it = cluster.find(std::string(word)); it != cluster.end()) {
        return {it->second, LemmaSource::DictionaryHit, {}};
    }
    std::vector<TraceEntry> trace;
    StripOutcome out = strip_sequence(word, first, markers, cluster, &trace);
    if (!out.resolved && !second.empty()) {
        out = strip_sequence(out.result, second, markers, cluster, &trace);
    }
    if (out.resolved) {
        return {out.result, LemmaSource::DictionaryHit, std::move(trace)};
    }
    if (trace.empty()) {
        return {std::string(word), LemmaSource::Identity, {}};
    }
    return {out.result, LemmaSource::RuleStripped, std::move(trace)};
}

bool ends_with_any(std::string_view word, const std::vector<std::string>& markers) {
    for (const std::string& marker : markers) {
        if (text::ends_with(word, marker)) return true;
    }
    return false;
}

const LemmaCluster kEmptyCluster;

const LemmaCluster& cluster_or_empty(const LemmaDictionary& dictionary, PosClass pos) {
    const LemmaCluster* cluster = dictionary.cluster(pos);
    return cluster != nullptr ? *cluster : kEmptyCluster;
}

}  // namespace

std::string_view source_name(LemmaSource source) {
    switch (source) {
        case LemmaSource::DictionaryHit: return "dictionary_hit";
        case LemmaSource::RuleStripped: return "rule_stripped";
        case LemmaSource::RootMapped: return "root_mapped";
        case LemmaSource::Identity: return "identity";
    }
    return "identity";
}

LemmaResult noun_lemma(std::string_view word, const MarkerSet& markers,
                       const LemmaDictionary& dictionary) {
    const LemmaCluster& cluster = cluster_or_empty(dictionary, PosClass::Noun);
    if (auto it = cluster.find(std::string(word)); it != cluster.end()) {
        return {it->second, LemmaSource::DictionaryHit, {}};
    }
    static constexpr std::array<MarkerCategory, 3> kFirst = {
        MarkerCategory::Emphasis, MarkerCategory::Case, MarkerCategory::Determiner};
    std::vector<TraceEntry> trace;
    StripOutcome out = strip_sequence(word, kFirst, markers, cluster, &trace);
    if (!out.resolved) {
        // the word can end in plural+case or case+plural; pick by what the
        // intermediate form still ends with
        static constexpr std::array<MarkerCategory, 2> kPluralFirst = {
            MarkerCategory::Plural, MarkerCategory::Case};
        static constexpr std::array<MarkerCategory, 2> kCaseFirst = {
            MarkerCategory::Case, MarkerCategory::Plural};
        bool plural_tail = ends_with_any(out.result, markers.of(MarkerCategory::Plural));
        out = strip_sequence(out.result,
                             plural_tail ? std::span<const MarkerCategory>(kPluralFirst)
                                         : std::span<const MarkerCategory>(kCaseFirst),
                             markers, cluster, &trace);
    }
    if (out.resolved) {
        return {out.result, LemmaSource::DictionaryHit, std::move(trace)};
    }
    if (trace.empty()) {
        return {std::string(word), LemmaSource::Identity, {}};
    }
    return {out.result, LemmaSource::RuleStripped, std::move(trace)};
}

LemmaResult pronoun_lemma(std::string_view word, const MarkerSet& markers,
                          const LemmaDictionary& dictionary) {
    static constexpr std::array<MarkerCategory, 4> kSequence = {
        MarkerCategory::Emphasis, MarkerCategory::Case, MarkerCategory::Determiner,
        MarkerCategory::Plural};
    return from_sequences(word, cluster_or_empty(dictionary, PosClass::Pronoun),
                          markers, kSequence, {});
}

LemmaResult verb_lemma(std::string_view word, const VerbResources& verbs,
                       const LemmaDictionary& dictionary) {
    const LemmaCluster& cluster = cluster_or_empty(dictionary, PosClass::Verb);
    if (auto it = cluster.find(std::string(word)); it != cluster.end()) {
        return {it->second, LemmaSource::DictionaryHit, {}};
    }
    // pass one: longest suffix that leaves a non-empty root
    const std::string* suffix = nullptr;
    for (const std::string& candidate : verbs.suffixes) {
        if (candidate.size() < word.size() && text::ends_with(word, candidate)) {
            suffix = &candidate;
            break;
        }
    }
    if (suffix == nullptr) {
        return {std::string(word), LemmaSource::Identity, {}};
    }
    // pass two: root to dictionary form
    std::string root(text::drop_suffix(word, *suffix));
    if (auto it = verbs.root_lemma.find(root); it != verbs.root_lemma.end()) {
        return {it->second, LemmaSource::RootMapped, {{"verb-suffix", *suffix}}};
    }
    if (auto it = cluster.find(root); it != cluster.end()) {
        return {it->second, LemmaSource::DictionaryHit, {{"verb-suffix", *suffix}}};
    }
    // a bare root is not a lemma; better to keep the surface form
    return {std::string(word), LemmaSource::Identity, {}};
}

LemmaResult adjective_lemma(std::string_view word, const MarkerSet& markers,
                            const LemmaDictionary& dictionary) {
    static constexpr std::array<MarkerCategory, 2> kSequence = {
        MarkerCategory::Emphasis, MarkerCategory::Degree};
    return from_sequences(word, cluster_or_empty(dictionary, PosClass::Adjective),
                          markers, kSequence, {});
}

LemmaResult adverb_lemma(std::string_view word, const MarkerSet& markers,
                         const LemmaDictionary& dictionary) {
    static constexpr std::array<MarkerCategory, 1> kSequence = {MarkerCategory::Emphasis};
    return from_sequences(word, cluster_or_empty(dictionary, PosClass::Adverb),
                          markers, kSequence, {});
}

LemmaResult postposition_lemma(std::string_view word, const MarkerSet& markers,
                               const LemmaDictionary& dictionary) {
    static constexpr std::array<MarkerCategory, 1> kSequence = {MarkerCategory::Emphasis};
    return from_sequences(word, cluster_or_empty(dictionary, PosClass::Postposition),
                          markers, kSequence, {});
}

LemmaResult lemmatize_word(std::string_view word, PosClass pos,
                           const ResourceBundle& resources) {
    switch (pos) {
        case PosClass::Noun:
            return noun_lemma(word, resources.markers, resources.dictionary);
        case PosClass::Pronoun:
            return pronoun_lemma(word, resources.markers, resources.dictionary);
        case PosClass::Verb:
            return verb_lemma(word, resources.verbs, resources.dictionary);
        case PosClass::Adjective:
            return adjective_lemma(word, resources.markers, resources.dictionary);
        case PosClass::Adverb:
            return adverb_lemma(word, resources.markers, resources.dictionary);
        case PosClass::Postposition:
            return postposition_lemma(word, resources.markers, resources.dictionary);
        case PosClass::Conjunction:
        case PosClass::Interjection:
        case PosClass::Other:
            return {std::string(word), LemmaSource::Identity, {}};
    }
    return {std::string(word), LemmaSource::Identity, {}};
}

}  // namespace banlemma
