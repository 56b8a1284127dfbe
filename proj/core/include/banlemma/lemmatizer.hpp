#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "banlemma/pos.hpp"
#include "banlemma/resources.hpp"
#include "banlemma/stripper.hpp"

namespace banlemma {

enum class LemmaSource {
    DictionaryHit,  // lemma came from a cluster lookup
    RuleStripped,   // markers removed, no dictionary confirmation
    RootMapped,     // verb root resolved through the root -> lemma map
    Identity,       // word returned unchanged
};

std::string_view source_name(LemmaSource source);

struct LemmaResult {
    std::string lemma;
    LemmaSource source = LemmaSource::Identity;
    std::vector<TraceEntry> trace;  // empty iff nothing was stripped

    bool operator==(const LemmaResult&) const = default;
};

// Nouns: dictionary check, strip [EM, CM, DM], then [PM, CM] if the running
// word still ends in a plural marker, else [CM, PM].
LemmaResult noun_lemma(std::string_view word, const MarkerSet& markers,
                       const LemmaDictionary& dictionary);

// Pronouns: dictionary check, then [EM, CM, DM, PM]. Inherent suffixes
// survive through dictionary coverage, not through a special case.
LemmaResult pronoun_lemma(std::string_view word, const MarkerSet& markers,
                          const LemmaDictionary& dictionary);

// Verbs, two passes: strip the longest matching suffix to expose the root,
// then map the root to its dictionary form. Roots are not lemmas, so an
// unknown root falls back to the surface form.
LemmaResult verb_lemma(std::string_view word, const VerbResources& verbs,
                       const LemmaDictionary& dictionary);

// Adjectives: dictionary check, then [EM, DgM]. Nominal suffixes on
// adjectives are never stripped.
LemmaResult adjective_lemma(std::string_view word, const MarkerSet& markers,
                            const LemmaDictionary& dictionary);

LemmaResult adverb_lemma(std::string_view word, const MarkerSet& markers,
                         const LemmaDictionary& dictionary);

LemmaResult postposition_lemma(std::string_view word, const MarkerSet& markers,
                               const LemmaDictionary& dictionary);

// Dispatch by PoS class; conjunctions, interjections and Other are returned
// unchanged.
LemmaResult lemmatize_word(std::string_view word, PosClass pos,
                           const ResourceBundle& resources);

}  // namespace banlemma
