#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace banlemma {

// The nine basic PoS classes the lemmatizer dispatches on. Other absorbs
// punctuation, symbols, and any tag the projection does not know.
enum class PosClass {
    Noun,
    Pronoun,
    Verb,
    Adjective,
    Adverb,
    Postposition,
    Conjunction,
    Interjection,
    Other,
};

inline constexpr std::array<PosClass, 9> kAllPosClasses = {
    PosClass::Noun,         PosClass::Pronoun,     PosClass::Verb,
    PosClass::Adjective,    PosClass::Adverb,      PosClass::Postposition,
    PosClass::Conjunction,  PosClass::Interjection, PosClass::Other,
};

// Canonical lowercase name, e.g. "noun". Stable across the file formats,
// the CLI, and the JSON report schema.
std::string_view pos_name(PosClass pos);

// Capitalized name for human-facing tables, e.g. "Noun".
std::string_view pos_display_name(PosClass pos);

// Case-insensitive parse of a canonical class name.
std::optional<PosClass> parse_pos_class(std::string_view name);

// Suffix-marker categories.
enum class MarkerCategory {
    Plural,      // PM
    Case,        // CM
    Determiner,  // DM
    Emphasis,    // EM
    Degree,      // DgM
};

inline constexpr std::array<MarkerCategory, 5> kAllMarkerCategories = {
    MarkerCategory::Plural, MarkerCategory::Case, MarkerCategory::Determiner,
    MarkerCategory::Emphasis, MarkerCategory::Degree,
};

// Short label used in traces: PM, CM, DM, EM, DgM.
std::string_view category_label(MarkerCategory category);

// Key used in the markers file: plural, case, determiner, emphasis, degree.
std::string_view category_key(MarkerCategory category);

// Maps narrow tagset strings (NC, NP, VM, ...) onto basic classes. Total via
// default_class: every input yields some PosClass.
struct PosProjection {
    std::unordered_map<std::string, PosClass> narrow_to_basic;
    PosClass default_class = PosClass::Other;

    // Exact narrow-tag match, then case-insensitive basic class name.
    // nullopt when the tag is unknown (callers decide whether that is an
    // error or falls through to default_class).
    std::optional<PosClass> lookup(std::string_view tag) const;

    // Total projection: lookup or default_class.
    PosClass project(std::string_view tag) const;

    bool operator==(const PosProjection&) const = default;
};

PosClass project_pos(std::string_view narrow_tag, const PosProjection& projection);

// Built-in projection for the common narrow tagsets; used when no projection
// file is given.
PosProjection default_pos_projection();

}  // namespace banlemma
