#include "banlemma/pos.hpp"

#include <algorithm>
#include <cctype>

namespace banlemma {

std::string_view pos_name(PosClass pos) {
    switch (pos) {
        case PosClass::Noun: return "noun";
        case PosClass::Pronoun: return "pronoun";
        case PosClass::Verb: return "verb";
        case PosClass::Adjective: return "adjective";
        case PosClass::Adverb: return "adverb";
        case PosClass::Postposition: return "postposition";
        case PosClass::Conjunction: return "conjunction";
        case PosClass::Interjection: return "interjection";
        case PosClass::Other: return "other";
    }
    return "other";
}

std::string_view pos_display_name(PosClass pos) {
    switch (pos) {
        case PosClass::Noun: return "Noun";
        case PosClass::Pronoun: return "Pronoun";
        case PosClass::Verb: return "Verb";
        case PosClass::Adjective: return "Adjective";
        case PosClass::Adverb: return "Adverb";
        case PosClass::Postposition: return "Postposition";
        case PosClass::Conjunction: return "Conjunction";
        case PosClass::Interjection: return "Interjection";
        case PosClass::Other: return "Other";
    }
    return "Other";
}

std::optional<PosClass> parse_pos_class(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (PosClass pos : kAllPosClasses) {
        if (lower == pos_name(pos)) return pos;
    }
    return std::nullopt;
}

std::string_view category_label(MarkerCategory category) {
    switch (category) {
        case MarkerCategory::Plural: return "PM";
        case MarkerCategory::Case: return "CM";
        case MarkerCategory::Determiner: return "DM";
        case MarkerCategory::Emphasis: return "EM";
        case MarkerCategory::Degree: return "DgM";
    }
    return "?";
}

std::string_view category_key(MarkerCategory category) {
    switch (category) {
        case MarkerCategory::Plural: return "plural";
        case MarkerCategory::Case: return "case";
        case MarkerCategory::Determiner: return "determiner";
        case MarkerCategory::Emphasis: return "emphasis";
        case MarkerCategory::Degree: return "degree";
    }
    return "?";
}

std::optional<PosClass> PosProjection::lookup(std::string_view tag) const {
    if (auto it = narrow_to_basic.find(std::string(tag)); it != narrow_to_basic.end()) {
        return it->second;
    }
    return parse_pos_class(tag);
}

PosClass PosProjection::project(std::string_view tag) const {
    return lookup(tag).value_or(default_class);
}

PosClass project_pos(std::string_view narrow_tag, const PosProjection& projection) {
    return projection.project(narrow_tag);
}

PosProjection default_pos_projection() {
    PosProjection projection;
    auto add = [&](std::initializer_list<const char*> tags, PosClass pos) {
        for (const char* tag : tags) projection.narrow_to_basic.emplace(tag, pos);
    };
    // Narrow tags in the LDC/IL-POSTS style used by common Bangla taggers.
    add({"NC", "NP", "NV", "NST", "NN", "NNP", "NNC"}, PosClass::Noun);
    add({"VM", "VA", "VAUX", "VB"}, PosClass::Verb);
    add({"JJ", "JQ", "ADJ"}, PosClass::Adjective);
    add({"PPR", "PRF", "PRC", "PRL", "PWH", "DAB", "DRL", "DWH", "PRP"},
        PosClass::Pronoun);
    add({"AMN", "ALC", "RB", "ADV"}, PosClass::Adverb);
    add({"PP", "PSP"}, PosClass::Postposition);
    add({"CCD", "CSB", "CCL", "CC"}, PosClass::Conjunction);
    add({"CIN", "INJ", "UH"}, PosClass::Interjection);
    add({"PU", "PUNC", "SYM", "RDF", "RDS", "RDX", "CX", "LC", "LV"},
        PosClass::Other);
    return projection;
}

}  // namespace banlemma
