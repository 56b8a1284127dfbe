#include "banlemma/resources.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "banlemma/errors.hpp"
#include "banlemma/text.hpp"

namespace banlemma {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open resource file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(std::string_view text, std::string_view origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedResource(std::string(origin) + ": " + e.what());
    }
}

void require_object(const json& value, std::string_view origin, std::string_view what) {
    if (!value.is_object()) {
        throw MalformedResource(std::string(origin) + ": " + std::string(what) +
                                " must be a JSON object");
    }
}

// NFC-normalizes and validates one marker/suffix entry.
std::string marker_string(const json& value, std::string_view origin,
                          std::string_view list_name) {
    if (!value.is_string()) {
        throw MalformedResource(std::string(origin) + ": non-string entry in " +
                                std::string(list_name) + " list");
    }
    std::string marker = text::nfc(value.get<std::string>());
    if (marker.empty()) {
        throw EmptyMarker(std::string(origin) + ": empty marker in " +
                          std::string(list_name) + " list");
    }
    return marker;
}

std::vector<std::string> marker_list(const json& value, std::string_view origin,
                                     std::string_view list_name) {
    if (!value.is_array()) {
        throw MalformedResource(std::string(origin) + ": " + std::string(list_name) +
                                " must be an array of strings");
    }
    std::vector<std::string> markers;
    markers.reserve(value.size());
    for (const json& entry : value) {
        markers.push_back(marker_string(entry, origin, list_name));
    }
    sort_markers(markers);
    if (markers.empty()) {
        throw MalformedResource(std::string(origin) + ": " + std::string(list_name) +
                                " list is empty");
    }
    return markers;
}

// Loads one word -> lemma object, enforcing NFC and non-emptiness, and
// rejecting keys that collide with a different lemma.
LemmaCluster lemma_map(const json& value, std::string_view origin,
                       std::string_view cluster_name) {
    require_object(value, origin, cluster_name);
    LemmaCluster cluster;
    cluster.reserve(value.size());
    for (const auto& [raw_word, raw_lemma] : value.items()) {
        if (!raw_lemma.is_string()) {
            throw MalformedResource(std::string(origin) + ": non-string lemma for '" +
                                    raw_word + "' in " + std::string(cluster_name));
        }
        std::string word = text::nfc(raw_word);
        std::string lemma = text::nfc(raw_lemma.get<std::string>());
        if (word.empty() || lemma.empty()) {
            throw MalformedResource(std::string(origin) + ": empty word or lemma in " +
                                    std::string(cluster_name));
        }
        auto [it, inserted] = cluster.emplace(word, lemma);
        if (!inserted && it->second != lemma) {
            throw ConflictingEntry(std::string(origin) + ": key '" + word + "' in " +
                                   std::string(cluster_name) + " maps to both '" +
                                   it->second + "' and '" + lemma + "'");
        }
    }
    return cluster;
}

// Every lemma value must itself be a key mapping to itself; absent entries
// are filled in, contradictions are load errors. This is what makes
// re-lemmatizing a lemma a fixed point.
void complete_self_entries(LemmaCluster& cluster, std::string_view origin,
                           std::string_view cluster_name) {
    std::vector<std::string> lemmas;
    lemmas.reserve(cluster.size());
    for (const auto& [word, lemma] : cluster) lemmas.push_back(lemma);
    for (const std::string& lemma : lemmas) {
        auto [it, inserted] = cluster.emplace(lemma, lemma);
        if (!inserted && it->second != lemma) {
            throw ConflictingEntry(std::string(origin) + ": lemma '" + lemma + "' in " +
                                   std::string(cluster_name) +
                                   "' is itself an entry mapping to '" + it->second + "'");
        }
    }
}

constexpr std::array<std::pair<std::string_view, PosClass>, kClusterCount>
    kClusterKeys = {{
        {"nouns", PosClass::Noun},
        {"pronouns", PosClass::Pronoun},
        {"verbs", PosClass::Verb},
        {"adjectives", PosClass::Adjective},
        {"adverbs", PosClass::Adverb},
        {"postpositions", PosClass::Postposition},
    }};

}  // namespace

std::size_t cluster_index(PosClass pos) {
    switch (pos) {
        case PosClass::Noun: return 0;
        case PosClass::Pronoun: return 1;
        case PosClass::Verb: return 2;
        case PosClass::Adjective: return 3;
        case PosClass::Adverb: return 4;
        case PosClass::Postposition: return 5;
        default: return kNoCluster;
    }
}

const LemmaCluster* LemmaDictionary::cluster(PosClass pos) const {
    std::size_t index = cluster_index(pos);
    return index == kNoCluster ? nullptr : &clusters[index];
}

LemmaCluster* LemmaDictionary::cluster(PosClass pos) {
    std::size_t index = cluster_index(pos);
    return index == kNoCluster ? nullptr : &clusters[index];
}

std::size_t LemmaDictionary::size() const {
    std::size_t total = 0;
    for (const LemmaCluster& cluster : clusters) total += cluster.size();
    return total;
}

void sort_markers(std::vector<std::string>& markers) {
    std::sort(markers.begin(), markers.end(),
              [](const std::string& a, const std::string& b) {
                  std::size_t la = text::codepoint_count(a);
                  std::size_t lb = text::codepoint_count(b);
                  if (la != lb) return la > lb;
                  return a < b;
              });
    markers.erase(std::unique(markers.begin(), markers.end()), markers.end());
}

MarkerSet parse_markers(std::string_view json_text, std::string_view origin) {
    json root = parse_json(json_text, origin);
    require_object(root, origin, "markers file");
    MarkerSet markers;
    for (const auto& [key, value] : root.items()) {
        bool known = false;
        for (MarkerCategory category : kAllMarkerCategories) {
            if (key == category_key(category)) {
                markers.of(category) = marker_list(value, origin, key);
                known = true;
                break;
            }
        }
        if (!known) {
            throw MalformedResource(std::string(origin) + ": unknown marker category '" +
                                    key + "'");
        }
    }
    for (MarkerCategory category : kAllMarkerCategories) {
        if (markers.of(category).empty()) {
            throw MalformedResource(std::string(origin) + ": missing marker category '" +
                                    std::string(category_key(category)) + "'");
        }
    }
    return markers;
}

LemmaDictionary parse_dictionary(std::string_view json_text, std::string_view origin) {
    json root = parse_json(json_text, origin);
    require_object(root, origin, "dictionary file");
    LemmaDictionary dictionary;
    for (const auto& [key, value] : root.items()) {
        bool known = false;
        for (const auto& [cluster_key, pos] : kClusterKeys) {
            if (key == cluster_key) {
                LemmaCluster& cluster = *dictionary.cluster(pos);
                cluster = lemma_map(value, origin, key);
                complete_self_entries(cluster, origin, key);
                known = true;
                break;
            }
        }
        if (!known) {
            throw MalformedResource(std::string(origin) + ": unknown PoS cluster '" +
                                    key + "'");
        }
    }
    return dictionary;
}

VerbResources parse_verbs(std::string_view json_text, std::string_view origin) {
    json root = parse_json(json_text, origin);
    require_object(root, origin, "verb resource file");
    VerbResources verbs;
    bool saw_suffixes = false;
    bool saw_roots = false;
    for (const auto& [key, value] : root.items()) {
        if (key == "suffixes") {
            verbs.suffixes = marker_list(value, origin, key);
            saw_suffixes = true;
        } else if (key == "root_lemma") {
            require_object(value, origin, key);
            for (const auto& [raw_root, raw_lemma] : value.items()) {
                if (!raw_lemma.is_string()) {
                    throw MalformedResource(std::string(origin) +
                                            ": non-string lemma in root_lemma");
                }
                std::string root_form = text::nfc(raw_root);
                std::string lemma = text::nfc(raw_lemma.get<std::string>());
                if (root_form.empty() || lemma.empty()) {
                    throw MalformedResource(std::string(origin) +
                                            ": empty root or lemma in root_lemma");
                }
                auto [it, inserted] = verbs.root_lemma.emplace(root_form, lemma);
                if (!inserted && it->second != lemma) {
                    throw ConflictingEntry(std::string(origin) + ": root '" + root_form +
                                           "' maps to both '" + it->second + "' and '" +
                                           lemma + "'");
                }
            }
            saw_roots = true;
        } else {
            throw MalformedResource(std::string(origin) + ": unknown key '" + key +
                                    "' in verb resource file");
        }
    }
    if (!saw_suffixes || !saw_roots) {
        throw MalformedResource(std::string(origin) +
                                ": verb resource file needs 'suffixes' and 'root_lemma'");
    }
    return verbs;
}

PosProjection parse_projection(std::string_view json_text, std::string_view origin) {
    json root = parse_json(json_text, origin);
    require_object(root, origin, "projection file");
    PosProjection projection;
    for (const auto& [tag, value] : root.items()) {
        if (!value.is_string()) {
            throw MalformedResource(std::string(origin) + ": non-string class for tag '" +
                                    tag + "'");
        }
        auto pos = parse_pos_class(value.get<std::string>());
        if (!pos) {
            throw MalformedResource(std::string(origin) + ": '" + value.get<std::string>() +
                                    "' does not name a PoS class (tag '" + tag + "')");
        }
        std::string narrow = text::nfc(tag);
        if (narrow.empty()) {
            throw MalformedResource(std::string(origin) + ": empty narrow tag");
        }
        projection.narrow_to_basic[narrow] = *pos;
    }
    return projection;
}

MarkerSet load_markers(const std::filesystem::path& path) {
    return parse_markers(read_file(path), path.string());
}

LemmaDictionary load_dictionary(const std::filesystem::path& path) {
    return parse_dictionary(read_file(path), path.string());
}

VerbResources load_verbs(const std::filesystem::path& path) {
    return parse_verbs(read_file(path), path.string());
}

PosProjection load_projection(const std::filesystem::path& path) {
    return parse_projection(read_file(path), path.string());
}

ResourceBundle load_resources(const std::filesystem::path& dictionary_path,
                              const std::filesystem::path& markers_path,
                              const std::filesystem::path& verb_path,
                              const std::optional<std::filesystem::path>& projection_path) {
    ResourceBundle bundle;
    bundle.dictionary = load_dictionary(dictionary_path);
    bundle.markers = load_markers(markers_path);
    bundle.verbs = load_verbs(verb_path);
    bundle.projection =
        projection_path ? load_projection(*projection_path) : default_pos_projection();
    return bundle;
}

namespace {

json sorted_object(const LemmaCluster& cluster) {
    // json objects keep keys sorted; rely on that for deterministic output
    json object = json::object();
    for (const auto& [word, lemma] : cluster) object[word] = lemma;
    return object;
}

}  // namespace

std::string serialize_markers(const MarkerSet& markers) {
    json root = json::object();
    for (MarkerCategory category : kAllMarkerCategories) {
        root[std::string(category_key(category))] = markers.of(category);
    }
    return root.dump(2);
}

std::string serialize_dictionary(const LemmaDictionary& dictionary) {
    json root = json::object();
    for (const auto& [cluster_key, pos] : kClusterKeys) {
        root[std::string(cluster_key)] = sorted_object(*dictionary.cluster(pos));
    }
    return root.dump(2);
}

std::string serialize_verbs(const VerbResources& verbs) {
    json root = json::object();
    root["suffixes"] = verbs.suffixes;
    json roots = json::object();
    for (const auto& [root_form, lemma] : verbs.root_lemma) roots[root_form] = lemma;
    root["root_lemma"] = roots;
    return root.dump(2);
}

}  // namespace banlemma
