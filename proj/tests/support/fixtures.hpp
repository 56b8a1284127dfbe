#pragma once

#include <filesystem>
#include <string>

#include "banlemma/resources.hpp"

namespace banlemma::testing {

inline std::filesystem::path data_dir() {
    return std::filesystem::path(BANLEMMA_DATA_DIR);
}

// Bundled sample resources, loaded once.
inline const ResourceBundle& sample_resources() {
    static const ResourceBundle bundle = load_resources(
        data_dir() / "dictionary.json", data_dir() / "markers.json",
        data_dir() / "verbs.json");
    return bundle;
}

}  // namespace banlemma::testing
