#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "reltune/corpus.hpp"

namespace reltune {

/// The tunable parameter vector: one integer weight per searchable field,
/// one per boosting feature, and the two enhancer settings.
struct WeightConfig {
    std::map<std::string, int> field_weights; // each in [1, 10]
    std::map<std::string, int> boost_weights; // each in [1, 10]
    int exact_match_boost = 0;                // in [0, 10]
    int concatenation = 0;                    // 0 or 1

    bool operator==(const WeightConfig&) const = default;
};

/// All field and boost weights 1, enhancers off. The untuned baseline.
WeightConfig uniform_weights(const Corpus& corpus);

/// Throws InputError unless the config names exactly match the corpus names
/// and every value is inside its range. Scoring itself does not enforce
/// ranges (property tests scale weights beyond them).
void validate_weights(const WeightConfig& config, const Corpus& corpus);

/// Flat JSON object with keys field_weights, boost_weights,
/// exact_match_boost, concatenation.
nlohmann::json to_json(const WeightConfig& config);
WeightConfig weight_config_from_json(const nlohmann::json& j);

WeightConfig load_weight_config(const std::filesystem::path& path);
void save_weight_config(const WeightConfig& config, const std::filesystem::path& path);

} // namespace reltune
