#include "reltune/weight_config.hpp"

#include <fstream>

#include "reltune/errors.hpp"

namespace reltune {

namespace {

using nlohmann::json;

void check_range(const std::string& name, int value, int lo, int hi) {
    if (value < lo || value > hi) {
        throw InputError("weight '" + name + "' = " + std::to_string(value) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

void check_keys(const std::map<std::string, int>& weights, const std::vector<std::string>& names,
                const char* what) {
    if (weights.size() != names.size()) {
        throw InputError(std::string(what) + " do not match the corpus names");
    }
    for (const auto& name : names) {
        if (!weights.contains(name)) {
            throw InputError(std::string(what) + " missing entry for '" + name + "'");
        }
    }
}

std::map<std::string, int> int_map_from_json(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_object()) {
        throw InputError("weight config missing object \"" + key + "\"");
    }
    std::map<std::string, int> out;
    for (const auto& [name, value] : j[key].items()) {
        if (!value.is_number_integer()) {
            throw InputError("weight config entry '" + name + "' in \"" + key +
                             "\" must be an integer");
        }
        out[name] = value.get<int>();
    }
    return out;
}

int int_from_json(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw InputError("weight config missing integer \"" + key + "\"");
    }
    return j[key].get<int>();
}

} // namespace

WeightConfig uniform_weights(const Corpus& corpus) {
    WeightConfig config;
    for (const auto& name : corpus.field_names) {
        config.field_weights[name] = 1;
    }
    for (const auto& name : corpus.boost_names) {
        config.boost_weights[name] = 1;
    }
    return config;
}

void validate_weights(const WeightConfig& config, const Corpus& corpus) {
    check_keys(config.field_weights, corpus.field_names, "field_weights");
    check_keys(config.boost_weights, corpus.boost_names, "boost_weights");
    for (const auto& [name, value] : config.field_weights) {
        check_range("field_weights." + name, value, 1, 10);
    }
    for (const auto& [name, value] : config.boost_weights) {
        check_range("boost_weights." + name, value, 1, 10);
    }
    check_range("exact_match_boost", config.exact_match_boost, 0, 10);
    check_range("concatenation", config.concatenation, 0, 1);
}

json to_json(const WeightConfig& config) {
    json j;
    j["field_weights"] = config.field_weights;
    j["boost_weights"] = config.boost_weights;
    j["exact_match_boost"] = config.exact_match_boost;
    j["concatenation"] = config.concatenation;
    return j;
}

WeightConfig weight_config_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("weight config must be a JSON object");
    }
    WeightConfig config;
    config.field_weights = int_map_from_json(j, "field_weights");
    config.boost_weights = int_map_from_json(j, "boost_weights");
    config.exact_match_boost = int_from_json(j, "exact_match_boost");
    config.concatenation = int_from_json(j, "concatenation");
    return config;
}

WeightConfig load_weight_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open weight config '" + path.string() + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": invalid JSON: " + e.what());
    }
    return weight_config_from_json(j);
}

void save_weight_config(const WeightConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write weight config '" + path.string() + "'");
    }
    out << to_json(config).dump(2) << '\n';
    if (!out) {
        throw InputError("failed writing weight config '" + path.string() + "'");
    }
}

} // namespace reltune
