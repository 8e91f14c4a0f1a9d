#include "reltune/param_space.hpp"

#include <limits>

#include "reltune/errors.hpp"

namespace reltune {

namespace {

constexpr std::string_view kFieldPrefix = "field:";
constexpr std::string_view kBoostPrefix = "boost:";
constexpr std::string_view kExactMatchDim = "exact_match_boost";
constexpr std::string_view kConcatenationDim = "concatenation";

bool has_prefix(const std::string& name, std::string_view prefix) {
    return std::string_view(name).substr(0, prefix.size()) == prefix;
}

} // namespace

std::uint64_t ParameterSpace::total_configs() const {
    std::uint64_t total = 1;
    for (const auto& dim : dims) {
        const auto size = static_cast<std::uint64_t>(dim.size());
        if (size != 0 && total > std::numeric_limits<std::uint64_t>::max() / size) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= size;
    }
    return total;
}

ParameterSpace weight_space(const Corpus& corpus) {
    ParameterSpace space;
    for (const auto& name : corpus.field_names) {
        space.dims.push_back(Dimension{std::string(kFieldPrefix) + name, 1, 10});
    }
    for (const auto& name : corpus.boost_names) {
        space.dims.push_back(Dimension{std::string(kBoostPrefix) + name, 1, 10});
    }
    space.dims.push_back(Dimension{std::string(kExactMatchDim), 0, 10});
    space.dims.push_back(Dimension{std::string(kConcatenationDim), 0, 1});
    return space;
}

WeightConfig decode_weights(const ParameterSpace& space, std::span<const int> values) {
    if (values.size() != space.dims.size()) {
        throw InternalError("value vector length does not match the parameter space");
    }
    WeightConfig config;
    for (std::size_t i = 0; i < space.dims.size(); ++i) {
        const std::string& name = space.dims[i].name;
        const int value = values[i];
        if (has_prefix(name, kFieldPrefix)) {
            config.field_weights[name.substr(kFieldPrefix.size())] = value;
        } else if (has_prefix(name, kBoostPrefix)) {
            config.boost_weights[name.substr(kBoostPrefix.size())] = value;
        } else if (name == kExactMatchDim) {
            config.exact_match_boost = value;
        } else if (name == kConcatenationDim) {
            config.concatenation = value;
        } else {
            throw InternalError("unknown dimension '" + name + "' in weight space");
        }
    }
    return config;
}

std::vector<int> encode_weights(const ParameterSpace& space, const WeightConfig& config) {
    std::vector<int> values;
    values.reserve(space.dims.size());
    for (const auto& dim : space.dims) {
        if (has_prefix(dim.name, kFieldPrefix)) {
            auto it = config.field_weights.find(dim.name.substr(kFieldPrefix.size()));
            if (it == config.field_weights.end()) {
                throw InputError("config has no field weight for dimension '" + dim.name + "'");
            }
            values.push_back(it->second);
        } else if (has_prefix(dim.name, kBoostPrefix)) {
            auto it = config.boost_weights.find(dim.name.substr(kBoostPrefix.size()));
            if (it == config.boost_weights.end()) {
                throw InputError("config has no boost weight for dimension '" + dim.name + "'");
            }
            values.push_back(it->second);
        } else if (dim.name == kExactMatchDim) {
            values.push_back(config.exact_match_boost);
        } else if (dim.name == kConcatenationDim) {
            values.push_back(config.concatenation);
        } else {
            throw InternalError("unknown dimension '" + dim.name + "' in weight space");
        }
    }
    return values;
}

} // namespace reltune
