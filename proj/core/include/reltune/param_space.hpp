#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reltune/corpus.hpp"
#include "reltune/weight_config.hpp"

namespace reltune {

/// One integer search dimension with inclusive bounds. Binary flags are
/// [0, 1].
struct Dimension {
    std::string name;
    int lo = 0;
    int hi = 0;

    int size() const { return hi - lo + 1; }

    bool operator==(const Dimension&) const = default;
};

struct ParameterSpace {
    std::vector<Dimension> dims;

    /// Product of dimension sizes, saturating at uint64 max.
    std::uint64_t total_configs() const;

    bool operator==(const ParameterSpace&) const = default;
};

/// The tuning space for a corpus: one "field:<name>" dimension in [1, 10]
/// per searchable field, one "boost:<name>" dimension in [1, 10] per
/// boosting feature, "exact_match_boost" in [0, 10] and "concatenation" in
/// {0, 1}.
ParameterSpace weight_space(const Corpus& corpus);

/// Maps a dim-aligned value vector back to a WeightConfig via the dimension
/// names above. Throws InternalError on a malformed space.
WeightConfig decode_weights(const ParameterSpace& space, std::span<const int> values);

/// Inverse of decode_weights. Throws InputError when the config is missing a
/// dimension.
std::vector<int> encode_weights(const ParameterSpace& space, const WeightConfig& config);

} // namespace reltune
