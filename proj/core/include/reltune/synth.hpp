#pragma once

#include <cstdint>
#include <filesystem>

#include "reltune/corpus.hpp"
#include "reltune/ctr_table.hpp"
#include "reltune/weight_config.hpp"

namespace reltune {

/// The planted configuration used when none is supplied: strong title and
/// keyword weights, a dominant popularity boost, both enhancers active.
WeightConfig default_hidden_config();

/// Recipe for a synthetic dataset with a planted optimum. Searches run with
/// hidden_config assign each returned document a CTR that decays
/// geometrically with its rank (0.8 * 0.7^(rank-1)), sampled binomially at
/// 200 impressions; query frequencies follow a Zipf(1.1) profile. Output is
/// fully determined by the seed.
struct SynthSpec {
    std::size_t n_docs = 200;
    std::size_t n_queries = 50;
    std::size_t k = 20; // ranking depth used when assigning CTRs
    std::uint64_t seed = 42;
    WeightConfig hidden_config = default_hidden_config();
};

struct SynthDataset {
    Corpus corpus;
    CtrTable table;
    WeightConfig hidden_config;
};

SynthDataset generate_synthetic(const SynthSpec& spec);

/// Writes corpus.jsonl, ctr.csv, freq.csv and hidden_config.json.
void write_synthetic(const SynthDataset& data, const std::filesystem::path& out_dir);

} // namespace reltune
