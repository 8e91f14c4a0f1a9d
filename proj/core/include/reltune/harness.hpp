#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reltune/ctr_table.hpp"
#include "reltune/metrics.hpp"
#include "reltune/optimizer.hpp"
#include "reltune/search_engine.hpp"
#include "reltune/synth.hpp"

namespace reltune {

/// Batch-run description shared by the evaluate/tune/compare commands.
struct RunConfig {
    std::filesystem::path corpus_path;
    std::filesystem::path ctr_path;
    std::filesystem::path freq_path;
    std::size_t k = 20;
    std::size_t n_trials = 300;
    std::uint64_t seed = 42;
    std::optional<std::size_t> top_queries; // keep only the N most frequent
    std::filesystem::path out_dir = ".";
    std::optional<WeightConfig> initial_config; // enqueued as trial 0 when tuning
};

/// Corpus + relevance data + the evaluation query set (most-frequent-first
/// truncation applied, then sorted by name).
struct Dataset {
    Corpus corpus;
    CtrTable table;
    std::vector<std::string> queries;
};

Dataset load_dataset(const RunConfig& run);

/// Evaluates one config over the dataset and writes report.json.
EvaluationReport run_evaluate(const RunConfig& run, const WeightConfig& config);

struct TuneResult {
    StudyState study;
    WeightConfig best_config;
    double best_objective = 0.0;
};

/// Maximizes the aggregate nDCG over the weight space; writes study.json,
/// best_config.json and best_curve.csv.
TuneResult run_tune(const RunConfig& run);

struct CompareResult {
    EvaluationReport report_a;
    EvaluationReport report_b;
    double absolute_lift = 0.0;
    std::optional<double> relative_lift; // empty when aggregate_a == 0
    nlohmann::json json;
    std::string text; // aligned human-readable table
};

/// Evaluates both configs, reports absolute and relative lift on
/// full-precision aggregates, and lists top-5 current/optimized/ideal
/// rankings for the most frequent queries. Writes compare.json and
/// compare.txt.
CompareResult run_compare(const RunConfig& run, const WeightConfig& config_a,
                          const WeightConfig& config_b);

/// Generates the synthetic dataset files into out_dir.
void run_synth(const SynthSpec& spec, const std::filesystem::path& out_dir);

/// "+9.7%" style display of a relative lift ratio, one decimal.
std::string format_relative_lift(double ratio);

} // namespace reltune
