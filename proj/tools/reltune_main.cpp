#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reltune/errors.hpp"
#include "reltune/harness.hpp"
#include "reltune/synth.hpp"
#include "reltune/weight_config.hpp"

namespace {

struct CliOptions {
    reltune::RunConfig run;
    std::string config_path;
    std::string config_b_path;
    std::size_t top_queries = 0;

    // synth
    std::size_t n_docs = 200;
    std::size_t n_queries = 50;
};

void add_dataset_flags(CLI::App& cmd, CliOptions& opts) {
    cmd.add_option("--corpus", opts.run.corpus_path, "Corpus JSON-lines file")->required();
    cmd.add_option("--ctr", opts.run.ctr_path, "CTR CSV file (query,doc_id,clicks,impressions)")
        ->required();
    cmd.add_option("--freq", opts.run.freq_path, "Query frequency CSV file (query,freq)")
        ->required();
    cmd.add_option("--k", opts.run.k, "Ranking depth")->capture_default_str();
    cmd.add_option("--top-queries", opts.top_queries,
                   "Keep only the N most frequent queries");
    cmd.add_option("--out-dir", opts.run.out_dir, "Directory for emitted reports")
        ->capture_default_str();
}

void finalize_run(CliOptions& opts) {
    if (opts.top_queries > 0) {
        opts.run.top_queries = opts.top_queries;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search relevance tuning for weighted-field BM25 ranking"};
    app.require_subcommand(1);

    CliOptions opts;

    auto* synth = app.add_subcommand(
        "synth", "Generate a synthetic corpus + CTR dataset with a planted optimum");
    synth->add_option("--docs", opts.n_docs, "Number of documents")->capture_default_str();
    synth->add_option("--queries", opts.n_queries, "Number of queries")->capture_default_str();
    synth->add_option("--k", opts.run.k, "Ranking depth used when assigning CTRs")
        ->capture_default_str();
    synth->add_option("--seed", opts.run.seed, "RNG seed")->capture_default_str();
    synth->add_option("--config", opts.config_path,
                      "Hidden weight config JSON (defaults to a built-in one)");
    synth->add_option("--out-dir", opts.run.out_dir, "Output directory")->capture_default_str();

    auto* evaluate = app.add_subcommand(
        "evaluate", "Evaluate one weight config: frequency-weighted nDCG report");
    add_dataset_flags(*evaluate, opts);
    evaluate->add_option("--config", opts.config_path, "Weight config JSON")->required();

    auto* tune = app.add_subcommand(
        "tune", "Maximize aggregate nDCG over the weight space with TPE");
    add_dataset_flags(*tune, opts);
    tune->add_option("--trials", opts.run.n_trials, "Optimization budget")
        ->capture_default_str();
    tune->add_option("--seed", opts.run.seed, "RNG seed")->capture_default_str();
    tune->add_option("--config", opts.config_path,
                     "Baseline config JSON, evaluated as trial 0");

    auto* compare = app.add_subcommand(
        "compare", "Compare two weight configs side by side");
    add_dataset_flags(*compare, opts);
    compare->add_option("--config", opts.config_path, "Baseline config JSON")->required();
    compare->add_option("--config-b", opts.config_b_path, "Candidate config JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        finalize_run(opts);

        if (synth->parsed()) {
            reltune::SynthSpec spec;
            spec.n_docs = opts.n_docs;
            spec.n_queries = opts.n_queries;
            spec.k = opts.run.k;
            spec.seed = opts.run.seed;
            if (!opts.config_path.empty()) {
                spec.hidden_config = reltune::load_weight_config(opts.config_path);
            }
            reltune::run_synth(spec, opts.run.out_dir);
            std::cout << "wrote corpus.jsonl, ctr.csv, freq.csv, hidden_config.json to "
                      << opts.run.out_dir.string() << "\n";
        } else if (evaluate->parsed()) {
            const auto config = reltune::load_weight_config(opts.config_path);
            const auto report = reltune::run_evaluate(opts.run, config);
            std::cout << "aggregate nDCG: " << report.aggregate << " over "
                      << report.queries.size() << " queries (report.json written to "
                      << opts.run.out_dir.string() << ")\n";
        } else if (tune->parsed()) {
            if (!opts.config_path.empty()) {
                opts.run.initial_config = reltune::load_weight_config(opts.config_path);
            }
            const auto result = reltune::run_tune(opts.run);
            std::cout << "best aggregate nDCG: " << result.best_objective << " at trial "
                      << result.study.best().number << " of " << result.study.trials.size()
                      << " (study.json, best_config.json, best_curve.csv written to "
                      << opts.run.out_dir.string() << ")\n";
        } else if (compare->parsed()) {
            const auto config_a = reltune::load_weight_config(opts.config_path);
            const auto config_b = reltune::load_weight_config(opts.config_b_path);
            const auto result = reltune::run_compare(opts.run, config_a, config_b);
            std::cout << result.text;
        }
    } catch (const reltune::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
