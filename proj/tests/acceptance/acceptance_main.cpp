// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each. Exit status 0 only when every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "reltune/corpus_io.hpp"
#include "reltune/harness.hpp"
#include "reltune/metrics.hpp"
#include "reltune/optimizer.hpp"
#include "reltune/param_space.hpp"
#include "reltune/rng.hpp"
#include "reltune/search_engine.hpp"
#include "reltune/synth.hpp"
#include "reltune/tokenizer.hpp"

#include "../unit/test_util.hpp"

using namespace reltune;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

// 1. idcg equals the exhaustive permutation maximum on 1000 random lists of
//    length <= 6, exactly to 1e-12.
Outcome check_permutation_oracle() {
    Rng rng(301);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t len = static_cast<std::size_t>(rng.uniform_int(0, 6));
        std::vector<double> relevances;
        for (std::size_t j = 0; j < len; ++j) {
            relevances.push_back(rng.uniform01());
        }
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, 8));

        std::vector<double> sorted = relevances;
        std::sort(sorted.begin(), sorted.end());
        double best = 0.0;
        do {
            std::vector<double> head(
                sorted.begin(),
                sorted.begin() + static_cast<std::ptrdiff_t>(std::min(k, sorted.size())));
            best = std::max(best, dcg(head));
        } while (std::next_permutation(sorted.begin(), sorted.end()));

        const double got = idcg(relevances, k);
        if (std::abs(got - best) > 1e-12) {
            return {false, "mismatch " + std::to_string(got) + " vs " + std::to_string(best)};
        }
    }
    return {true, "1000 lists"};
}

// 2. nDCG via natural log equals nDCG via log2 within 1e-12 on 1000 random
//    instances.
Outcome check_log_base_invariance() {
    Rng rng(307);
    auto dcg_ln = [](std::span<const double> rel) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rel.size(); ++i) {
            sum += rel[i] / std::log(static_cast<double>(i) + 2.0);
        }
        return sum;
    };
    int evaluated = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t len = 1 + static_cast<std::size_t>(rng.uniform_int(0, 19));
        std::vector<double> relevances;
        for (std::size_t j = 0; j < len; ++j) {
            relevances.push_back(rng.uniform01() < 0.25 ? 0.0 : rng.uniform01());
        }
        const double idcg_log2 = idcg(relevances, len);
        std::vector<double> sorted = relevances;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        const double idcg_nat = dcg_ln(sorted);
        if (idcg_log2 == 0.0 || idcg_nat == 0.0) {
            continue;
        }
        ++evaluated;
        const double ndcg_log2 = dcg(relevances) / idcg_log2;
        const double ndcg_nat = dcg_ln(relevances) / idcg_nat;
        if (std::abs(ndcg_log2 - ndcg_nat) > 1e-12) {
            return {false, "base mismatch at instance " + std::to_string(i)};
        }
    }
    return {true, std::to_string(evaluated) + " nonzero instances"};
}

// 3. Scaling every field weight by 2 or 3 leaves all search orderings
//    identical on a 50-doc corpus, 100 queries.
Outcome check_ranking_invariance() {
    Rng rng(311);
    const Corpus corpus = testutil::make_random_corpus(rng, 50);
    const SearchEngine engine(corpus);
    for (int q = 0; q < 100; ++q) {
        const WeightConfig config = testutil::random_config(rng, corpus);
        const std::string query = testutil::random_query(rng);
        const RankedList base = engine.search(query, config, corpus.size());
        for (int c : {2, 3}) {
            WeightConfig scaled = config;
            for (auto& [name, w] : scaled.field_weights) {
                (void)name;
                w *= c;
            }
            const RankedList got = engine.search(query, scaled, corpus.size());
            if (got.size() != base.size()) {
                return {false, "result size changed for '" + query + "'"};
            }
            for (std::size_t r = 0; r < got.size(); ++r) {
                if (got.entries[r].id != base.entries[r].id) {
                    return {false, "order changed for '" + query + "' at rank " +
                                       std::to_string(r + 1)};
                }
            }
        }
    }
    return {true, "100 queries, c in {2, 3}"};
}

// 4. search equals a brute-force sort of final_score over all documents.
Outcome check_brute_force_equivalence() {
    Rng rng(313);
    const Corpus corpus = testutil::make_random_corpus(rng, 50);
    const SearchEngine engine(corpus);
    for (int q = 0; q < 100; ++q) {
        const WeightConfig config = testutil::random_config(rng, corpus);
        const std::string query = testutil::random_query(rng);
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, 50));

        std::vector<ScoredDoc> oracle;
        for (std::uint32_t doc = 0; doc < corpus.size(); ++doc) {
            const double score = engine.final_score(query, doc, config);
            if (score > 0.0) {
                oracle.push_back(ScoredDoc{corpus.documents[doc].id, score});
            }
        }
        std::sort(oracle.begin(), oracle.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
            if (a.score != b.score) {
                return a.score > b.score;
            }
            return a.id < b.id;
        });
        if (oracle.size() > k) {
            oracle.resize(k);
        }
        if (engine.search(query, config, k).entries != oracle) {
            return {false, "divergence for '" + query + "', k=" + std::to_string(k)};
        }
    }
    return {true, "100 queries, exact ordering"};
}

// 5. On the 27-config separable space, optimize(60 trials) finds the
//    exhaustive optimum in at least 18 of 20 seeded runs.
Outcome check_tpe_vs_exhaustive() {
    ParameterSpace space;
    space.dims = {Dimension{"x", 1, 3}, Dimension{"y", 1, 3}, Dimension{"z", 1, 3}};
    const ObjectiveFn objective = [](std::span<const int> v) {
        static constexpr double gain[] = {0.0, 0.2, 1.0};
        return gain[v[0] - 1] + gain[v[1] - 1] + gain[v[2] - 1];
    };
    const auto [best_values, best_objective] = exhaustive_search(space, objective);
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const StudyState study = optimize(space, objective, 60, seed);
        if (study.best().values == best_values) {
            ++hits;
        }
        if (study.best().objective > best_objective) {
            return {false, "study exceeded the exhaustive optimum"};
        }
    }
    if (hits < 18) {
        return {false, "optimum found in only " + std::to_string(hits) + "/20 runs"};
    }
    return {true, std::to_string(hits) + "/20 runs found the optimum"};
}

// 6. Planted-config recovery at full scale: tune(300) lands within 0.02 of
//    the hidden config's aggregate and beats the all-ones default by 0.05.
Outcome check_planted_recovery() {
    const auto dir = fresh_dir("reltune_acc_planted");
    SynthSpec spec;
    spec.n_docs = 200;
    spec.n_queries = 50;
    spec.seed = 42;
    run_synth(spec, dir / "data");

    RunConfig run;
    run.corpus_path = dir / "data" / "corpus.jsonl";
    run.ctr_path = dir / "data" / "ctr.csv";
    run.freq_path = dir / "data" / "freq.csv";
    run.out_dir = dir / "out";
    run.n_trials = 300;
    run.seed = 42;

    const WeightConfig hidden = load_weight_config(dir / "data" / "hidden_config.json");
    const double hidden_aggregate = run_evaluate(run, hidden).aggregate;
    const Corpus corpus = load_corpus(run.corpus_path);
    const double ones_aggregate = run_evaluate(run, uniform_weights(corpus)).aggregate;

    const TuneResult tuned = run_tune(run);

    char detail[160];
    std::snprintf(detail, sizeof(detail), "hidden %.4f, tuned %.4f, all-ones %.4f",
                  hidden_aggregate, tuned.best_objective, ones_aggregate);
    if (tuned.best_objective < hidden_aggregate - 0.02) {
        return {false, std::string("tuned too far below hidden: ") + detail};
    }
    if (tuned.best_objective < ones_aggregate + 0.05) {
        return {false, std::string("lift over all-ones below 0.05: ") + detail};
    }
    return {true, detail};
}

// 7. synth -> tune -> compare with fixed seeds is byte-reproducible.
Outcome check_pipeline_determinism() {
    std::vector<std::map<std::string, std::string>> snapshots;
    for (int round = 0; round < 2; ++round) {
        const auto dir = fresh_dir("reltune_acc_determinism");
        SynthSpec spec;
        spec.n_docs = 80;
        spec.n_queries = 25;
        spec.seed = 77;
        run_synth(spec, dir / "data");

        RunConfig run;
        run.corpus_path = dir / "data" / "corpus.jsonl";
        run.ctr_path = dir / "data" / "ctr.csv";
        run.freq_path = dir / "data" / "freq.csv";
        run.out_dir = dir / "out";
        run.n_trials = 60;
        run.seed = 7;
        const TuneResult tuned = run_tune(run);

        const Corpus corpus = load_corpus(run.corpus_path);
        run_compare(run, uniform_weights(corpus), tuned.best_config);

        std::map<std::string, std::string> snapshot;
        for (const char* name : {"data/corpus.jsonl", "data/ctr.csv", "data/freq.csv",
                                 "data/hidden_config.json", "out/study.json",
                                 "out/best_config.json", "out/best_curve.csv",
                                 "out/compare.json", "out/compare.txt"}) {
            snapshot[name] = slurp(dir / name);
        }
        snapshots.push_back(std::move(snapshot));
    }
    for (const auto& [name, bytes] : snapshots[0]) {
        if (bytes.empty()) {
            return {false, name + " is empty"};
        }
        if (snapshots[1].at(name) != bytes) {
            return {false, name + " differs between runs"};
        }
    }
    return {true, std::to_string(snapshots[0].size()) + " files byte-identical"};
}

// 8. With exact_match_boost = 0 and concatenation = 0 the pipeline equals an
//    enhancer-free weighted BM25 sum, exactly.
Outcome check_enhancer_identity() {
    Rng rng(331);
    const Corpus corpus = testutil::make_random_corpus(rng, 40);
    const SearchEngine engine(corpus);
    for (int q = 0; q < 50; ++q) {
        WeightConfig config = testutil::random_config(rng, corpus);
        config.exact_match_boost = 0;
        config.concatenation = 0;
        const std::string query = testutil::random_query(rng);
        const auto tokens = tokenize(query);
        for (std::uint32_t doc = 0; doc < corpus.size(); ++doc) {
            double plain = 0.0;
            for (const auto& field : corpus.field_names) {
                plain += config.field_weights.at(field) *
                         bm25_field_score(engine.indexes().at(field), tokens, doc);
            }
            const double expected =
                plain == 0.0 ? 0.0 : engine.magnitude_boost(doc, config) * plain;
            if (engine.final_score(query, doc, config) != expected) {
                return {false, "enhancer-off pipeline diverged on '" + query + "'"};
            }
        }
    }
    return {true, "50 queries x 40 docs, exact equality"};
}

// 9. The aggregate is a convex combination: it stays inside the per-query
//    [min, max] on every evaluation (also asserted inside evaluate_config).
Outcome check_convex_bound() {
    const auto dir = fresh_dir("reltune_acc_convex");
    SynthSpec spec;
    spec.n_docs = 80;
    spec.n_queries = 25;
    spec.seed = 11;
    run_synth(spec, dir / "data");

    RunConfig run;
    run.corpus_path = dir / "data" / "corpus.jsonl";
    run.ctr_path = dir / "data" / "ctr.csv";
    run.freq_path = dir / "data" / "freq.csv";
    run.out_dir = dir / "out";

    const Corpus corpus = load_corpus(run.corpus_path);
    Rng rng(333);
    for (int i = 0; i < 10; ++i) {
        WeightConfig config = uniform_weights(corpus);
        for (auto& [name, w] : config.field_weights) {
            (void)name;
            w = rng.uniform_int(1, 10);
        }
        for (auto& [name, w] : config.boost_weights) {
            (void)name;
            w = rng.uniform_int(1, 10);
        }
        const EvaluationReport report = run_evaluate(run, config);
        if (report.aggregate < report.min_ndcg - 1e-12 ||
            report.aggregate > report.max_ndcg + 1e-12) {
            return {false, "aggregate escaped [min, max]"};
        }
    }
    return {true, "10 evaluations within bounds"};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double budget_seconds;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "IDCG equals the exhaustive permutation maximum", check_permutation_oracle, 5.0},
        {2, "nDCG is invariant to the logarithm base", check_log_base_invariance, 30.0},
        {3, "uniform field-weight scaling preserves orderings", check_ranking_invariance, 60.0},
        {4, "search matches the brute-force ranking oracle", check_brute_force_equivalence,
         60.0},
        {5, "TPE recovers the exhaustive optimum on 27 configs", check_tpe_vs_exhaustive, 10.0},
        {6, "tuning recovers the planted configuration", check_planted_recovery, 300.0},
        {7, "synth -> tune -> compare is byte-reproducible", check_pipeline_determinism, 120.0},
        {8, "zeroed enhancers equal the enhancer-free pipeline", check_enhancer_identity, 60.0},
        {9, "aggregate nDCG stays within the per-query range", check_convex_bound, 60.0},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > criterion.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " [over time budget " +
                              std::to_string(criterion.budget_seconds) + "s]";
        }
        std::printf("[%s] criterion %d: %s (%.2fs) -- %s\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.id, criterion.name, seconds, outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
