#include "reltune/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "reltune/corpus_io.hpp"
#include "reltune/errors.hpp"
#include "reltune/param_space.hpp"

namespace reltune {

namespace {

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw InputError("failed writing '" + path.string() + "'");
    }
}

std::string fixed(double value, int decimals) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

std::string pad(std::string text, std::size_t width) {
    if (text.size() < width) {
        text.append(width - text.size(), ' ');
    }
    return text;
}

/// Observed documents for a query sorted by descending CTR, ties by id.
std::vector<std::pair<std::string, double>> ideal_ranking(const CtrTable& table,
                                                          const std::string& query,
                                                          std::size_t k) {
    std::vector<std::pair<std::string, double>> docs;
    auto it = table.entries().find(query);
    if (it != table.entries().end()) {
        for (const auto& [doc_id, cell] : it->second) {
            docs.emplace_back(doc_id, static_cast<double>(cell.clicks) /
                                          static_cast<double>(cell.impressions));
        }
    }
    std::sort(docs.begin(), docs.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) {
            return a.second > b.second;
        }
        return a.first < b.first;
    });
    if (docs.size() > k) {
        docs.resize(k);
    }
    return docs;
}

} // namespace

Dataset load_dataset(const RunConfig& run) {
    Dataset ds;
    ds.corpus = load_corpus(run.corpus_path);
    ds.table = load_ctr_table(run.ctr_path, run.freq_path);
    if (run.k == 0) {
        throw InputError("k must be >= 1");
    }

    std::vector<std::string> queries = ds.table.queries_by_frequency();
    if (run.top_queries && *run.top_queries < queries.size()) {
        queries.resize(*run.top_queries);
    }
    std::sort(queries.begin(), queries.end());
    ds.queries = std::move(queries);
    if (ds.queries.empty()) {
        throw InputError("the frequency file defines no queries");
    }
    return ds;
}

EvaluationReport run_evaluate(const RunConfig& run, const WeightConfig& config) {
    const Dataset ds = load_dataset(run);
    validate_weights(config, ds.corpus);
    const SearchEngine engine(ds.corpus);
    const EvaluationReport report =
        evaluate_config(engine, config, ds.queries, ds.table, run.k);

    std::filesystem::create_directories(run.out_dir);
    write_text(run.out_dir / "report.json", report_to_json(report).dump(2) + "\n");
    return report;
}

TuneResult run_tune(const RunConfig& run) {
    if (run.n_trials == 0) {
        throw InputError("n_trials must be >= 1");
    }
    const Dataset ds = load_dataset(run);
    const SearchEngine engine(ds.corpus);
    const ParameterSpace space = weight_space(ds.corpus);

    std::vector<std::vector<int>> initial;
    if (run.initial_config) {
        validate_weights(*run.initial_config, ds.corpus);
        initial.push_back(encode_weights(space, *run.initial_config));
    }

    const ObjectiveFn objective = [&](std::span<const int> values) {
        const WeightConfig config = decode_weights(space, values);
        return aggregate_ndcg(engine, config, ds.queries, ds.table, run.k);
    };

    TuneResult result;
    result.study = optimize(space, objective, run.n_trials, run.seed, {}, initial);
    result.best_config = decode_weights(space, result.study.best().values);
    result.best_objective = result.study.best().objective;

    std::filesystem::create_directories(run.out_dir);
    write_text(run.out_dir / "study.json", study_to_json(result.study).dump(2) + "\n");
    save_weight_config(result.best_config, run.out_dir / "best_config.json");
    write_text(run.out_dir / "best_curve.csv", best_curve_csv(result.study));
    return result;
}

std::string format_relative_lift(double ratio) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%+.1f%%", ratio * 100.0);
    return buffer;
}

CompareResult run_compare(const RunConfig& run, const WeightConfig& config_a,
                          const WeightConfig& config_b) {
    const Dataset ds = load_dataset(run);
    validate_weights(config_a, ds.corpus);
    validate_weights(config_b, ds.corpus);
    const SearchEngine engine(ds.corpus);

    CompareResult result;
    result.report_a = evaluate_config(engine, config_a, ds.queries, ds.table, run.k);
    result.report_b = evaluate_config(engine, config_b, ds.queries, ds.table, run.k);
    result.absolute_lift = result.report_b.aggregate - result.report_a.aggregate;
    if (result.report_a.aggregate > 0.0) {
        result.relative_lift = result.report_b.aggregate / result.report_a.aggregate - 1.0;
    }

    // Side-by-side top-5 panels for the most frequent evaluated queries.
    std::vector<std::string> panel_queries = ds.queries;
    std::sort(panel_queries.begin(), panel_queries.end(),
              [&](const std::string& a, const std::string& b) {
                  const auto fa = ds.table.frequency(a);
                  const auto fb = ds.table.frequency(b);
                  if (fa != fb) {
                      return fa > fb;
                  }
                  return a < b;
              });
    constexpr std::size_t kPanelQueries = 5;
    constexpr std::size_t kPanelDepth = 5;
    if (panel_queries.size() > kPanelQueries) {
        panel_queries.resize(kPanelQueries);
    }

    nlohmann::json j;
    j["aggregate_a"] = result.report_a.aggregate;
    j["aggregate_b"] = result.report_b.aggregate;
    j["absolute_lift"] = result.absolute_lift;
    j["relative_lift"] =
        result.relative_lift ? nlohmann::json(*result.relative_lift) : nlohmann::json(nullptr);
    j["k"] = run.k;
    j["per_query"] = nlohmann::json::array();
    for (std::size_t i = 0; i < result.report_a.queries.size(); ++i) {
        const auto& qa = result.report_a.queries[i];
        const auto& qb = result.report_b.queries[i];
        j["per_query"].push_back({{"query", qa.eval.query},
                                  {"f_q", qa.weight},
                                  {"ndcg_a", qa.eval.ndcg},
                                  {"ndcg_b", qb.eval.ndcg}});
    }

    std::string text;
    text += "aggregate nDCG  current:   " + fixed(result.report_a.aggregate, 6) + "\n";
    text += "aggregate nDCG  optimized: " + fixed(result.report_b.aggregate, 6) + "\n";
    text += "lift: " + (result.absolute_lift < 0 ? "" : std::string("+")) +
            fixed(result.absolute_lift, 6) + " absolute";
    if (result.relative_lift) {
        text += ", " + format_relative_lift(*result.relative_lift) + " relative";
    } else {
        text += ", relative lift undefined (baseline aggregate is 0)";
    }
    text += "\n";

    j["panels"] = nlohmann::json::array();
    constexpr std::size_t kColWidth = 26;
    for (const auto& query : panel_queries) {
        const RankedList current = engine.search(query, config_a, kPanelDepth);
        const RankedList optimized = engine.search(query, config_b, kPanelDepth);
        const auto ideal = ideal_ranking(ds.table, query, kPanelDepth);

        nlohmann::json panel;
        panel["query"] = query;
        panel["freq"] = ds.table.frequency(query);
        auto ranked_json = [&](const RankedList& ranked) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& entry : ranked.entries) {
                rows.push_back({{"id", entry.id},
                                {"score", entry.score},
                                {"ctr", ds.table.relevance(entry.id, query)}});
            }
            return rows;
        };
        panel["current"] = ranked_json(current);
        panel["optimized"] = ranked_json(optimized);
        panel["ideal"] = nlohmann::json::array();
        for (const auto& [doc_id, ctr] : ideal) {
            panel["ideal"].push_back({{"id", doc_id}, {"ctr", ctr}});
        }
        j["panels"].push_back(std::move(panel));

        text += "\nquery \"" + query + "\"  (freq " +
                std::to_string(ds.table.frequency(query)) + ")\n";
        text += "  rank  " + pad("current", kColWidth) + pad("optimized", kColWidth) + "ideal\n";
        const std::size_t rows =
            std::max({current.size(), optimized.size(), ideal.size(), std::size_t{1}});
        for (std::size_t r = 0; r < rows; ++r) {
            auto ranked_cell = [&](const RankedList& ranked) {
                if (r >= ranked.size()) {
                    return std::string("-");
                }
                const auto& entry = ranked.entries[r];
                return entry.id + " ctr=" + fixed(ds.table.relevance(entry.id, query), 4);
            };
            std::string ideal_cell =
                r < ideal.size() ? ideal[r].first + " ctr=" + fixed(ideal[r].second, 4)
                                 : std::string("-");
            text += "  " + pad(std::to_string(r + 1), 6) + pad(ranked_cell(current), kColWidth) +
                    pad(ranked_cell(optimized), kColWidth) + ideal_cell + "\n";
        }
    }

    result.json = std::move(j);
    result.text = std::move(text);

    std::filesystem::create_directories(run.out_dir);
    write_text(run.out_dir / "compare.json", result.json.dump(2) + "\n");
    write_text(run.out_dir / "compare.txt", result.text);
    return result;
}

void run_synth(const SynthSpec& spec, const std::filesystem::path& out_dir) {
    write_synthetic(generate_synthetic(spec), out_dir);
}

} // namespace reltune
