#include "reltune/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "reltune/errors.hpp"

namespace reltune {

double dcg(std::span<const double> relevances) {
    double sum = 0.0;
    for (std::size_t i = 0; i < relevances.size(); ++i) {
        // 1-based position i+1, discount log2((i+1) + 1).
        sum += relevances[i] / std::log2(static_cast<double>(i) + 2.0);
    }
    return sum;
}

double idcg(std::span<const double> relevances, std::size_t k) {
    std::vector<double> sorted(relevances.begin(), relevances.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted.size() > k) {
        sorted.resize(k);
    }
    return dcg(sorted);
}

QueryEvaluation ndcg_query(const RankedList& ranked, const CtrTable& table,
                           const std::string& query, std::size_t k) {
    std::vector<double> relevances;
    relevances.reserve(std::min(k, ranked.size()));
    for (const auto& entry : ranked.entries) {
        if (relevances.size() == k) {
            break;
        }
        relevances.push_back(table.relevance(entry.id, query));
    }

    QueryEvaluation eval;
    eval.query = query;
    eval.k = k;
    eval.dcg = dcg(relevances);
    eval.idcg = idcg(relevances, k);
    eval.ndcg = eval.idcg > 0.0 ? std::min(eval.dcg / eval.idcg, 1.0) : 0.0;
    return eval;
}

double aggregate_ndcg(const SearchEngine& engine, const WeightConfig& weights,
                      std::span<const std::string> queries, const CtrTable& table,
                      std::size_t k) {
    if (queries.empty()) {
        throw InputError("no queries to evaluate");
    }
    double freq_sum = 0.0;
    for (const auto& query : queries) {
        freq_sum += static_cast<double>(table.frequency(query));
    }
    double aggregate = 0.0;
    for (const auto& query : queries) {
        const RankedList ranked = engine.search(query, weights, k);
        const QueryEvaluation eval = ndcg_query(ranked, table, query, k);
        aggregate += (static_cast<double>(table.frequency(query)) / freq_sum) * eval.ndcg;
    }
    return aggregate;
}

EvaluationReport evaluate_config(const SearchEngine& engine, const WeightConfig& weights,
                                 std::span<const std::string> queries, const CtrTable& table,
                                 std::size_t k) {
    if (queries.empty()) {
        throw InputError("no queries to evaluate");
    }
    double freq_sum = 0.0;
    for (const auto& query : queries) {
        freq_sum += static_cast<double>(table.frequency(query));
    }

    EvaluationReport report;
    report.k = k;
    report.min_ndcg = 1.0;
    report.max_ndcg = 0.0;
    for (const auto& query : queries) {
        const RankedList ranked = engine.search(query, weights, k);
        PerQueryResult result;
        result.eval = ndcg_query(ranked, table, query, k);
        result.weight = static_cast<double>(table.frequency(query)) / freq_sum;
        report.aggregate += result.weight * result.eval.ndcg;
        report.min_ndcg = std::min(report.min_ndcg, result.eval.ndcg);
        report.max_ndcg = std::max(report.max_ndcg, result.eval.ndcg);
        report.queries.push_back(std::move(result));
    }

    // The aggregate is a convex combination of per-query values.
    if (report.aggregate < report.min_ndcg - 1e-12 ||
        report.aggregate > report.max_ndcg + 1e-12) {
        throw InternalError("aggregate nDCG " + std::to_string(report.aggregate) +
                            " escaped the per-query range [" + std::to_string(report.min_ndcg) +
                            ", " + std::to_string(report.max_ndcg) + "]");
    }
    return report;
}

nlohmann::json report_to_json(const EvaluationReport& report) {
    nlohmann::json j;
    j["aggregate"] = report.aggregate;
    j["k"] = report.k;
    j["min_ndcg"] = report.min_ndcg;
    j["max_ndcg"] = report.max_ndcg;
    j["queries"] = nlohmann::json::array();
    for (const auto& q : report.queries) {
        nlohmann::json row;
        row["query"] = q.eval.query;
        row["dcg"] = q.eval.dcg;
        row["idcg"] = q.eval.idcg;
        row["ndcg"] = q.eval.ndcg;
        row["f_q"] = q.weight;
        j["queries"].push_back(std::move(row));
    }
    return j;
}

} // namespace reltune
