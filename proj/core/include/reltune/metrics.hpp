#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "reltune/ctr_table.hpp"
#include "reltune/search_engine.hpp"

namespace reltune {

/// Discounted cumulative gain of relevances already in rank order:
/// sum over 1-based positions i of rel_i / log2(i + 1).
double dcg(std::span<const double> relevances);

/// DCG of the same relevances sorted descending, truncated to k.
double idcg(std::span<const double> relevances, std::size_t k);

struct QueryEvaluation {
    std::string query;
    double dcg = 0.0;
    double idcg = 0.0;
    double ndcg = 0.0; // dcg/idcg, or 0 when idcg == 0
    std::size_t k = 0;
};

/// Looks up the CTR relevance of each returned document, evaluates DCG over
/// the returned order and IDCG over the descending permutation of the same
/// returned set. A result set with no historically clicked document scores 0.
QueryEvaluation ndcg_query(const RankedList& ranked, const CtrTable& table,
                           const std::string& query, std::size_t k);

/// Frequency-weighted average of per-query nDCG; weights are renormalized
/// over `queries` so the aggregate stays in [0, 1]. Every query must carry a
/// frequency in the table. Evaluation order follows `queries`.
double aggregate_ndcg(const SearchEngine& engine, const WeightConfig& weights,
                      std::span<const std::string> queries, const CtrTable& table, std::size_t k);

struct PerQueryResult {
    QueryEvaluation eval;
    double weight = 0.0; // renormalized frequency weight
};

struct EvaluationReport {
    double aggregate = 0.0;
    std::size_t k = 0;
    std::vector<PerQueryResult> queries;
    double min_ndcg = 0.0;
    double max_ndcg = 0.0;
};

/// Per-query report plus the aggregate. Verifies that the aggregate lies
/// within [min, max] of the per-query values (InternalError otherwise).
EvaluationReport evaluate_config(const SearchEngine& engine, const WeightConfig& weights,
                                 std::span<const std::string> queries, const CtrTable& table,
                                 std::size_t k);

/// JSON form: {"aggregate", "k", "min_ndcg", "max_ndcg",
/// "queries": [{"query", "dcg", "idcg", "ndcg", "f_q"}, ...]}.
nlohmann::json report_to_json(const EvaluationReport& report);

} // namespace reltune
