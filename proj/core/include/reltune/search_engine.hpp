#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reltune/corpus.hpp"
#include "reltune/field_index.hpp"
#include "reltune/weight_config.hpp"

namespace reltune {

inline constexpr double kBm25K1 = 1.2;
inline constexpr double kBm25B = 0.75;

struct ScoredDoc {
    std::string id;
    double score = 0.0;

    bool operator==(const ScoredDoc&) const = default;
};

/// Ordered search results: scores non-increasing, ids distinct, length <= k.
struct RankedList {
    std::vector<ScoredDoc> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

/// Okapi BM25 of a token sequence against one document's field, with
/// k1 = 1.2, b = 0.75 and idf = ln(1 + (N - n + 0.5) / (n + 0.5)).
/// Tokens absent from the field contribute 0; duplicated query tokens
/// contribute once per occurrence.
double bm25_field_score(const FieldIndex& index, std::span<const std::string> query_tokens,
                        std::uint32_t doc);

/// Weighted-field relevance scoring over an immutable corpus.
///
/// The final score of a document is m(doc) * r(query, doc), where r is the
/// weighted sum of per-field BM25 scores (after enhancers) and m is
/// 1 + the weighted sum of min-max-normalized boosting features.
///
/// All methods are pure and const; instances are safe for unrestricted
/// concurrent use once constructed. The corpus must outlive the engine.
class SearchEngine {
public:
    /// Validates the corpus and builds one index per searchable field.
    explicit SearchEngine(const Corpus& corpus);

    const Corpus& corpus() const { return *corpus_; }
    const FieldIndexMap& indexes() const { return indexes_; }

    /// Enhancer pipeline applied to one raw field score:
    /// with concatenation on and a multi-token query, the score becomes the
    /// max of the raw score and the BM25 score of the single joined token;
    /// then an exact whole-field match multiplies by (1 + exact_match_boost).
    double apply_enhancers(const std::string& query, std::uint32_t doc, const std::string& field,
                           const WeightConfig& weights, double raw_score) const;

    /// Weighted sum of enhanced per-field BM25 scores.
    double text_relevance(const std::string& query, std::uint32_t doc,
                          const WeightConfig& weights) const;

    /// 1 + sum_j u_j * norm_j(doc); norm_j is min-max over the corpus and
    /// identically 0 for a feature constant across the corpus. Always >= 1.
    double magnitude_boost(std::uint32_t doc, const WeightConfig& weights) const;

    /// magnitude_boost(doc) * text_relevance(query, doc).
    double final_score(const std::string& query, std::uint32_t doc,
                       const WeightConfig& weights) const;

    /// Top-k documents by final score, descending. Zero-score documents are
    /// excluded; ties break by ascending document id.
    RankedList search(const std::string& query, const WeightConfig& weights, std::size_t k) const;

private:
    struct PreparedQuery {
        std::vector<std::string> tokens;
        std::vector<std::string> concat_token; // single joined token, when tokens >= 2
        std::string canonical;
    };

    PreparedQuery prepare(const std::string& query) const;
    double enhance(const PreparedQuery& query, std::uint32_t doc, const FieldIndex& index,
                   const WeightConfig& weights, double raw_score) const;
    double enhanced_field_score(const PreparedQuery& query, std::uint32_t doc,
                                const FieldIndex& index, const WeightConfig& weights) const;
    double text_relevance_prepared(const PreparedQuery& query, std::uint32_t doc,
                                   const WeightConfig& weights) const;

    const Corpus* corpus_;
    FieldIndexMap indexes_;
    std::map<std::string, std::pair<double, double>> boost_range_; // name -> (min, max)
};

} // namespace reltune
