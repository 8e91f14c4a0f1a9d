#include "reltune/search_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reltune/errors.hpp"
#include "reltune/tokenizer.hpp"

namespace reltune {

double bm25_field_score(const FieldIndex& index, std::span<const std::string> query_tokens,
                        std::uint32_t doc) {
    double score = 0.0;
    const double len = doc < index.doc_lengths.size() ? index.doc_lengths[doc] : 0.0;
    for (const auto& token : query_tokens) {
        auto it = index.postings.find(token);
        if (it == index.postings.end()) {
            continue;
        }
        const auto& list = it->second;
        auto pos = std::lower_bound(list.begin(), list.end(), doc,
                                    [](const Posting& p, std::uint32_t d) { return p.doc < d; });
        if (pos == list.end() || pos->doc != doc) {
            continue;
        }
        const double n = static_cast<double>(list.size());
        const double big_n = static_cast<double>(index.doc_count);
        const double idf = std::log(1.0 + (big_n - n + 0.5) / (n + 0.5));
        const double tf = static_cast<double>(pos->tf);
        // A matching posting implies avg_length > 0.
        const double norm = 1.0 - kBm25B + kBm25B * len / index.avg_length;
        score += idf * (tf * (kBm25K1 + 1.0)) / (tf + kBm25K1 * norm);
    }
    return score;
}

SearchEngine::SearchEngine(const Corpus& corpus) : corpus_(&corpus), indexes_(build_index(corpus)) {
    for (const auto& name : corpus.boost_names) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& doc : corpus.documents) {
            const double v = doc.boosting.at(name);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (corpus.documents.empty()) {
            lo = hi = 0.0;
        }
        boost_range_.emplace(name, std::make_pair(lo, hi));
    }
}

SearchEngine::PreparedQuery SearchEngine::prepare(const std::string& query) const {
    PreparedQuery prepared;
    prepared.tokens = tokenize(query);
    if (prepared.tokens.size() >= 2) {
        prepared.concat_token.push_back(concatenate_tokens(prepared.tokens));
    }
    prepared.canonical = canonical_form(prepared.tokens);
    return prepared;
}

double SearchEngine::enhance(const PreparedQuery& query, std::uint32_t doc,
                             const FieldIndex& index, const WeightConfig& weights,
                             double raw_score) const {
    if (weights.concatenation == 1 && !query.concat_token.empty()) {
        raw_score = std::max(raw_score, bm25_field_score(index, query.concat_token, doc));
    }
    if (weights.exact_match_boost != 0 && index.canonical_text[doc] == query.canonical) {
        raw_score *= 1.0 + static_cast<double>(weights.exact_match_boost);
    }
    return raw_score;
}

double SearchEngine::enhanced_field_score(const PreparedQuery& query, std::uint32_t doc,
                                          const FieldIndex& index,
                                          const WeightConfig& weights) const {
    return enhance(query, doc, index, weights, bm25_field_score(index, query.tokens, doc));
}

double SearchEngine::apply_enhancers(const std::string& query, std::uint32_t doc,
                                     const std::string& field, const WeightConfig& weights,
                                     double raw_score) const {
    return enhance(prepare(query), doc, indexes_.at(field), weights, raw_score);
}

double SearchEngine::text_relevance_prepared(const PreparedQuery& query, std::uint32_t doc,
                                             const WeightConfig& weights) const {
    double total = 0.0;
    for (const auto& field : corpus_->field_names) {
        const double field_score = enhanced_field_score(query, doc, indexes_.at(field), weights);
        total += static_cast<double>(weights.field_weights.at(field)) * field_score;
    }
    return total;
}

double SearchEngine::text_relevance(const std::string& query, std::uint32_t doc,
                                    const WeightConfig& weights) const {
    return text_relevance_prepared(prepare(query), doc, weights);
}

double SearchEngine::magnitude_boost(std::uint32_t doc, const WeightConfig& weights) const {
    double total = 1.0;
    for (const auto& name : corpus_->boost_names) {
        const auto& [lo, hi] = boost_range_.at(name);
        if (hi <= lo) {
            continue; // constant feature, normalized value is 0
        }
        const double v = corpus_->documents[doc].boosting.at(name);
        const double norm = (v - lo) / (hi - lo);
        total += static_cast<double>(weights.boost_weights.at(name)) * norm;
    }
    return total;
}

double SearchEngine::final_score(const std::string& query, std::uint32_t doc,
                                 const WeightConfig& weights) const {
    const double relevance = text_relevance(query, doc, weights);
    if (relevance == 0.0) {
        return 0.0;
    }
    return magnitude_boost(doc, weights) * relevance;
}

RankedList SearchEngine::search(const std::string& query, const WeightConfig& weights,
                                std::size_t k) const {
    RankedList result;
    if (k == 0) {
        return result;
    }
    const PreparedQuery prepared = prepare(query);
    if (prepared.tokens.empty()) {
        return result;
    }

    // Candidate set: every document with at least one matching token in any
    // field. Only candidates can score above zero.
    std::vector<std::uint32_t> candidates;
    const bool use_concat = weights.concatenation == 1 && !prepared.concat_token.empty();
    for (const auto& field : corpus_->field_names) {
        const FieldIndex& index = indexes_.at(field);
        auto collect = [&](const std::string& token) {
            auto it = index.postings.find(token);
            if (it == index.postings.end()) {
                return;
            }
            for (const Posting& posting : it->second) {
                candidates.push_back(posting.doc);
            }
        };
        for (const auto& token : prepared.tokens) {
            collect(token);
        }
        if (use_concat) {
            collect(prepared.concat_token.front());
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    result.entries.reserve(candidates.size());
    for (std::uint32_t doc : candidates) {
        const double relevance = text_relevance_prepared(prepared, doc, weights);
        if (relevance == 0.0) {
            continue;
        }
        const double score = magnitude_boost(doc, weights) * relevance;
        if (score > 0.0) {
            result.entries.push_back(ScoredDoc{corpus_->documents[doc].id, score});
        }
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const ScoredDoc& a, const ScoredDoc& b) {
                  if (a.score != b.score) {
                      return a.score > b.score;
                  }
                  return a.id < b.id;
              });
    if (result.entries.size() > k) {
        result.entries.resize(k);
    }
    return result;
}

} // namespace reltune
