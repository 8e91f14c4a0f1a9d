#include "reltune/field_index.hpp"

#include <algorithm>
#include <map>

#include "reltune/errors.hpp"
#include "reltune/tokenizer.hpp"

namespace reltune {

std::uint32_t FieldIndex::term_frequency(const std::string& token, std::uint32_t doc) const {
    auto it = postings.find(token);
    if (it == postings.end()) {
        return 0;
    }
    const auto& list = it->second;
    auto pos = std::lower_bound(list.begin(), list.end(), doc,
                                [](const Posting& p, std::uint32_t d) { return p.doc < d; });
    if (pos == list.end() || pos->doc != doc) {
        return 0;
    }
    return pos->tf;
}

std::uint32_t FieldIndex::document_frequency(const std::string& token) const {
    auto it = doc_freq.find(token);
    return it == doc_freq.end() ? 0 : it->second;
}

FieldIndexMap build_index(const Corpus& corpus) {
    corpus.validate();

    FieldIndexMap indexes;
    for (const auto& field : corpus.field_names) {
        FieldIndex index;
        index.doc_count = static_cast<std::uint32_t>(corpus.size());
        index.doc_lengths.reserve(corpus.size());
        index.canonical_text.reserve(corpus.size());

        std::uint64_t total_tokens = 0;
        for (std::uint32_t ordinal = 0; ordinal < corpus.size(); ++ordinal) {
            const auto& text = corpus.documents[ordinal].searchable.at(field);
            const auto tokens = tokenize(text);
            index.doc_lengths.push_back(static_cast<std::uint32_t>(tokens.size()));
            index.canonical_text.push_back(canonical_form(tokens));
            total_tokens += tokens.size();

            std::map<std::string, std::uint32_t> counts;
            for (const auto& token : tokens) {
                ++counts[token];
            }
            for (const auto& [token, tf] : counts) {
                index.postings[token].push_back(Posting{ordinal, tf});
            }
        }
        // Documents are visited in ordinal order, so posting lists come out
        // sorted without an extra pass.
        for (const auto& [token, list] : index.postings) {
            index.doc_freq[token] = static_cast<std::uint32_t>(list.size());
        }
        index.avg_length =
            corpus.size() == 0 ? 0.0
                               : static_cast<double>(total_tokens) / static_cast<double>(corpus.size());
        indexes.emplace(field, std::move(index));
    }
    return indexes;
}

} // namespace reltune
