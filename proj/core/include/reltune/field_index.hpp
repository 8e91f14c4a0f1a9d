#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "reltune/corpus.hpp"

namespace reltune {

struct Posting {
    std::uint32_t doc = 0; // ordinal into Corpus::documents
    std::uint32_t tf = 0;

    bool operator==(const Posting&) const = default;
};

/// Inverted index and statistics for one searchable field.
///
/// Invariants: posting lists are sorted by doc ordinal, doc_freq[t] equals
/// postings[t].size(), and avg_length is the mean of doc_lengths.
struct FieldIndex {
    std::unordered_map<std::string, std::vector<Posting>> postings;
    std::unordered_map<std::string, std::uint32_t> doc_freq;
    std::vector<std::uint32_t> doc_lengths;
    std::vector<std::string> canonical_text; // per-doc tokens joined with ' '
    double avg_length = 0.0;
    std::uint32_t doc_count = 0;

    /// Term frequency of token in one document; 0 when absent.
    std::uint32_t term_frequency(const std::string& token, std::uint32_t doc) const;

    /// Number of documents containing the token in this field.
    std::uint32_t document_frequency(const std::string& token) const;

    bool operator==(const FieldIndex&) const = default;
};

using FieldIndexMap = std::map<std::string, FieldIndex>;

/// Builds one FieldIndex per searchable field. Deterministic given the
/// corpus; throws InputError when corpus invariants do not hold.
FieldIndexMap build_index(const Corpus& corpus);

} // namespace reltune
