#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace reltune {

struct CtrCell {
    std::uint64_t clicks = 0;
    std::uint64_t impressions = 0;

    bool operator==(const CtrCell&) const = default;
};

/// Sparse (query, document) -> clicks/impressions relevance data plus
/// per-query search frequencies. Immutable once loaded; concurrent reads
/// are safe.
class CtrTable {
public:
    /// Throws InputError when impressions == 0 or clicks > impressions, and
    /// on a duplicate (query, document) pair.
    void add_entry(const std::string& query, const std::string& doc_id, std::uint64_t clicks,
                   std::uint64_t impressions);

    /// Throws InputError when freq == 0 or the query already has a frequency.
    void set_frequency(const std::string& query, std::uint64_t freq);

    /// Throws InputError when an entry's query has no frequency.
    void validate() const;

    /// clicks / impressions for the pair; 0 when unobserved.
    double ctr(const std::string& doc_id, const std::string& query) const;

    /// Graded relevance of a document for a query. Defined as the CTR.
    double relevance(const std::string& doc_id, const std::string& query) const;

    /// freq(q) divided by the total frequency over all queries in the table.
    /// Throws InputError for a query without a frequency (dataset/workload
    /// mismatch).
    double query_weight(const std::string& query) const;

    /// Raw search-frequency count. Throws InputError for an unknown query.
    std::uint64_t frequency(const std::string& query) const;

    /// All queries with a frequency, ascending by name.
    std::vector<std::string> queries() const;

    /// All queries with a frequency, descending by count, ties ascending by
    /// name.
    std::vector<std::string> queries_by_frequency() const;

    const std::map<std::string, std::map<std::string, CtrCell>>& entries() const {
        return entries_;
    }
    const std::map<std::string, std::uint64_t>& frequencies() const { return query_freq_; }

    bool operator==(const CtrTable&) const = default;

private:
    std::map<std::string, std::map<std::string, CtrCell>> entries_; // query -> doc -> cell
    std::map<std::string, std::uint64_t> query_freq_;
    std::uint64_t freq_total_ = 0;
};

/// Trims surrounding whitespace and lowercases. Queries are matched
/// byte-exactly after this normalization.
std::string normalize_query(std::string_view raw);

/// Loads the CSV pair: entries with header "query,doc_id,clicks,impressions"
/// and frequencies with header "query,freq". Errors carry file and line.
CtrTable load_ctr_table(const std::filesystem::path& ctr_csv,
                        const std::filesystem::path& freq_csv);

void save_ctr_csv(const CtrTable& table, const std::filesystem::path& path);
void save_freq_csv(const CtrTable& table, const std::filesystem::path& path);

} // namespace reltune
