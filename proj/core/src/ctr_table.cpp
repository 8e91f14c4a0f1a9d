#include "reltune/ctr_table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "reltune/errors.hpp"

namespace reltune {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& message) {
    throw InputError(path.string() + ":" + std::to_string(line) + ": " + message);
}

std::string trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return std::string(s.substr(begin, end - begin));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

std::uint64_t parse_count(const std::filesystem::path& path, std::size_t line_no,
                          const std::string& cell, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        fail(path, line_no, std::string(what) + " must be a non-negative integer, got '" +
                                cell + "'");
    }
    return value;
}

} // namespace

std::string normalize_query(std::string_view raw) {
    std::string q = trim(raw);
    std::transform(q.begin(), q.end(), q.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return q;
}

void CtrTable::add_entry(const std::string& query, const std::string& doc_id,
                         std::uint64_t clicks, std::uint64_t impressions) {
    if (impressions == 0) {
        throw InputError("entry ('" + query + "', '" + doc_id + "') has zero impressions");
    }
    if (clicks > impressions) {
        throw InputError("entry ('" + query + "', '" + doc_id + "') has clicks > impressions");
    }
    auto [it, inserted] = entries_[query].emplace(doc_id, CtrCell{clicks, impressions});
    (void)it;
    if (!inserted) {
        throw InputError("duplicate entry for ('" + query + "', '" + doc_id + "')");
    }
}

void CtrTable::set_frequency(const std::string& query, std::uint64_t freq) {
    if (freq == 0) {
        throw InputError("query '" + query + "' has zero frequency");
    }
    auto [it, inserted] = query_freq_.emplace(query, freq);
    (void)it;
    if (!inserted) {
        throw InputError("duplicate frequency row for query '" + query + "'");
    }
    freq_total_ += freq;
}

void CtrTable::validate() const {
    for (const auto& [query, docs] : entries_) {
        (void)docs;
        if (!query_freq_.contains(query)) {
            throw InputError("query '" + query +
                             "' appears in the CTR data but has no frequency row");
        }
    }
}

double CtrTable::ctr(const std::string& doc_id, const std::string& query) const {
    auto qit = entries_.find(query);
    if (qit == entries_.end()) {
        return 0.0;
    }
    auto dit = qit->second.find(doc_id);
    if (dit == qit->second.end()) {
        return 0.0;
    }
    return static_cast<double>(dit->second.clicks) / static_cast<double>(dit->second.impressions);
}

double CtrTable::relevance(const std::string& doc_id, const std::string& query) const {
    return ctr(doc_id, query);
}

std::uint64_t CtrTable::frequency(const std::string& query) const {
    auto it = query_freq_.find(query);
    if (it == query_freq_.end()) {
        throw InputError("unknown query '" + query + "': not present in the frequency data");
    }
    return it->second;
}

double CtrTable::query_weight(const std::string& query) const {
    const std::uint64_t freq = frequency(query);
    return static_cast<double>(freq) / static_cast<double>(freq_total_);
}

std::vector<std::string> CtrTable::queries() const {
    std::vector<std::string> out;
    out.reserve(query_freq_.size());
    for (const auto& [query, freq] : query_freq_) {
        (void)freq;
        out.push_back(query);
    }
    return out;
}

std::vector<std::string> CtrTable::queries_by_frequency() const {
    std::vector<std::string> out = queries();
    std::sort(out.begin(), out.end(), [this](const std::string& a, const std::string& b) {
        const auto fa = query_freq_.at(a);
        const auto fb = query_freq_.at(b);
        if (fa != fb) {
            return fa > fb;
        }
        return a < b;
    });
    return out;
}

CtrTable load_ctr_table(const std::filesystem::path& ctr_csv,
                        const std::filesystem::path& freq_csv) {
    CtrTable table;

    {
        std::ifstream in(freq_csv);
        if (!in) {
            throw InputError("cannot open frequency file '" + freq_csv.string() + "'");
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (trim(line).empty()) {
                continue;
            }
            const auto cells = split_csv(line);
            if (line_no == 1) {
                if (cells != std::vector<std::string>{"query", "freq"}) {
                    fail(freq_csv, line_no, "expected header 'query,freq'");
                }
                continue;
            }
            if (cells.size() != 2) {
                fail(freq_csv, line_no, "expected 2 columns, got " +
                                            std::to_string(cells.size()));
            }
            const std::string query = normalize_query(cells[0]);
            if (query.empty()) {
                fail(freq_csv, line_no, "empty query");
            }
            const std::uint64_t freq = parse_count(freq_csv, line_no, cells[1], "freq");
            try {
                table.set_frequency(query, freq);
            } catch (const InputError& e) {
                fail(freq_csv, line_no, e.what());
            }
        }
        if (line_no == 0) {
            throw InputError("frequency file '" + freq_csv.string() + "' is empty");
        }
    }

    {
        std::ifstream in(ctr_csv);
        if (!in) {
            throw InputError("cannot open CTR file '" + ctr_csv.string() + "'");
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (trim(line).empty()) {
                continue;
            }
            const auto cells = split_csv(line);
            if (line_no == 1) {
                if (cells != std::vector<std::string>{"query", "doc_id", "clicks",
                                                      "impressions"}) {
                    fail(ctr_csv, line_no, "expected header 'query,doc_id,clicks,impressions'");
                }
                continue;
            }
            if (cells.size() != 4) {
                fail(ctr_csv, line_no, "expected 4 columns, got " +
                                           std::to_string(cells.size()));
            }
            const std::string query = normalize_query(cells[0]);
            if (query.empty()) {
                fail(ctr_csv, line_no, "empty query");
            }
            if (cells[1].empty()) {
                fail(ctr_csv, line_no, "empty doc_id");
            }
            if (!table.frequencies().contains(query)) {
                fail(ctr_csv, line_no, "query '" + query + "' has no row in the frequency file");
            }
            const std::uint64_t clicks = parse_count(ctr_csv, line_no, cells[2], "clicks");
            const std::uint64_t impressions =
                parse_count(ctr_csv, line_no, cells[3], "impressions");
            try {
                table.add_entry(query, cells[1], clicks, impressions);
            } catch (const InputError& e) {
                fail(ctr_csv, line_no, e.what());
            }
        }
        if (line_no == 0) {
            throw InputError("CTR file '" + ctr_csv.string() + "' is empty");
        }
    }

    table.validate();
    return table;
}

void save_ctr_csv(const CtrTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write CTR file '" + path.string() + "'");
    }
    out << "query,doc_id,clicks,impressions\n";
    for (const auto& [query, docs] : table.entries()) {
        for (const auto& [doc_id, cell] : docs) {
            out << query << ',' << doc_id << ',' << cell.clicks << ',' << cell.impressions
                << '\n';
        }
    }
    if (!out) {
        throw InputError("failed writing CTR file '" + path.string() + "'");
    }
}

void save_freq_csv(const CtrTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write frequency file '" + path.string() + "'");
    }
    out << "query,freq\n";
    for (const auto& [query, freq] : table.frequencies()) {
        out << query << ',' << freq << '\n';
    }
    if (!out) {
        throw InputError("failed writing frequency file '" + path.string() + "'");
    }
}

} // namespace reltune
