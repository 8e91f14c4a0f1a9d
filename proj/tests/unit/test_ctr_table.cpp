#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "reltune/ctr_table.hpp"
#include "reltune/errors.hpp"
#include "reltune/rng.hpp"

using namespace reltune;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

CtrTable small_table() {
    CtrTable table;
    table.set_frequency("data", 3);
    table.set_frequency("web", 1);
    table.add_entry("data", "a", 5, 20);
    table.add_entry("data", "b", 0, 100);
    table.add_entry("web", "c", 3, 4);
    table.validate();
    return table;
}

} // namespace

TEST_CASE("ctr is clicks over impressions, zero when unobserved") {
    const CtrTable table = small_table();
    CHECK(table.ctr("a", "data") == 0.25);
    CHECK(table.ctr("b", "data") == 0.0);
    CHECK(table.ctr("c", "web") == 0.75);
    CHECK(table.ctr("a", "web") == 0.0);
    CHECK(table.ctr("nope", "data") == 0.0);
    CHECK(table.ctr("a", "unknown query") == 0.0);
}

TEST_CASE("relevance is defined as the ctr") {
    const CtrTable table = small_table();
    for (const auto& doc : {"a", "b", "c", "nope"}) {
        for (const auto& query : {"data", "web", "unknown"}) {
            CHECK(table.relevance(doc, query) == table.ctr(doc, query));
        }
    }
}

TEST_CASE("query_weight divides by the total frequency") {
    CtrTable table;
    SUBCASE("3:1 split") {
        table.set_frequency("a", 3);
        table.set_frequency("b", 1);
        CHECK(table.query_weight("a") == 0.75);
        CHECK(table.query_weight("b") == 0.25);
    }
    SUBCASE("single query gets weight 1") {
        table.set_frequency("only", 7);
        CHECK(table.query_weight("only") == 1.0);
    }
    SUBCASE("10:10:20 split") {
        table.set_frequency("a", 10);
        table.set_frequency("b", 10);
        table.set_frequency("c", 20);
        CHECK(table.query_weight("a") == 0.25);
        CHECK(table.query_weight("b") == 0.25);
        CHECK(table.query_weight("c") == 0.5);
    }
    SUBCASE("unknown query is an error") {
        table.set_frequency("a", 1);
        CHECK_THROWS_AS(table.query_weight("missing"), InputError);
    }
}

TEST_CASE("query weights sum to one") {
    Rng rng(71);
    CtrTable table;
    double expected_total = 0.0;
    for (int i = 0; i < 200; ++i) {
        table.set_frequency("q" + std::to_string(i),
                            static_cast<std::uint64_t>(rng.uniform_int(1, 5000)));
    }
    for (const auto& query : table.queries()) {
        expected_total += table.query_weight(query);
    }
    CHECK(expected_total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("table construction rejects bad entries") {
    CtrTable table;
    table.set_frequency("q", 1);
    CHECK_THROWS_AS(table.add_entry("q", "d", 1, 0), InputError);
    CHECK_THROWS_AS(table.add_entry("q", "d", 5, 4), InputError);
    table.add_entry("q", "d", 4, 4);
    CHECK_THROWS_AS(table.add_entry("q", "d", 1, 2), InputError); // duplicate pair
    CHECK_THROWS_AS(table.set_frequency("q", 2), InputError);     // duplicate freq
    CHECK_THROWS_AS(table.set_frequency("r", 0), InputError);

    CtrTable orphan;
    orphan.set_frequency("known", 1);
    orphan.add_entry("known", "d", 0, 1);
    orphan.validate();
    CtrTable orphan2;
    orphan2.set_frequency("known", 1);
    // validate() only sees entries added through the loader path in
    // practice; simulate the mismatch directly.
    orphan2.add_entry("unknown", "d", 0, 1);
    CHECK_THROWS_AS(orphan2.validate(), InputError);
}

TEST_CASE("csv loading normalizes queries and reports line numbers") {
    const auto ctr_path = temp_file("reltune_ctr.csv");
    const auto freq_path = temp_file("reltune_freq.csv");

    SUBCASE("well-formed pair round-trips exactly") {
        write_file(freq_path, "query,freq\n DATA ,3\nweb,1\n");
        write_file(ctr_path, "query,doc_id,clicks,impressions\n"
                             "Data,a,5,20\n"
                             "data,b,0,100\n"
                             "WEB ,c,3,4\n");
        const CtrTable table = load_ctr_table(ctr_path, freq_path);
        CHECK(table == small_table());

        const auto ctr_copy = temp_file("reltune_ctr_copy.csv");
        const auto freq_copy = temp_file("reltune_freq_copy.csv");
        save_ctr_csv(table, ctr_copy);
        save_freq_csv(table, freq_copy);
        CHECK(load_ctr_table(ctr_copy, freq_copy) == table);
    }
    SUBCASE("bad header") {
        write_file(freq_path, "query,count\na,1\n");
        write_file(ctr_path, "query,doc_id,clicks,impressions\n");
        CHECK_THROWS_WITH_AS(load_ctr_table(ctr_path, freq_path), doctest::Contains(":1:"),
                             InputError);
    }
    SUBCASE("zero impressions rejected with line number") {
        write_file(freq_path, "query,freq\na,1\n");
        write_file(ctr_path, "query,doc_id,clicks,impressions\na,d,0,0\n");
        CHECK_THROWS_WITH_AS(load_ctr_table(ctr_path, freq_path), doctest::Contains(":2:"),
                             InputError);
    }
    SUBCASE("clicks above impressions rejected") {
        write_file(freq_path, "query,freq\na,1\n");
        write_file(ctr_path, "query,doc_id,clicks,impressions\na,d,9,8\n");
        CHECK_THROWS_AS(load_ctr_table(ctr_path, freq_path), InputError);
    }
    SUBCASE("ctr query missing from the frequency file") {
        write_file(freq_path, "query,freq\na,1\n");
        write_file(ctr_path, "query,doc_id,clicks,impressions\nb,d,1,2\n");
        CHECK_THROWS_WITH_AS(load_ctr_table(ctr_path, freq_path),
                             doctest::Contains("frequency"), InputError);
    }
    SUBCASE("wrong column count") {
        write_file(freq_path, "query,freq\na,1\n");
        write_file(ctr_path, "query,doc_id,clicks,impressions\na,d,1\n");
        CHECK_THROWS_WITH_AS(load_ctr_table(ctr_path, freq_path), doctest::Contains(":2:"),
                             InputError);
    }
    SUBCASE("non-numeric count") {
        write_file(freq_path, "query,freq\na,lots\n");
        write_file(ctr_path, "query,doc_id,clicks,impressions\n");
        CHECK_THROWS_AS(load_ctr_table(ctr_path, freq_path), InputError);
    }
}

TEST_CASE("normalize_query trims and lowercases") {
    CHECK(normalize_query("  Data Factory  ") == "data factory");
    CHECK(normalize_query("WEB") == "web");
    CHECK(normalize_query("") == "");
    CHECK(normalize_query(" \t x \n") == "x");
}
