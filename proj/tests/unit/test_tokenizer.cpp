#include <doctest.h>

#include "reltune/tokenizer.hpp"

using reltune::canonical_form;
using reltune::concatenate_tokens;
using reltune::tokenize;

TEST_CASE("tokenize lowercases and splits on non-alphanumerics") {
    CHECK(tokenize("Data Factory") == std::vector<std::string>{"data", "factory"});
    CHECK(tokenize("") == std::vector<std::string>{});
    CHECK(tokenize("web-app 2.0") == std::vector<std::string>{"web", "app", "2", "0"});
}

TEST_CASE("tokenize drops empty tokens and keeps order") {
    CHECK(tokenize("  --  ") == std::vector<std::string>{});
    CHECK(tokenize("a,,b..c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(tokenize("Zebra apple") == std::vector<std::string>{"zebra", "apple"});
    CHECK(tokenize("x1y") == std::vector<std::string>{"x1y"});
}

TEST_CASE("tokenize is stable under retokenization of the canonical form") {
    const char* samples[] = {"Azure Data Factory 2.0", "a-b-c", "  MIXED case Words ",
                             "123 456", "datafactory"};
    for (const char* sample : samples) {
        const auto tokens = tokenize(sample);
        CHECK(tokenize(canonical_form(tokens)) == tokens);
    }
}

TEST_CASE("token joins") {
    const auto tokens = tokenize("Data Factory");
    CHECK(concatenate_tokens(tokens) == "datafactory");
    CHECK(canonical_form(tokens) == "data factory");
    CHECK(concatenate_tokens(std::span<const std::string>{}) == "");
    CHECK(canonical_form(std::span<const std::string>{}) == "");
}
