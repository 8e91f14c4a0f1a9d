#include "reltune/synth.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "reltune/corpus_io.hpp"
#include "reltune/errors.hpp"
#include "reltune/rng.hpp"
#include "reltune/search_engine.hpp"
#include "reltune/tokenizer.hpp"

namespace reltune {

namespace {

// Shared catalog vocabulary; queries are drawn from the same pool so they
// hit multiple documents.
constexpr std::array kVocab = {
    "access",    "agent",      "alert",     "analytics",  "api",        "app",
    "archive",   "asset",      "audit",     "backup",     "badge",      "billing",
    "board",     "bot",        "bridge",    "broker",     "builder",    "cache",
    "calendar",  "catalog",    "chat",      "cloud",      "cluster",    "code",
    "compliance", "connector", "console",   "contract",   "copilot",    "crm",
    "dashboard", "data",       "delivery",  "deploy",     "designer",   "desk",
    "devops",    "directory",  "docs",      "domain",     "drive",      "edge",
    "email",     "engine",     "event",     "exchange",   "factory",    "feed",
    "field",     "finance",    "firewall",  "fleet",      "flow",       "form",
    "forecast",  "gateway",    "graph",     "grid",       "hub",        "identity",
    "import",    "inbox",      "insights",  "integration", "inventory", "invoice",
    "lab",       "lake",       "ledger",    "lens",       "logic",      "machine",
    "mail",      "manager",    "map",       "market",     "mesh",       "meter",
    "migrate",   "mobile",     "model",     "monitor",    "network",    "notebook",
    "offer",     "office",     "pipeline",  "planner",    "policy",     "portal",
    "print",     "process",    "proxy",     "pulse",      "quality",    "query",
    "queue",     "quota",      "relay",     "report",     "resource",   "robot",
    "router",    "runtime",    "scan",      "schedule",   "search",     "secure",
    "sensor",    "server",     "service",   "shield",     "signal",     "site",
    "space",     "storage",    "stream",    "studio",     "support",    "sync",
    "table",     "teams",      "template",  "tenant",     "ticket",     "trace",
    "translate", "vault",      "vector",    "virtual",    "vision",     "voice",
    "wallet",    "warehouse",  "web",       "wiki",       "workflow",   "zone",
};

constexpr std::array kPublishers = {
    "contoso",  "fabrikam",   "northwind", "adventureworks", "tailspin",
    "wingtip",  "proseware",  "woodgrove", "litware",        "fourthcoffee",
};

constexpr std::array kCategories = {
    "productivity", "security",  "collaboration", "automation",
    "developer",    "operations", "marketing",    "utilities",
};

// Description prose; deliberately disjoint from kVocab so that descriptions
// read like marketing copy rather than keyword stuffing.
constexpr std::array kDescWords = {
    "accelerate",  "advanced",    "automated",  "built",       "business",
    "capability",  "centralized", "certified",  "companies",   "complete",
    "comprehensive", "configurable", "customers", "customizable", "effortless",
    "empower",     "enables",     "engineered", "enterprise",  "expert",
    "flexible",    "friendly",    "global",     "helps",       "improve",
    "industry",    "innovative",  "integrated", "intelligent", "intuitive",
    "leading",     "lightweight", "modern",     "optimized",   "organizations",
    "platform",    "powerful",    "productive", "professional", "provides",
    "reliable",    "scalable",    "seamless",   "simple",      "smart",
    "solution",    "streamlined", "trusted",    "unified",     "users",
};

const char* pick(Rng& rng, std::span<const char* const> pool) {
    return pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
}

std::string words(Rng& rng, std::span<const char* const> pool, std::size_t count) {
    std::string text;
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) {
            text += ' ';
        }
        text += pick(rng, pool);
    }
    return text;
}

std::string doc_id(std::size_t ordinal) {
    char buffer[24];
    std::snprintf(buffer, sizeof(buffer), "offer-%05zu", ordinal);
    return buffer;
}

} // namespace

WeightConfig default_hidden_config() {
    WeightConfig config;
    config.field_weights = {{"Title", 9},   {"Description", 2}, {"Publisher", 4},
                            {"Categories", 3}, {"Keywords", 2}};
    config.boost_weights = {{"Popularity", 8}, {"PricingType", 4}, {"PreferredSolution", 5}};
    config.exact_match_boost = 3;
    config.concatenation = 1;
    return config;
}

SynthDataset generate_synthetic(const SynthSpec& spec) {
    if (spec.n_docs == 0 || spec.n_queries == 0 || spec.k == 0) {
        throw InputError("synthetic spec requires n_docs, n_queries and k >= 1");
    }
    if (spec.n_queries > 1000) {
        throw InputError("n_queries too large for the built-in vocabulary (max 1000)");
    }

    Rng rng(spec.seed);
    SynthDataset data;
    data.hidden_config = spec.hidden_config;
    data.corpus.field_names = {"Categories", "Description", "Keywords", "Publisher", "Title"};
    data.corpus.boost_names = {"Popularity", "PreferredSolution", "PricingType"};

    for (std::size_t i = 0; i < spec.n_docs; ++i) {
        Document doc;
        doc.id = doc_id(i);
        doc.searchable["Title"] = words(rng, kVocab, 1 + static_cast<std::size_t>(rng.uniform_int(0, 2)));
        doc.searchable["Description"] =
            words(rng, kDescWords, 6 + static_cast<std::size_t>(rng.uniform_int(0, 4)));
        doc.searchable["Publisher"] = pick(rng, kPublishers);
        doc.searchable["Categories"] =
            words(rng, kCategories, 1 + static_cast<std::size_t>(rng.uniform_int(0, 1)));
        doc.searchable["Keywords"] =
            words(rng, kVocab, 3 + static_cast<std::size_t>(rng.uniform_int(0, 2)));
        // Boost features come in coarse levels; most pairs are clearly
        // separated.
        doc.boosting["Popularity"] = 200.0 * rng.uniform_int(0, 5);
        doc.boosting["PricingType"] = rng.uniform_int(0, 1);
        doc.boosting["PreferredSolution"] = rng.uniform_int(0, 1);
        data.corpus.documents.push_back(std::move(doc));
    }

    // Distinct queries from the document vocabulary, mostly single-word.
    std::vector<std::string> queries;
    std::set<std::string> seen;
    std::size_t attempts = 0;
    while (queries.size() < spec.n_queries) {
        if (++attempts > spec.n_queries * 1000) {
            throw InternalError("failed to draw enough distinct synthetic queries");
        }
        std::string query = pick(rng, kVocab);
        if (rng.uniform01() < 0.3) {
            query += ' ';
            query += pick(rng, kVocab);
        }
        if (seen.insert(query).second) {
            queries.push_back(std::move(query));
        }
    }

    // Make the enhancers observable: plant the joined form of some two-word
    // queries into Keywords, and give some single-word queries an exact-title
    // document.
    for (const auto& query : queries) {
        const auto tokens = tokenize(query);
        if (tokens.size() >= 2) {
            if (rng.uniform01() < 0.5) {
                const std::string joined = concatenate_tokens(tokens);
                const int copies = 1 + rng.uniform_int(0, 1);
                for (int c = 0; c < copies; ++c) {
                    auto& keywords = data.corpus
                                         .documents[static_cast<std::size_t>(rng.uniform_int(
                                             0, static_cast<int>(spec.n_docs) - 1))]
                                         .searchable["Keywords"];
                    keywords += ' ';
                    keywords += joined;
                }
            }
        } else if (rng.uniform01() < 0.25) {
            data.corpus
                .documents[static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<int>(spec.n_docs) - 1))]
                .searchable["Title"] = query;
        }
    }

    validate_weights(data.hidden_config, data.corpus);

    // Zipf(1.1) frequency profile over the generation order.
    std::vector<double> zipf_weights;
    zipf_weights.reserve(spec.n_queries);
    for (std::size_t i = 0; i < spec.n_queries; ++i) {
        zipf_weights.push_back(1.0 / std::pow(static_cast<double>(i + 1), 1.1));
    }
    std::vector<std::uint64_t> counts(spec.n_queries, 0);
    const std::size_t draws = 50 * spec.n_queries;
    for (std::size_t i = 0; i < draws; ++i) {
        ++counts[rng.categorical(zipf_weights)];
    }
    for (std::size_t i = 0; i < spec.n_queries; ++i) {
        data.table.set_frequency(queries[i], counts[i] + 1);
    }

    // Score every query with the hidden config and derive CTRs from the
    // resulting ranks: rank r gets 0.8 * 0.7^(r-1), observed through 200
    // binomially sampled impressions.
    const SearchEngine engine(data.corpus);
    constexpr std::uint64_t kImpressions = 200;
    for (const auto& query : queries) {
        const RankedList ranked = engine.search(query, data.hidden_config, spec.k);
        double base = 0.8;
        for (const auto& entry : ranked.entries) {
            const std::uint64_t clicks = rng.binomial(kImpressions, base);
            data.table.add_entry(query, entry.id, clicks, kImpressions);
            base *= 0.7;
        }
    }

    data.table.validate();
    return data;
}

void write_synthetic(const SynthDataset& data, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    save_corpus(data.corpus, out_dir / "corpus.jsonl");
    save_ctr_csv(data.table, out_dir / "ctr.csv");
    save_freq_csv(data.table, out_dir / "freq.csv");
    save_weight_config(data.hidden_config, out_dir / "hidden_config.json");
}

} // namespace reltune
