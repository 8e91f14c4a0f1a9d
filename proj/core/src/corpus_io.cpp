#include "reltune/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "reltune/errors.hpp"

namespace reltune {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& message) {
    throw InputError(path.string() + ":" + std::to_string(line) + ": " + message);
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open corpus file '" + path.string() + "'");
    }

    Corpus corpus;
    std::set<std::string> field_names;
    std::set<std::string> boost_names;
    std::unordered_set<std::string> seen_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(path, line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object()) {
            fail(path, line_no, "expected a JSON object");
        }
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "id" && key != "searchable" && key != "boosting") {
                fail(path, line_no, "unknown key '" + key + "'");
            }
        }

        Document doc;
        if (!j.contains("id") || !j["id"].is_string()) {
            fail(path, line_no, "missing or non-string \"id\"");
        }
        doc.id = j["id"].get<std::string>();
        if (doc.id.empty()) {
            fail(path, line_no, "empty document id");
        }
        if (!seen_ids.insert(doc.id).second) {
            fail(path, line_no, "duplicate document id '" + doc.id + "'");
        }

        if (j.contains("searchable")) {
            if (!j["searchable"].is_object()) {
                fail(path, line_no, "\"searchable\" must be an object");
            }
            for (const auto& [name, value] : j["searchable"].items()) {
                if (!value.is_string()) {
                    fail(path, line_no, "searchable field '" + name + "' must be a string");
                }
                doc.searchable[name] = value.get<std::string>();
                field_names.insert(name);
            }
        }
        if (j.contains("boosting")) {
            if (!j["boosting"].is_object()) {
                fail(path, line_no, "\"boosting\" must be an object");
            }
            for (const auto& [name, value] : j["boosting"].items()) {
                if (!value.is_number()) {
                    fail(path, line_no, "boosting feature '" + name + "' must be a number");
                }
                const double v = value.get<double>();
                if (v < 0.0) {
                    fail(path, line_no, "boosting feature '" + name + "' must be non-negative");
                }
                doc.boosting[name] = v;
                boost_names.insert(name);
            }
        }
        corpus.documents.push_back(std::move(doc));
    }

    if (corpus.documents.empty()) {
        throw InputError("corpus file '" + path.string() + "' contains no documents");
    }

    corpus.field_names.assign(field_names.begin(), field_names.end());
    corpus.boost_names.assign(boost_names.begin(), boost_names.end());

    // Normalize every document to the full name sets.
    for (auto& doc : corpus.documents) {
        for (const auto& name : corpus.field_names) {
            doc.searchable.try_emplace(name, "");
        }
        for (const auto& name : corpus.boost_names) {
            doc.boosting.try_emplace(name, 0.0);
        }
    }

    corpus.validate();
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write corpus file '" + path.string() + "'");
    }
    for (const auto& doc : corpus.documents) {
        json j;
        j["id"] = doc.id;
        j["searchable"] = doc.searchable;
        j["boosting"] = doc.boosting;
        out << j.dump() << '\n';
    }
    if (!out) {
        throw InputError("failed writing corpus file '" + path.string() + "'");
    }
}

} // namespace reltune
