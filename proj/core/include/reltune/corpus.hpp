#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace reltune {

/// One catalog item: named searchable text fields plus named numeric
/// boosting features. Every document in a corpus carries the same field and
/// feature names; absent text is stored as "" and absent features as 0.
struct Document {
    std::string id;
    std::map<std::string, std::string> searchable;
    std::map<std::string, double> boosting;

    bool operator==(const Document&) const = default;
};

struct Corpus {
    std::vector<Document> documents;
    std::vector<std::string> field_names;
    std::vector<std::string> boost_names;

    std::size_t size() const { return documents.size(); }

    /// Throws InputError on empty or duplicate ids, empty name lists, or
    /// documents whose field/feature sets differ from the declared names.
    void validate() const;

    bool operator==(const Corpus&) const = default;
};

} // namespace reltune
