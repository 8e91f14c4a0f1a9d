#include "reltune/corpus.hpp"

#include <unordered_set>

#include "reltune/errors.hpp"

namespace reltune {

namespace {

void check_names(const Document& doc, const std::vector<std::string>& names, std::size_t actual,
                 const char* what) {
    if (actual != names.size()) {
        throw InputError("document '" + doc.id + "' does not expose the corpus " + what +
                         " names");
    }
}

} // namespace

void Corpus::validate() const {
    if (field_names.empty()) {
        throw InputError("corpus declares no searchable fields");
    }
    if (boost_names.empty()) {
        throw InputError("corpus declares no boosting features");
    }
    std::unordered_set<std::string> seen;
    seen.reserve(documents.size());
    for (const auto& doc : documents) {
        if (doc.id.empty()) {
            throw InputError("corpus contains a document with an empty id");
        }
        if (!seen.insert(doc.id).second) {
            throw InputError("corpus contains duplicate document id '" + doc.id + "'");
        }
        check_names(doc, field_names, doc.searchable.size(), "field");
        check_names(doc, boost_names, doc.boosting.size(), "boost");
        for (const auto& name : field_names) {
            if (!doc.searchable.contains(name)) {
                throw InputError("document '" + doc.id + "' is missing searchable field '" +
                                 name + "'");
            }
        }
        for (const auto& name : boost_names) {
            auto it = doc.boosting.find(name);
            if (it == doc.boosting.end()) {
                throw InputError("document '" + doc.id + "' is missing boosting feature '" +
                                 name + "'");
            }
            if (it->second < 0.0) {
                throw InputError("document '" + doc.id + "' has negative boosting feature '" +
                                 name + "'");
            }
        }
    }
}

} // namespace reltune
