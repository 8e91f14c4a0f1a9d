#pragma once

#include <filesystem>

#include "reltune/corpus.hpp"

namespace reltune {

/// Loads a corpus from a JSON-lines file, one document per line:
///   {"id": str, "searchable": {field: text, ...}, "boosting": {name: number, ...}}
/// Field and feature name sets are unioned across the file (sorted); a
/// document missing a name gets "" / 0. Parse and validation errors carry
/// the offending line number.
Corpus load_corpus(const std::filesystem::path& path);

/// Writes the JSON-lines form; load_corpus(save_corpus(c)) == c.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

} // namespace reltune
