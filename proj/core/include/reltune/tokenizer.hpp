#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reltune {

/// Lowercases and splits on every non-alphanumeric byte; empty tokens are
/// dropped, order is preserved. "Data Factory" -> {"data", "factory"},
/// "web-app 2.0" -> {"web", "app", "2", "0"}.
std::vector<std::string> tokenize(std::string_view text);

/// Tokens joined with no separator: {"data", "factory"} -> "datafactory".
std::string concatenate_tokens(std::span<const std::string> tokens);

/// Tokens joined with a single space. Tokens never contain spaces, so two
/// canonical forms are equal exactly when the token lists are equal.
std::string canonical_form(std::span<const std::string> tokens);

} // namespace reltune
