#include "reltune/tokenizer.hpp"

#include <cctype>

namespace reltune {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) {
            current.push_back(static_cast<char>(std::tolower(uc)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

std::string concatenate_tokens(std::span<const std::string> tokens) {
    std::string joined;
    for (const auto& token : tokens) {
        joined += token;
    }
    return joined;
}

std::string canonical_form(std::span<const std::string> tokens) {
    std::string joined;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) {
            joined += ' ';
        }
        joined += tokens[i];
    }
    return joined;
}

} // namespace reltune
