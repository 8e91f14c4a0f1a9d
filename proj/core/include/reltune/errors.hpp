#pragma once

#include <stdexcept>
#include <string>

namespace reltune {

/// Malformed input data or options. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant. The CLI maps this to exit code 2.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace reltune
