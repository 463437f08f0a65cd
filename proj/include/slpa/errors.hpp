#pragma once

#include <stdexcept>
#include <string>

namespace slpa {

// Malformed input text (bad line, unknown name, arity mismatch, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a structural requirement (e.g. not bipartite).
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameter or infeasible configuration.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace slpa
