#pragma once

#include <stdexcept>
#include <string>

namespace iqs {

// Input document malformed (unknown kind, missing field, wrong shape).
class SchemaError : public std::runtime_error {
  public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric precondition violated (non-hermitian input, non-unit vector,
// non-stochastic matrix, dimension mismatch, ...).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace iqs
