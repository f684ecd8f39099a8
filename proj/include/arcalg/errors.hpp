#pragma once

#include <stdexcept>
#include <string>

namespace arcalg {

/// Bad arguments to an operation (size mismatch, out-of-range indices, ...).
class invalid_parameters : public std::invalid_argument {
public:
    explicit invalid_parameters(const std::string& what) : std::invalid_argument(what) {}
};

/// A structural assumption that the code verifies at runtime failed
/// (e.g. a subspace expected to be action-stable is not).
class structural_error : public std::logic_error {
public:
    explicit structural_error(const std::string& what) : std::logic_error(what) {}
};

/// A chain "complex" whose differential does not square to zero.
class invalid_complex : public std::logic_error {
public:
    explicit invalid_complex(const std::string& what) : std::logic_error(what) {}
};

/// A homology group was requested beyond the certified truncation depth.
class truncation_error : public std::runtime_error {
public:
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace arcalg
