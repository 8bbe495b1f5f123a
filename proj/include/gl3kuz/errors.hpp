#pragma once

#include <stdexcept>
#include <string>

namespace gl3kuz {

// Base class so callers can catch everything coming out of the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct ContourPoleError : Error {
    explicit ContourPoleError(const std::string& msg) : Error(msg) {}
};

// Quadrature refinement failed to settle within the requested tolerance.
struct NonConvergence : Error {
    NonConvergence(const std::string& msg, double value_estimate, double error_estimate)
        : Error(msg), value(value_estimate), error(error_estimate) {}
    double value;
    double error;
};

struct SymmetryError : Error {
    explicit SymmetryError(const std::string& msg) : Error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

struct DegenerateError : Error {
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

struct OutOfTable : Error {
    explicit OutOfTable(const std::string& msg) : Error(msg) {}
};

struct EmptyEnsemble : Error {
    explicit EmptyEnsemble(const std::string& msg) : Error(msg) {}
};

struct MissingCoefficient : Error {
    explicit MissingCoefficient(const std::string& msg) : Error(msg) {}
};

struct FourierPairMismatch : Error {
    explicit FourierPairMismatch(const std::string& msg) : Error(msg) {}
};

// Warning-level: data does not cover the requested range.  Thrown only when
// the caller asked for strict handling; otherwise reported in results.
struct IncompleteData : Error {
    explicit IncompleteData(const std::string& msg) : Error(msg) {}
};

struct MissingCapability : Error {
    explicit MissingCapability(const std::string& msg) : Error(msg) {}
};

struct DataFormatError : Error {
    explicit DataFormatError(const std::string& msg) : Error(msg) {}
};

} // namespace gl3kuz
