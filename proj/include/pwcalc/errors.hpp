#pragma once

#include <stdexcept>
#include <string>

namespace pwcalc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// No exact quotient exists; signals inconsistent input data.
struct InexactDivision : Error {
    using Error::Error;
};

// A decomposition subtraction produced a negative dimension.
struct NegativeCoefficient : Error {
    using Error::Error;
};

// A character descriptor does not match the cohomology it is attached to.
struct InconsistentCharacter : Error {
    using Error::Error;
};

struct NoSolution : Error {
    using Error::Error;
};

struct NonUniqueSolution : Error {
    using Error::Error;
};

// Two reduction orders disagree; the ring presentation is ill-posed.
struct NonConfluent : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct AsymmetricMatrix : Error {
    using Error::Error;
};

struct UnknownCase : Error {
    using Error::Error;
};

struct CatalogValidationError : Error {
    using Error::Error;
};

} // namespace pwcalc
