#pragma once

#include <stdexcept>
#include <string>

namespace qappell {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series/family with vanishing constant term where a unit is required.
struct ZeroConstantTerm : Error {
    using Error::Error;
};

// Operation whose defining formula divides by u, rejected at u = 0.
struct DeformationZero : Error {
    using Error::Error;
};

// Operation whose defining formula divides by (1-q), rejected at q = 1.
struct QIsOne : Error {
    using Error::Error;
};

// Two operands built over different (q,u) parameter pairs.
struct ContextMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Polynomial evaluation with an unassigned variable; message names it.
struct MissingAssignment : Error {
    using Error::Error;
};

// Componentwise sum (or scaling) that would drop the component degree.
struct DegeneracyError : Error {
    using Error::Error;
};

// Determining series whose coefficients are not variable-free.
struct NonScalarCoefficients : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace qappell
