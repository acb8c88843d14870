#pragma once

#include <stdexcept>

namespace polytran {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (rational tokens, CSV rows, JSON documents).
struct ParseError : Error {
    using Error::Error;
};

/// Bound-vector data rejected at construction (inconsistent bounds,
/// impossible total-sum target, empty dimensions).
struct SpecError : Error {
    using Error::Error;
};

/// Matrix shape does not match the polytope instance.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Operation requires a polytope member and the matrix is not one.
struct NotAMember : Error {
    using Error::Error;
};

/// Structure search invoked on a matrix with no fractional entries.
struct NoFractionalCell : Error {
    using Error::Error;
};

/// An alternating structure does not fit the matrix it is applied to.
struct StructureMatrixMismatch : Error {
    using Error::Error;
};

/// Perturbation magnitude outside the plan's admissible interval.
struct EpsOutOfRange : Error {
    using Error::Error;
};

/// No second mutable line of the required orientation exists; signals a
/// total-sum mismatch or inconsistent input.
struct NoSecondMutableLine : Error {
    using Error::Error;
};

/// The polytope (or its flow encoding) admits no feasible point.
struct Infeasible : Error {
    using Error::Error;
};

/// Vertex enumeration request exceeds the configured cell cap.
struct InstanceTooLarge : Error {
    using Error::Error;
};

/// Invariant violation inside the library; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace polytran
