#ifndef PREFRAT_ERRORS_HPP
#define PREFRAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prefrat {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (JSON/CSV syntax, unparsable rational).
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input that breaks a matrix invariant.
struct InvariantError : Error {
    using Error::Error;
};

// Closure of the given pairs would violate irreflexivity/asymmetry.
struct CycleError : Error {
    using Error::Error;
};

// Chains fail to partition the candidate set.
struct PartitionError : Error {
    using Error::Error;
};

struct NotComparableError : Error {
    using Error::Error;
};

struct NotRemovableError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// Operation restricted to integral/half-integral matrices.
struct ClassError : Error {
    using Error::Error;
};

struct DivisibilityError : Error {
    using Error::Error;
};

struct InconsistentInputError : Error {
    using Error::Error;
};

struct ImproperColoringError : Error {
    using Error::Error;
};

struct InvalidDicoloringError : Error {
    using Error::Error;
};

// Instance exceeds a hard size limit of an exact/brute-force routine.
struct SizeLimitError : Error {
    using Error::Error;
};

} // namespace prefrat

#endif
