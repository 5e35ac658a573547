#pragma once

#include <stdexcept>
#include <string>

namespace kron {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// tau / tau^{-1} fell off the orbit: an intermediate vector acquired a
/// negative entry or a zero total.
struct OrbitEscape : Error {
    using Error::Error;
};

/// A Fibonacci closed form produced a negative entry (no module exists that
/// far in the orbit).
struct NegativeEntry : Error {
    using Error::Error;
};

/// An enumeration exceeded its node or element budget.  Carries the estimate
/// that triggered the refusal so callers can retry with a larger budget.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, unsigned long long estimate_)
        : Error(what), estimate(estimate_) {}
    unsigned long long estimate;
};

struct NotIndecomposable : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

/// A real root matched neither the preprojective nor the preinjective
/// sequence.  For rank-2 wild quivers this cannot happen, so reaching this
/// branch indicates an arithmetic bug, not a data condition.
struct InternalContradiction : Error {
    using Error::Error;
};

}  // namespace kron
