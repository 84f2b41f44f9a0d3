#pragma once

#include <stdexcept>
#include <string>

namespace whecke {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input literal (weight, permutation, multisegment, ...).
struct ParseError : Error {
    using Error::Error;
};

/// A commutator of operators expected to commute is nonzero.
struct NonCommutingError : Error {
    using Error::Error;
};

/// A characteristic polynomial does not split over the rationals.
/// Carries the offending polynomial (ascending coefficients, as text).
struct IrrationalSpectrumError : Error {
    std::string polynomial;
    IrrationalSpectrumError(const std::string& what, std::string poly)
        : Error(what), polynomial(std::move(poly)) {}
};

struct NotDominantError : Error {
    using Error::Error;
};

struct NotIntegralSpacedError : Error {
    using Error::Error;
};

struct NoTensorDatumError : Error {
    using Error::Error;
};

struct SupportMismatchError : Error {
    using Error::Error;
};

/// Internal consistency failure: a concrete matrix matched no double coset.
/// Must not occur; signals an implementation bug, not bad input.
struct NoMatchingCosetError : Error {
    using Error::Error;
};

struct LengthMismatchError : Error {
    using Error::Error;
};

struct NotGradedOneError : Error {
    using Error::Error;
};

struct AmbiguousFactorSignatureError : Error {
    using Error::Error;
};

struct NotCyclicError : Error {
    using Error::Error;
};

struct HypothesisViolatedError : Error {
    using Error::Error;
};

struct UnresolvedCollisionError : Error {
    using Error::Error;
};

/// A freshly constructed module failed its defining-relation check.
/// Guards against implementation bugs; never triggered by bad input.
struct RelationCheckFailedError : Error {
    using Error::Error;
};

}  // namespace whecke
