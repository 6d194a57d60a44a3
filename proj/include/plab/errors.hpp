#pragma once

#include <stdexcept>
#include <string>

namespace plab {

/// Input outside the mathematical domain of an operation (non-prime modulus,
/// point off the curve, inverting zero, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The operation is undefined for this input (valuation of zero).
class UndefinedInput : public DomainError {
public:
    using DomainError::DomainError;
};

/// The input is valid but outside what the desk-scale algorithms handle,
/// e.g. a norm whose cofactor is too large to factor by trial division.
class UnsupportedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A fourth-power-free part that is not a unit showed up where the descent
/// argument says only units can occur.
class ClassificationViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void ensure(bool condition, const std::string& what)
{
    if (!condition) throw InternalError(what);
}

} // namespace plab
