#pragma once

// Dense univariate polynomials over a prime field F_p, p < 2^63.

#include "plab/exact.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace plab {

class FpPoly {
public:
    using Coeff = std::uint64_t;

    explicit FpPoly(Coeff p);
    /// Coefficients low to high, reduced mod p; trailing zeros are trimmed.
    FpPoly(Coeff p, std::vector<Coeff> coeffs);
    /// Reduction of an integer-coefficient polynomial (low to high).
    static FpPoly from_integers(Coeff p, const std::vector<Integer>& coeffs);
    static FpPoly monomial(Coeff p, std::size_t degree, Coeff c = 1);

    Coeff modulus() const { return p_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Coeff leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Coeff>& coeffs() const { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(Coeff k) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    Coeff eval(Coeff x) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
    FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }
    FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    /// Variable name used in printing, e.g. "c^3 + 4*c + 2".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    Coeff p_;
    std::vector<Coeff> c_;
};

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

FpPoly gcd(FpPoly a, FpPoly b);
/// base^exp mod m.
FpPoly powmod(const FpPoly& base, const Integer& exp, const FpPoly& m);

struct FpFactor {
    FpPoly factor;
    unsigned multiplicity;
};

struct FpFactorization {
    std::uint64_t p;
    std::uint64_t unit;
    /// Monic irreducibles sorted by (degree, coefficients low to high).
    std::vector<FpFactor> factors;

    FpPoly reconstruct() const;
    std::string to_string(const std::string& var = "x") const;
};

/// Complete factorization: square-free split, distinct-degree, then
/// equal-degree (Cantor-Zassenhaus; trace map in characteristic 2). The random
/// splitting elements come from a fixed-seed generator, so output is stable.
FpFactorization factor(const FpPoly& f);

/// Roots in F_p, ascending.
std::vector<std::uint64_t> roots(const FpPoly& f);

/// Symmetric residue in (-p/2, p/2].
long long symmetric_residue(std::uint64_t x, std::uint64_t p);

} // namespace plab
