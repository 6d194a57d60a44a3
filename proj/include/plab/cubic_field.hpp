#pragma once

// Arithmetic in K = Q(theta), theta^3 = theta - 1. The ring of integers is
// Z[theta] (the polynomial discriminant -23 is squarefree), its class number
// is 1 and its unit group is {+-1} x theta^Z; the routines below lean on all
// three facts.

#include "plab/exact.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plab {

/// c0 + c1*theta + c2*theta^2.
class KElement {
public:
    KElement() = default;
    KElement(Rational c0, Rational c1 = 0, Rational c2 = 0) : c_{std::move(c0), std::move(c1), std::move(c2)} {}
    KElement(long c0) : KElement(Rational(c0)) {}

    static KElement theta() { return KElement(0, 1, 0); }

    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Rational, 3>& coords() const { return c_; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
    /// Coordinates in Z, i.e. the element lies in Z[theta].
    bool is_integral() const;

    KElement operator-() const { return KElement(-c_[0], -c_[1], -c_[2]); }
    KElement operator+(const KElement& o) const;
    KElement operator-(const KElement& o) const;
    KElement operator*(const KElement& o) const;
    KElement operator/(const KElement& o) const;
    KElement& operator*=(const KElement& o) { return *this = *this * o; }
    bool operator==(const KElement& o) const { return c_ == o.c_; }

    std::string to_string() const;

private:
    std::array<Rational, 3> c_{};
};

KElement k_add(const KElement& a, const KElement& b);
KElement k_mul(const KElement& a, const KElement& b);
/// Throws DomainError on zero.
KElement k_inv(const KElement& a);
/// Integer powers; negative exponents go through k_inv.
KElement k_pow(const KElement& a, long e);

/// Matrix of x -> a*x on the basis (1, theta, theta^2); column j is a*theta^j.
std::array<std::array<Rational, 3>, 3> multiplication_matrix(const KElement& a);
Rational norm(const KElement& a);
Rational trace(const KElement& a);

/// Real embedding of theta to long double precision, used only to aim
/// searches whose results are then confirmed exactly.
long double theta_real();
long double real_embedding(const KElement& a);

/// (-1)^sign_bit * theta^theta_exp.
struct UnitClass {
    int sign_bit = 0;
    long theta_exp = 0;

    KElement element() const;
    /// Image in units / units^4 (exponent mod 4) or units / units^2 (mod 2).
    UnitClass reduced(long modulus) const;
    bool operator==(const UnitClass&) const = default;
    /// "1", "-theta", "theta^2", "-theta^3", ...
    std::string to_string() const;
};

/// Throws DomainError unless u is an integral element of norm +-1.
UnitClass unit_decompose(const KElement& u);

struct PrimeIdealRef {
    Integer residue_char;
    KElement generator;
    int residue_degree = 1;
    int ramification_index = 1;

    bool operator==(const PrimeIdealRef& o) const
    {
        return residue_char == o.residue_char && generator == o.generator;
    }
};

/// (3*theta^2 - 4), the unramified prime above 23.
const PrimeIdealRef& prime_p1();
/// (3*theta^2 - 1), the prime with (23) = p1 * p2^2.
const PrimeIdealRef& prime_p2();
/// (2), inert.
const PrimeIdealRef& prime_two();

/// All prime ideals above the rational prime p, each with a principal
/// generator. Generators of degree-one primes come from a reduced-basis search
/// for an element of norm +-p; UnsupportedInput if none is found.
std::vector<PrimeIdealRef> primes_above(const Integer& p);

/// Throws UndefinedInput for zero.
long valuation_at(const KElement& a, const PrimeIdealRef& P);

/// a = unit * prod(generator^valuation) exactly, for nonzero integral a.
struct ElementFactorization {
    UnitClass unit;
    std::vector<std::pair<PrimeIdealRef, long>> primes;
};

ElementFactorization factor_integral(const KElement& a);

bool is_square(const KElement& a);

struct FourthPowerFreeDecomp {
    KElement delta;
    KElement s;
    /// Unit part of delta with theta exponent in {0,1,2,3}.
    UnitClass unit_part;
    /// Prime-ideal valuations of delta that are nonzero (each in {1,2,3}).
    std::vector<std::pair<PrimeIdealRef, long>> residual;
    /// Set exactly when delta is a unit.
    std::optional<UnitClass> delta_class;
};

/// delta * s^4 = a with every valuation of delta in {0,1,2,3}. a must be
/// nonzero and integral.
FourthPowerFreeDecomp fourth_power_free(const KElement& a);

} // namespace plab
