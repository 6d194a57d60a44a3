#pragma once

// Exact integer and rational arithmetic on top of GMP.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plab {

using Integer = mpz_class;
/// Always canonical: reduced, positive denominator, zero is 0/1.
using Rational = mpq_class;

inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p" or "p/q" with optional leading sign on p. Throws DomainError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);
/// Integer exponent, negative allowed for nonzero base.
Rational pow(const Rational& base, long exp);

/// Naive height max(|num|, den).
Integer naive_height(const Rational& q);

/// Deterministic for |p| < 2^64 and certainly-correct for the sizes used here.
bool is_prime(const Integer& p);

long padic_valuation(const Integer& n, const Integer& p);
long padic_valuation(const Rational& q, const Integer& p);

/// Exact k-th root of an integer, empty if none. Negative n only for odd k.
std::optional<Integer> nth_root_integer(const Integer& n, unsigned long k);

/// r with r^n = q if such a rational exists. For even n the non-negative
/// root is returned.
std::optional<Rational> nth_root_rational(const Rational& q, unsigned long n);

struct SmallFactorization {
    int sign = 1;
    std::map<Integer, unsigned> factors;
    /// Product of all prime factors above the trial bound.
    Integer cofactor = 1;

    Integer reconstruct() const;
};

SmallFactorization factor_small(const Integer& n, unsigned long bound = kDefaultTrialBound);

/// Distinct prime divisors of n != 0. The trial-division cofactor must be
/// below (bound+1)^2 or a power of a probable prime; otherwise
/// UnsupportedInput.
std::vector<Integer> prime_divisors(const Integer& n, unsigned long bound = kDefaultTrialBound);

/// Positive divisors of |n|, sorted ascending. n != 0.
std::vector<Integer> divisors(const Integer& n, unsigned long bound = kDefaultTrialBound);

Integer lcm_of_denominators(const std::vector<Rational>& values);

} // namespace plab
