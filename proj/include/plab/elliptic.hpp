#pragma once

// Short Weierstrass curves v^2 = u^3 + a*u + b over Q.

#include "plab/cubic_field.hpp"
#include "plab/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plab {

class ECPoint {
public:
    /// The point at infinity.
    ECPoint() = default;
    ECPoint(Rational u, Rational v) : affine_(Affine{std::move(u), std::move(v)}) {}

    static ECPoint infinity() { return ECPoint(); }

    bool is_infinity() const { return !affine_.has_value(); }
    const Rational& u() const;
    const Rational& v() const;

    bool operator==(const ECPoint& o) const;
    /// Infinity first, then by (u, v).
    bool operator<(const ECPoint& o) const;

    std::string to_string() const;

private:
    struct Affine {
        Rational u, v;
    };
    std::optional<Affine> affine_;
};

class ECurve {
public:
    /// Throws DomainError when 4a^3 + 27b^2 = 0.
    ECurve(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Rational discriminant() const;
    Rational rhs(const Rational& u) const;
    bool contains(const ECPoint& p) const;
    bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

private:
    Rational a_, b_;
};

ECPoint ec_neg(const ECurve& E, const ECPoint& P);
ECPoint ec_add(const ECurve& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_mul(const ECurve& E, long n, const ECPoint& P);

/// Affine points with u = p/e^2 in lowest terms and max(|p|, e^2) <= bound,
/// ordered by e, then p, then v.
std::vector<ECPoint> ec_search_points(const ECurve& E, unsigned long height_bound);

struct TorsionPoint {
    ECPoint point;
    int order;
};

/// Lutz-Nagell candidates confirmed by an order check up to 12. Requires
/// integral a, b. Sorted by point.
std::vector<TorsionPoint> ec_torsion(const ECurve& E);

/// v^2 = u^3 - u + 1.
const ECurve& curve_E();
/// (1, -1), the generator of E(Q).
const ECPoint& point_Q0();

enum class PhiVariant { double_point, translate_then_double };

/// [2]P or [2]P + 3Q0 on curve_E(), where 3Q0 = (0, 1).
ECPoint apply_phi(PhiVariant variant, const ECPoint& P);

/// Smallest |n| <= max_n with n*G = P (positive n preferred on ties).
std::optional<long> express_as_multiple(const ECurve& E, const ECPoint& P, const ECPoint& G, long max_n);

enum class SquareTag { trivial, minus_theta, other };

std::string to_string(SquareTag tag);

/// A class in K^x / (K^x)^2.
struct SquareClass {
    KElement representative;
    SquareTag canonical_tag = SquareTag::other;
    /// Unit class mod squares (exponent in {0,1}) when every prime valuation
    /// of the representative is even.
    std::optional<UnitClass> unit_class;
};

SquareClass square_class(const KElement& a);

/// Class of u - theta for affine P on curve_E(), trivial for infinity.
SquareClass x_minus_T(const ECPoint& P);

} // namespace plab
