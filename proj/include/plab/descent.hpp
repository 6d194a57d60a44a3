#pragma once

// The twisted quartics C_D: D^2 y^4 = x^3 - x + 1, the elements A, B of K
// attached to their points, and the pullback of the resulting set S of
// E(Q) to X(4, 0).

#include "plab/cubic_field.hpp"
#include "plab/elliptic.hpp"
#include "plab/preimage_curves.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plab {

/// (-1)^eps0 * 2^eps1 * 23^eps2.
struct DValue {
    int eps0 = 0, eps1 = 0, eps2 = 0;

    long value() const;
    bool operator==(const DValue&) const = default;
};

/// [1, -1, 2, -2, 23, -23, 46, -46].
std::vector<DValue> enumerate_D();
/// Throws DomainError for values outside the eight above.
DValue d_value_from(long value);

struct CDPoint {
    Rational x, y;
    bool operator==(const CDPoint&) const = default;
};

bool on_CD(const CDPoint& pt, const DValue& D);

/// Y^4 = X^3 - D^4 X Z^8 + D^6 Z^12 with gcd(X, Y) = gcd(X, Z) = 1, Z > 0.
struct XYZTriple {
    Integer X, Y, Z;
    bool operator==(const XYZTriple&) const = default;
};

/// D^2 x = X / Z^4, D^2 y = Y / Z^3.
XYZTriple clear_denominators(const CDPoint& pt, const DValue& D);

/// A = X - D^2 theta Z^4, B = X^2 + D^2 theta X Z^4 + D^4 (theta^2 - 1) Z^8,
/// with A*B = Y^4 checked.
std::pair<KElement, KElement> compute_AB(const XYZTriple& t, const DValue& D);

/// Unit classes mod fourth powers (theta exponent in 0..3).
struct DeltaPair {
    UnitClass delta_A, delta_B;
    bool operator==(const DeltaPair&) const = default;
    std::string to_string() const;
};

/// (1,1), (-theta,-theta^3), (theta^2,theta^2), (-theta^3,-theta).
const std::vector<DeltaPair>& candidate_delta_pairs();
bool is_candidate_pair(const DeltaPair& p);

/// Fourth-power-free parts of A and B. Throws ClassificationViolation when
/// either part is not a unit, DomainError when A*B is not a fourth power.
DeltaPair delta_pair(const KElement& A, const KElement& B);

/// Rational points with naive height of x at most height_bound, sorted by
/// (x, y).
std::vector<CDPoint> cd_search(const DValue& D, unsigned long height_bound);

/// (x, y) -> (x, D y^2) on E.
ECPoint psi_D(const CDPoint& pt, const DValue& D);

struct SPoint {
    ECPoint point;
    long multiple;
};

/// phi(psi_D(C_D(Q))) for both choices of phi and D = +-1, together with O and
/// 3Q0, each labelled by its multiple of Q0. Sorted by multiple.
std::vector<SPoint> build_S(unsigned long height_bound = 100);

/// Rational points of X(4, 0) above P.
std::vector<ProjPoint> fiber_over(const ECPoint& P);

/// Union of the fibres above S, sorted.
std::vector<ProjPoint> x4_points_over_S(const std::vector<SPoint>& S);

} // namespace plab
