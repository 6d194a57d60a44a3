#pragma once

// Projective preimage curves X(N, a) in P^N with coordinates [W, Z1, ..., ZN],
// cut out by Z1^2 + Zi*W - Z(i+1)^2 - a*W^2 for 1 <= i < N. For a = 0 the
// affine chart W = 1 recovers f_c^N(x) = 0 with ZN = x and c = -Z1^2.

#include "plab/elliptic.hpp"
#include "plab/exact.hpp"
#include "plab/fp_poly.hpp"
#include "plab/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plab {

/// Primitive integer vector with first nonzero coordinate positive.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Integer> coords);
    /// Clears denominators first.
    static ProjPoint from_rationals(const std::vector<Rational>& coords);

    const std::vector<Integer>& coords() const { return c_; }
    std::size_t size() const { return c_.size(); }
    const Integer& operator[](std::size_t i) const { return c_[i]; }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator<(const ProjPoint& o) const;

    /// "[0,1,-1,1,1]"
    std::string to_string() const;

private:
    std::vector<Integer> c_;
};

struct IdealGens {
    std::vector<MPoly> gens;
    /// Variable index in which gens[i] is monic up to a unit.
    std::vector<std::size_t> tags;
};

/// Variables are ordered Z1..ZN, W so that printing follows the usual
/// presentation; use point_values() to evaluate at a ProjPoint.
IdealGens preimage_ideal(int N, const Rational& a);

/// [W, Z1, ..., ZN] -> values in the variable order of preimage_ideal.
std::vector<Rational> point_values(const ProjPoint& p);

bool on_curve(const ProjPoint& p, const IdealGens& ideal);

/// The 2^(N-1) points [0, e1, ..., eN] with ei = +-1, up to global sign.
std::vector<ProjPoint> boundary_points(int N);

struct MembershipResult {
    bool member = false;
    MPoly remainder;
    /// quotients[i] multiplies gens[i]; g = sum quotients[i]*gens[i] + remainder.
    std::vector<MPoly> quotients;
};

/// Remainder chain: divide by each generator in its tagged variable. The
/// generators are visited in an order where each tag variable is absent from
/// the generators still to come, so reductions never undo each other.
MembershipResult ideal_membership(const MPoly& g, const IdealGens& ideal);

/// X(3, 0) -> E, both charts evaluated and compared.
ECPoint mu(const ProjPoint& p);
/// E -> X(3, 0).
ProjPoint mu_inv(const ECPoint& P);

/// mu of the projection [W, Z1, Z2, Z3, Z4] -> [W, Z1, Z2, Z3].
ECPoint pi(const ProjPoint& p);

/// Rational points of X(4, 0) above a point of X(3, 0): solutions of
/// Z4^2 = Z1^2 + Z3*W, sorted.
std::vector<ProjPoint> lift_to_X4(const ProjPoint& p);

struct TablePoint {
    std::string label;
    /// As written in the table, not normalized.
    std::vector<long> coords;
    /// pi(P) = multiple * Q0.
    long multiple;
};

const std::vector<TablePoint>& known_points_X4();

/// f_c^n(0) as a polynomial in c.
MPoly critical_orbit(int n);

/// F(c) = f_c^4(0) / f_c^2(0); the identity is checked on construction.
MPoly ramification_poly();

struct SingularPoint {
    long long c0;
    /// Hessian of f_c^4(x) in (x, c) at (0, c0), reduced mod p.
    std::uint64_t hessian_det;
    bool hessian_nondegenerate;
    /// [W, Z1, Z2, Z3, Z4] mod p in symmetric residues.
    std::vector<long long> projective_point;
};

struct SingularReport {
    std::uint64_t p;
    /// Multiple roots of f_c^4(0) mod p.
    std::vector<long long> double_roots;
    std::vector<SingularPoint> points;
    /// 2 and 23 are inverted in the base ring, so their fibres are not part of
    /// the model and any singularity there is irrelevant.
    bool inverted_in_base_ring;
};

/// Throws DomainError for p = 2 or composite p.
SingularReport singular_check_mod_p(std::uint64_t p);

/// g with 2g - 2 = degree*(2*genus_base - 2) + simple_ram_count.
long riemann_hurwitz(long genus_base, long degree, long simple_ram_count);

} // namespace plab
