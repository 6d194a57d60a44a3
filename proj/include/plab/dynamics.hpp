#pragma once

// Rational iterated preimages under f(x) = x^d + c and the reductions used
// for d >= 3.

#include "plab/elliptic.hpp"
#include "plab/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plab {

/// Rational x with x^d + c = y, ascending.
std::vector<Rational> preimage_step(int d, const Rational& c, const Rational& y);

struct PreimageNode {
    Rational value;
    /// Already seen at a shallower level (or equal to the root); not expanded.
    bool cycle = false;
};

struct PreimageTree {
    int d;
    Rational c, root;
    /// levels[N-1] holds f^-N(root)(Q), ascending.
    std::vector<std::vector<PreimageNode>> levels;
    /// Distinct values over all levels, ascending.
    std::vector<Rational> values;
    bool cycle_detected = false;
    /// Some value on the last level still has rational preimages.
    bool truncated = false;
    std::vector<Rational> truncated_at;
};

PreimageTree iterated_preimages(int d, const Rational& c, const Rational& a, int depth_limit);

/// Closed-form count of rational iterated preimages of 0, d >= 3.
long corollary_count(int d, const Rational& c);

/// Maximum of the counts over c in Q.
long kappa(int d);

/// A^d = C^(d-1) + B^(d(d-1)), gcd(A, B) = gcd(B, C) = 1, B > 0.
struct DMTriple {
    Integer A, B, C;
};

/// Primitive solution of x^n + y^n = z^2.
struct DMSolution {
    int n;
    Integer x, y, z;
    bool trivial() const;
};

/// (C, B^d, A^(d/2)) with n = d-1 for even d, (A, -B^(d-1), C^((d-1)/2)) with
/// n = d for odd d.
DMSolution dm_solution(int d, const DMTriple& t);

/// Builds the triple from a claimed second preimage z2 of 0 under
/// x^d - z1^d, d >= 2. Throws DomainError unless f(f(z2)) = 0 with
/// f(z2) != 0 and z2 != 0. Witnesses exist for d = 2 (z1 = 1/3, z2 = 2/3);
/// for d >= 3 every input is expected to be rejected.
DMTriple dm_reduction(int d, const Rational& z1, const Rational& z2);

struct DMSearchResult {
    int n;
    long bound;
    std::vector<DMSolution> trivial, nontrivial;
};

/// All primitive solutions with |x|, |y| <= bound.
DMSearchResult dm_search(int n, long bound);

struct RouteCandidate {
    TorsionPoint point;
    std::string excluded_because;
};

struct RouteVerdict {
    int d;
    Rational c;
    /// y^2 = x^3 - 1 for d = 3, y^2 = x^3 + 1 for d = 4.
    Rational curve_b;
    bool first_preimage_exists;
    bool second_preimage_exists;
    std::vector<RouteCandidate> candidates;
};

/// A second preimage z2 of 0 gives the rational point (z2/z1, 1/z1) on
/// y^2 = x^3 - 1 (d = 3) or (1/z1, (z2/z1)^2) on y^2 = x^3 + 1 (d = 4). Both
/// groups are finite, so every point is checked and ruled out.
RouteVerdict second_preimage_route_d34(int d, const Rational& c);

} // namespace plab
