#include "plab/errors.hpp"
#include "plab/preimage_curves.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace plab;

namespace {

Rational iterate_orbit(int n, const Rational& c)
{
    Rational x = 0;
    for (int i = 0; i < n; ++i) x = x * x + c;
    return x;
}

// c -> f_c^4(x) at x = 0 by forward iteration, mod p
long long orbit_mod(int n, long long c, long long x, long long p)
{
    for (int i = 0; i < n; ++i) x = ((x * x + c) % p + p) % p;
    return x;
}

} // namespace

TEST_CASE("ideal generators")
{
    auto I = preimage_ideal(3, 0);
    REQUIRE(I.gens.size() == 2);
    CHECK(I.gens[0].to_string() == "Z1^2 + Z1*W - Z2^2");
    CHECK(I.gens[1].to_string() == "Z1^2 + Z2*W - Z3^2");
    CHECK(I.tags == std::vector<std::size_t>{1, 2});
    auto J = preimage_ideal(2, Rational(1, 4));
    CHECK(J.gens[0].to_string() == "Z1^2 + Z1*W - Z2^2 - 1/4*W^2");
    CHECK_THROWS_AS(preimage_ideal(1, 0), DomainError);
}

TEST_CASE("affine chart recovers the orbit")
{
    // x = ZN, c = -Z1^2, Z_i = f(Z_{i+1}) and f^N(x) = 0
    for (long z1 = -4; z1 <= 4; ++z1) {
        Rational c = -Rational(z1 * z1);
        auto I = preimage_ideal(2, 0);
        for (long x = -20; x <= 20; ++x) {
            ProjPoint p = ProjPoint::from_rationals({1, Rational(z1), Rational(x)});
            Rational fx = Rational(x) * x + c;
            CHECK(on_curve(p, I) == (fx == z1 && fx * fx + c == 0));
        }
    }
}

TEST_CASE("boundary points")
{
    for (int N = 2; N <= 6; ++N) {
        auto pts = boundary_points(N);
        CHECK(pts.size() == (1u << (N - 1)));
        auto I = preimage_ideal(N, Rational(3, 7));
        for (const auto& p : pts) {
            CHECK(on_curve(p, I));
            CHECK(p[0] == 0);
            CHECK(p[1] == 1);
        }
    }
    CHECK(boundary_points(3).front().to_string() == "[0,1,1,1]");
}

TEST_CASE("projective normalization")
{
    ProjPoint p({0, -2, 4, -6});
    CHECK(p.to_string() == "[0,1,-2,3]");
    CHECK(ProjPoint::from_rationals({Rational(1, 2), Rational(-1, 3)}).to_string() == "[3,-2]");
    CHECK_THROWS_AS(ProjPoint({0, 0}), DomainError);
}

TEST_CASE("membership reconstructs g from the remainder chain")
{
    std::mt19937_64 rng(0x5eed0501);
    std::uniform_int_distribution<int> e(0, 2), k(-3, 3);
    for (int N : {3, 4}) {
        auto I = preimage_ideal(N, N == 3 ? Rational(0) : Rational(-2, 3));
        const auto& vars = I.gens[0].vars();
        for (int i = 0; i < 40; ++i) {
            MPoly g(vars);
            for (const auto& gen : I.gens) {
                MPoly q(vars);
                for (int t = 0; t < 3; ++t) {
                    MPoly::Exponents ex(vars.size());
                    for (auto& x : ex) x = static_cast<unsigned>(e(rng));
                    q.add_term(ex, k(rng));
                }
                g += q * gen;
            }
            MPoly extra(vars);
            if (i % 2) extra.add_term(MPoly::Exponents(vars.size(), 0), 1 + i);
            auto r = ideal_membership(g + extra, I);
            CHECK(r.member == (i % 2 == 0));
            MPoly back = r.remainder;
            for (std::size_t j = 0; j < I.gens.size(); ++j) back += r.quotients[j] * I.gens[j];
            CHECK(back == g + extra);
        }
    }
    auto I = preimage_ideal(3, 0);
    CHECK_FALSE(ideal_membership(MPoly::variable(I.gens[0].vars(), 3), I).member);
}

TEST_CASE("mu and its inverse")
{
    const ECurve& E = curve_E();
    auto I = preimage_ideal(3, 0);
    for (long m = -8; m <= 8; ++m) {
        ECPoint P = ec_mul(E, m, point_Q0());
        ProjPoint p = mu_inv(P);
        CHECK(on_curve(p, I));
        CHECK(mu(p) == P);
    }
    for (const auto& b : boundary_points(3)) CHECK(mu_inv(mu(b)) == b);
    CHECK_THROWS_AS(mu(ProjPoint({1, 1, 1, 1})), DomainError);
    CHECK_THROWS_AS(mu_inv(ECPoint(2, 2)), DomainError);
}

TEST_CASE("known points of X(4,0)")
{
    auto I = preimage_ideal(4, 0);
    const auto& table = known_points_X4();
    REQUIRE(table.size() == 10);
    std::set<ProjPoint> seen;
    for (const auto& t : table) {
        std::vector<Integer> c(t.coords.begin(), t.coords.end());
        ProjPoint p(c);
        CHECK(on_curve(p, I));
        CHECK(pi(p) == ec_mul(curve_E(), t.multiple, point_Q0()));
        seen.insert(p);
        ProjPoint base({c[0], c[1], c[2], c[3]});
        auto lifts = lift_to_X4(base);
        CHECK(std::find(lifts.begin(), lifts.end(), p) != lifts.end());
    }
    CHECK(seen.size() == 10);
    CHECK(table[1].label == "P2");
    CHECK(table[1].multiple == 2);
}

TEST_CASE("critical orbit and the ramification polynomial")
{
    MPoly F = ramification_poly();
    CHECK(F.to_string() == "c^6 + 3*c^5 + 3*c^4 + 3*c^3 + 2*c^2 + 1");
    for (long p = -10; p <= 10; ++p)
        for (long q = 1; q <= 4; ++q) {
            Rational c = make_rational(p, q);
            CHECK(critical_orbit(4).eval({c}) == iterate_orbit(4, c));
            CHECK(F.eval({c}) * (c * c + c) == iterate_orbit(4, c));
        }
    CHECK(poly_disc(F) == 58673);
}

TEST_CASE("singular points mod p")
{
    auto r = singular_check_mod_p(2551);
    CHECK(r.double_roots == std::vector<long long>{-477});
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].projective_point == std::vector<long long>{1, -308, 13, -477, 0});
    CHECK(r.points[0].hessian_det == 1075);
    CHECK(r.points[0].hessian_nondegenerate);
    CHECK_FALSE(r.inverted_in_base_ring);
    // forward iteration oracle: -477 is a root and the orbit values match
    CHECK(orbit_mod(4, -477, 0, 2551) == 0);
    CHECK(orbit_mod(1, -477, 0, 2551) == 2551 - 477);
    CHECK(orbit_mod(2, -477, 0, 2551) == 13);
    CHECK(orbit_mod(3, -477, 0, 2551) == 2551 - 308);

    auto r23 = singular_check_mod_p(23);
    CHECK(r23.inverted_in_base_ring);
    CHECK(r23.double_roots == std::vector<long long>{-4});

    CHECK(singular_check_mod_p(7).double_roots.empty());
    CHECK_THROWS_AS(singular_check_mod_p(2), DomainError);
    CHECK_THROWS_AS(singular_check_mod_p(15), DomainError);
}

TEST_CASE("genus arithmetic")
{
    CHECK(riemann_hurwitz(1, 2, 6) == 4);
    CHECK(riemann_hurwitz(1, 2, 8) == 5);
    CHECK(riemann_hurwitz(0, 2, 6) == 2);
    CHECK_THROWS_AS(riemann_hurwitz(1, 2, 5), DomainError);
    CHECK_THROWS_AS(riemann_hurwitz(0, 2, 0), DomainError);
}

TEST_CASE("edge cases")
{
    auto I = preimage_ideal(3, 0);
    CHECK_FALSE(on_curve(ProjPoint({1, 0, 0}), I));
    CHECK(on_curve(ProjPoint({1, 0, 0}), IdealGens{}));
    const auto& vars = I.gens[0].vars();
    MPoly z1 = MPoly::variable(vars, 0);

    IdealGens untagged{I.gens, {1}};
    CHECK_THROWS_AS(ideal_membership(z1, untagged), DomainError);
    IdealGens repeated{I.gens, {1, 1}};
    CHECK_THROWS_AS(ideal_membership(z1, repeated), DomainError);
    IdealGens absent{{I.gens[0]}, {2}};
    CHECK_THROWS_AS(ideal_membership(z1, absent), DomainError);
    MPoly w = MPoly::variable(vars, 3);
    IdealGens not_monic{{w * MPoly::variable(vars, 1).pow(2)}, {1}};
    CHECK_THROWS_AS(ideal_membership(z1, not_monic), DomainError);
    // each generator mentions the other's tag
    MPoly z2 = MPoly::variable(vars, 1), z3 = MPoly::variable(vars, 2);
    IdealGens cyclic{{z2.pow(2) + z3, z3.pow(2) + z2}, {1, 2}};
    CHECK_THROWS_AS(ideal_membership(z1, cyclic), DomainError);

    CHECK_THROWS_AS(pi(ProjPoint({1, 1, 1, 1, 1})), DomainError);
    CHECK_THROWS_AS(lift_to_X4(ProjPoint({1, 1, 1, 1})), DomainError);
    CHECK_THROWS_AS(critical_orbit(-1), DomainError);
    CHECK(critical_orbit(0).is_zero());
    CHECK_THROWS_AS(riemann_hurwitz(1, 0, 2), DomainError);
    CHECK_THROWS_AS(riemann_hurwitz(-1, 2, 2), DomainError);
    CHECK_THROWS_AS(riemann_hurwitz(1, 2, -2), DomainError);
    // boundary points lift to two points each, one when Z3 vanishes
    for (const auto& b : boundary_points(3)) CHECK(lift_to_X4(b).size() == 2);
    CHECK(lift_to_X4(ProjPoint({1, 0, 0, 0})).size() == 1);
}
