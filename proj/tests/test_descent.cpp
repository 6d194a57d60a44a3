#include "plab/descent.hpp"
#include "plab/errors.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace plab;

namespace {

// every x of height <= bound, no pruning
std::vector<CDPoint> unpruned_scan(const DValue& D, long bound)
{
    std::vector<CDPoint> out;
    long d2 = D.value() * D.value();
    for (long q = 1; q <= bound; ++q)
        for (long p = -bound; p <= bound; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational x = make_rational(p, q);
            Rational rhs = (x * x * x - x + 1) / d2;
            if (rhs < 0) continue;
            if (auto y = nth_root_rational(rhs, 4)) {
                out.push_back({x, -*y});
                if (*y != 0) out.push_back({x, *y});
            }
        }
    std::sort(out.begin(), out.end(), [](const CDPoint& a, const CDPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return out;
}

std::vector<long> multiples_of(const std::vector<SPoint>& S)
{
    std::vector<long> m;
    for (const auto& s : S) m.push_back(s.multiple);
    return m;
}

} // namespace

TEST_CASE("D values")
{
    std::vector<long> vals;
    for (const auto& D : enumerate_D()) vals.push_back(D.value());
    CHECK(vals == std::vector<long>{1, -1, 2, -2, 23, -23, 46, -46});
    CHECK(d_value_from(-46) == DValue{1, 1, 1});
    CHECK_THROWS_AS(d_value_from(3), DomainError);
    CHECK_THROWS_AS(d_value_from(0), DomainError);
}

TEST_CASE("clearing denominators")
{
    DValue one = d_value_from(1);
    CHECK(on_CD({0, 1}, one));
    CHECK_FALSE(on_CD({0, 2}, one));
    auto t = clear_denominators({0, -1}, one);
    CHECK(t == XYZTriple{0, -1, 1});
    // equation in X, Y, Z for each point found
    for (const auto& D : enumerate_D())
        for (const auto& pt : cd_search(D, 50)) {
            auto T = clear_denominators(pt, D);
            Integer d = D.value();
            CHECK(pow(T.Y, 4UL) == pow(T.X, 3UL) - pow(d, 4UL) * T.X * pow(T.Z, 8UL) + pow(d, 6UL) * pow(T.Z, 12UL));
            CHECK(T.Z > 0);
            CHECK(Rational(d * d) * pt.x == make_rational(T.X, pow(T.Z, 4UL)));
        }
    CHECK_THROWS_AS(clear_denominators({2, 1}, one), DomainError);
}

TEST_CASE("search agrees with an unpruned scan")
{
    for (const auto& D : enumerate_D()) {
        auto found = cd_search(D, 60);
        auto naive = unpruned_scan(D, 60);
        CHECK(found == naive);
    }
    auto pts = cd_search(d_value_from(-1), 100);
    CHECK(pts.size() == 6);
    CHECK(pts.front() == CDPoint{-1, -1});
    CHECK(cd_search(d_value_from(46), 200).empty());
}

TEST_CASE("A, B and their unit classes")
{
    const auto& cands = candidate_delta_pairs();
    REQUIRE(cands.size() == 4);
    CHECK(cands[1].to_string() == "(-theta, -theta^3)");
    for (long s : {1L, -1L}) {
        DValue D = d_value_from(s);
        for (const auto& pt : cd_search(D, 100)) {
            auto T = clear_denominators(pt, D);
            auto [A, B] = compute_AB(T, D);
            CHECK(A * B == KElement(pow(T.Y, 4UL)));
            DeltaPair dp = delta_pair(A, B);
            CHECK(is_candidate_pair(dp));
            if (pt.x == -1) CHECK(dp == DeltaPair{{0, 0}, {0, 0}});
            if (pt.x == 0) CHECK(dp == DeltaPair{{1, 1}, {1, 3}});
            if (pt.x == 1) CHECK(dp == DeltaPair{{1, 3}, {1, 1}});
        }
    }
    CHECK_THROWS_AS(delta_pair(KElement(2), KElement(1)), DomainError);
    CHECK_THROWS_AS(delta_pair(KElement(2), KElement(8)), ClassificationViolation);
    CHECK_FALSE(is_candidate_pair(DeltaPair{{0, 1}, {0, 1}}));
}

TEST_CASE("the set S and its pullback")
{
    for (long s : {1L, -1L})
        for (const auto& pt : cd_search(d_value_from(s), 100)) CHECK(curve_E().contains(psi_D(pt, d_value_from(s))));

    auto S = build_S();
    CHECK(multiples_of(S) == std::vector<long>{-6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 9});
    for (const auto& s : S) CHECK(s.point == ec_mul(curve_E(), s.multiple, point_Q0()));

    std::set<ProjPoint> table;
    for (const auto& t : known_points_X4()) table.insert(ProjPoint(std::vector<Integer>(t.coords.begin(), t.coords.end())));
    auto pulled = x4_points_over_S(S);
    CHECK(std::set<ProjPoint>(pulled.begin(), pulled.end()) == table);
    CHECK(pulled.size() == 10);

    for (long m : {5L, 7L, 9L, 4L, -4L, 6L, -6L}) CHECK(fiber_over(ec_mul(curve_E(), m, point_Q0())).empty());
    CHECK(fiber_over(ECPoint::infinity()).size() >= 1);
}

TEST_CASE("edge cases")
{
    CHECK_THROWS_AS(psi_D({2, 1}, d_value_from(1)), DomainError);
    // A*B a fourth power with delta_B not a unit while delta_A is
    CHECK_THROWS_AS(delta_pair(KElement(1), KElement(16) * KElement(2)), DomainError);
    CHECK_THROWS_AS(delta_pair(KElement(0, 2, 0), KElement(0, 0, 0) + k_pow(KElement::theta(), 3) * KElement(8)),
                    ClassificationViolation);
    CHECK_THROWS_AS(delta_pair(KElement::theta(), KElement::theta()), DomainError);
    DeltaPair ok = delta_pair(KElement::theta(), k_pow(KElement::theta(), 3));
    CHECK(ok == DeltaPair{{0, 1}, {0, 3}});
    CHECK(cd_search(d_value_from(1), 1).size() == 6);
}
