#include "plab/descent.hpp"

#include "plab/errors.hpp"
#include "plab/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plab {

long DValue::value() const
{
    long v = (eps1 ? 2 : 1) * (eps2 ? 23 : 1);
    return eps0 ? -v : v;
}

std::vector<DValue> enumerate_D()
{
    std::vector<DValue> out;
    for (int e2 = 0; e2 < 2; ++e2)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e0 = 0; e0 < 2; ++e0) out.push_back({e0, e1, e2});
    return out;
}

DValue d_value_from(long value)
{
    for (const auto& D : enumerate_D())
        if (D.value() == value) return D;
    throw DomainError("D must be one of +-1, +-2, +-23, +-46, got " + std::to_string(value));
}

bool on_CD(const CDPoint& pt, const DValue& D)
{
    const long d = D.value();
    return Rational(d * d) * pow(pt.y, 4UL) == pt.x * pt.x * pt.x - pt.x + 1;
}

XYZTriple clear_denominators(const CDPoint& pt, const DValue& D)
{
    if (!on_CD(pt, D)) throw DomainError("point is not on C_D for D = " + std::to_string(D.value()));
    const Integer d2 = Integer(D.value()) * D.value();
    const Rational x2 = Rational(d2) * pt.x;
    const Rational y2 = Rational(d2) * pt.y;
    auto Z = nth_root_integer(x2.get_den(), 4);
    ensure(Z.has_value(), "denominator of D^2 x is not a fourth power");
    XYZTriple t{x2.get_num(), Rational(y2 * pow(Rational(*Z), 3UL)).get_num(), *Z};
    ensure(Rational(y2 * pow(Rational(*Z), 3UL)).get_den() == 1, "D^2 y Z^3 is not integral");
    ensure(gcd(t.X, t.Y) == 1 && gcd(t.X, t.Z) == 1, "coprimality of (X, Y, Z) fails");
    const Integer d4 = d2 * d2;
    ensure(pow(t.Y, 4) == pow(t.X, 3) - d4 * t.X * pow(t.Z, 8) + d4 * d2 * pow(t.Z, 12), "cleared equation fails");
    return t;
}

std::pair<KElement, KElement> compute_AB(const XYZTriple& t, const DValue& D)
{
    const Integer d2 = Integer(D.value()) * D.value();
    const Integer z4 = pow(t.Z, 4);
    const KElement theta = KElement::theta();
    KElement A = KElement(Rational(t.X)) - theta * KElement(Rational(d2 * z4));
    KElement B = KElement(Rational(t.X * t.X)) + theta * KElement(Rational(d2 * t.X * z4))
                 + (theta * theta - KElement(1)) * KElement(Rational(d2 * d2 * z4 * z4));
    ensure(A * B == KElement(Rational(pow(t.Y, 4))), "A*B != Y^4");
    return {A, B};
}

std::string DeltaPair::to_string() const
{
    return "(" + delta_A.to_string() + ", " + delta_B.to_string() + ")";
}

const std::vector<DeltaPair>& candidate_delta_pairs()
{
    static const std::vector<DeltaPair> pairs{
        {{0, 0}, {0, 0}},
        {{1, 1}, {1, 3}},
        {{0, 2}, {0, 2}},
        {{1, 3}, {1, 1}},
    };
    return pairs;
}

bool is_candidate_pair(const DeltaPair& p)
{
    const auto& c = candidate_delta_pairs();
    return std::find(c.begin(), c.end(), p) != c.end();
}

DeltaPair delta_pair(const KElement& A, const KElement& B)
{
    auto product = fourth_power_free(A * B);
    if (!product.delta_class || !(*product.delta_class == UnitClass{0, 0}))
        throw DomainError("A*B is not a fourth power in K");
    auto fa = fourth_power_free(A);
    auto fb = fourth_power_free(B);
    if (!fa.delta_class) throw ClassificationViolation("fourth-power-free part of A is not a unit: " + fa.delta.to_string());
    ensure(fb.delta_class.has_value(), "fourth-power-free part of B is not a unit although A*B is a fourth power");
    return {*fa.delta_class, *fb.delta_class};
}

namespace {

// Rows q for which (p^3 - p q^2 + q^3) / (q^3 D^2) can be a fourth power: the
// numerator is prime to q, so q^3 D^2 / g must be a fourth power for
// g = gcd(numerator, D^2).
bool row_possible(unsigned long q, const Integer& d2)
{
    const Integer q3 = pow(Integer(q), 3);
    for (const auto& g : divisors(d2))
        if (nth_root_integer(q3 * d2 / g, 4)) return true;
    return false;
}

} // namespace

std::vector<CDPoint> cd_search(const DValue& D, unsigned long height_bound)
{
    const Integer d2 = Integer(D.value()) * D.value();
    std::vector<unsigned long> rows;
    for (unsigned long q = 1; q <= height_bound; ++q)
        if (row_possible(q, d2)) rows.push_back(q);
    std::vector<std::vector<CDPoint>> found(rows.size());
    const long bound = static_cast<long>(height_bound);
    parallel_for(rows.size(), [&](std::size_t idx) {
        const unsigned long q = rows[idx];
        for (long p = -bound; p <= bound; ++p) {
            if (std::gcd(static_cast<unsigned long>(std::labs(p)), q) != 1) continue;
            Rational x = make_rational(p, q);
            Rational value = (x * x * x - x + 1) / Rational(d2);
            if (value < 0) continue;
            auto y = nth_root_rational(value, 4);
            if (!y) continue;
            found[idx].push_back({x, -*y});
            if (*y != 0) found[idx].push_back({x, *y});
        }
    });
    std::vector<CDPoint> out;
    for (auto& row : found) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end(), [](const CDPoint& a, const CDPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return out;
}

ECPoint psi_D(const CDPoint& pt, const DValue& D)
{
    if (!on_CD(pt, D)) throw DomainError("point is not on C_D for D = " + std::to_string(D.value()));
    ECPoint P(pt.x, Rational(D.value()) * pt.y * pt.y);
    ensure(curve_E().contains(P), "psi_D image is off E");
    return P;
}

std::vector<SPoint> build_S(unsigned long height_bound)
{
    const ECurve& E = curve_E();
    const ECPoint& Q0 = point_Q0();
    std::set<ECPoint> points{ECPoint::infinity(), ECPoint(0, 1)};
    for (long d : {1L, -1L}) {
        DValue D = d_value_from(d);
        for (const auto& pt : cd_search(D, height_bound)) {
            ECPoint image = psi_D(pt, D);
            points.insert(apply_phi(PhiVariant::double_point, image));
            points.insert(apply_phi(PhiVariant::translate_then_double, image));
        }
    }
    std::vector<SPoint> out;
    for (const auto& P : points) {
        auto m = express_as_multiple(E, P, Q0, 64);
        ensure(m.has_value(), "element of S is not a small multiple of Q0");
        out.push_back({P, *m});
    }
    std::sort(out.begin(), out.end(), [](const SPoint& a, const SPoint& b) { return a.multiple < b.multiple; });
    return out;
}

std::vector<ProjPoint> fiber_over(const ECPoint& P)
{
    return lift_to_X4(mu_inv(P));
}

std::vector<ProjPoint> x4_points_over_S(const std::vector<SPoint>& S)
{
    std::set<ProjPoint> all;
    for (const auto& s : S)
        for (auto& p : fiber_over(s.point)) all.insert(std::move(p));
    return {all.begin(), all.end()};
}

} // namespace plab
