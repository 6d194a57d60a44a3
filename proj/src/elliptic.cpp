#include "plab/elliptic.hpp"

#include "plab/errors.hpp"
#include "plab/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plab {

const Rational& ECPoint::u() const
{
    if (!affine_) throw DomainError("point at infinity has no affine coordinates");
    return affine_->u;
}

const Rational& ECPoint::v() const
{
    if (!affine_) throw DomainError("point at infinity has no affine coordinates");
    return affine_->v;
}

bool ECPoint::operator==(const ECPoint& o) const
{
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return affine_->u == o.affine_->u && affine_->v == o.affine_->v;
}

bool ECPoint::operator<(const ECPoint& o) const
{
    if (is_infinity() || o.is_infinity()) return is_infinity() && !o.is_infinity();
    if (affine_->u != o.affine_->u) return affine_->u < o.affine_->u;
    return affine_->v < o.affine_->v;
}

std::string ECPoint::to_string() const
{
    if (is_infinity()) return "O";
    return "(" + plab::to_string(affine_->u) + ", " + plab::to_string(affine_->v) + ")";
}

ECurve::ECurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b))
{
    if (4 * a_ * a_ * a_ + 27 * b_ * b_ == 0) throw DomainError("singular Weierstrass equation");
}

Rational ECurve::discriminant() const
{
    return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_);
}

Rational ECurve::rhs(const Rational& u) const
{
    return u * u * u + a_ * u + b_;
}

bool ECurve::contains(const ECPoint& p) const
{
    return p.is_infinity() || p.v() * p.v() == rhs(p.u());
}

namespace {

void require_on(const ECurve& E, const ECPoint& P)
{
    if (!E.contains(P)) throw DomainError("point " + P.to_string() + " is not on the curve");
}

} // namespace

ECPoint ec_neg(const ECurve& E, const ECPoint& P)
{
    require_on(E, P);
    if (P.is_infinity()) return P;
    return ECPoint(P.u(), -P.v());
}

ECPoint ec_add(const ECurve& E, const ECPoint& P, const ECPoint& Q)
{
    require_on(E, P);
    require_on(E, Q);
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    Rational slope;
    if (P.u() == Q.u()) {
        if (P.v() != Q.v() || P.v() == 0) return ECPoint::infinity();
        slope = (3 * P.u() * P.u() + E.a()) / (2 * P.v());
    } else {
        slope = (Q.v() - P.v()) / (Q.u() - P.u());
    }
    Rational u3 = slope * slope - P.u() - Q.u();
    Rational v3 = slope * (P.u() - u3) - P.v();
    return ECPoint(u3, v3);
}

ECPoint ec_mul(const ECurve& E, long n, const ECPoint& P)
{
    require_on(E, P);
    ECPoint base = n < 0 ? ec_neg(E, P) : P;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    ECPoint acc;
    while (k > 0) {
        if (k & 1) acc = ec_add(E, acc, base);
        base = ec_add(E, base, base);
        k >>= 1;
    }
    return acc;
}

std::vector<ECPoint> ec_search_points(const ECurve& E, unsigned long height_bound)
{
    std::vector<unsigned long> es;
    for (unsigned long e = 1; e * e <= height_bound; ++e) es.push_back(e);
    std::vector<std::vector<ECPoint>> rows(es.size());
    const long bound = static_cast<long>(height_bound);
    parallel_for(es.size(), [&](std::size_t idx) {
        const unsigned long e = es[idx];
        const Integer e2 = Integer(e) * e;
        const Integer e4 = e2 * e2;
        const Integer e6 = e4 * e2;
        auto& out = rows[idx];
        for (long p = -bound; p <= bound; ++p) {
            if (std::gcd(static_cast<unsigned long>(std::labs(p)), e) != 1) continue;
            Rational u = make_rational(p, e2);
            if (E.is_integral()) {
                // u^3 + a u + b = (p^3 + a p e^4 + b e^6) / e^6
                Integer num = Integer(p) * p * p + E.a().get_num() * p * e4 + E.b().get_num() * e6;
                if (num < 0) continue;
                if (mpz_perfect_square_p(num.get_mpz_t()) == 0) continue;
                Integer s = sqrt(num);
                Rational v = make_rational(s, e2 * e);
                if (v == 0) {
                    out.emplace_back(u, v);
                } else {
                    out.emplace_back(u, -v);
                    out.emplace_back(u, v);
                }
            } else {
                auto v = nth_root_rational(E.rhs(u), 2);
                if (!v) continue;
                if (*v == 0) {
                    out.emplace_back(u, *v);
                } else {
                    out.emplace_back(u, -*v);
                    out.emplace_back(u, *v);
                }
            }
        }
    });
    std::vector<ECPoint> all;
    for (auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    return all;
}

std::vector<TorsionPoint> ec_torsion(const ECurve& E)
{
    if (!E.is_integral()) throw DomainError("Lutz-Nagell needs an integral model");
    const Integer a = E.a().get_num();
    const Integer b = E.b().get_num();
    const Integer bound = abs(Integer(4 * a * a * a + 27 * b * b));

    // integer roots of x^3 + a x + k
    auto integer_roots = [&](const Integer& k) {
        std::set<Integer> rootset;
        auto check = [&](const Integer& x) {
            if (x * x * x + a * x + k == 0) rootset.insert(x);
        };
        if (k == 0) {
            check(0);
            if (auto r = nth_root_integer(Integer(-a), 2)) {
                check(*r);
                check(-*r);
            }
        } else {
            for (const auto& d : divisors(k)) {
                check(d);
                check(-d);
            }
        }
        return rootset;
    };

    std::set<ECPoint> candidates;
    for (const auto& x : integer_roots(b)) candidates.insert(ECPoint(Rational(x), 0));
    for (const auto& y2 : divisors(bound)) {
        auto y = nth_root_integer(y2, 2);
        if (!y) continue;
        for (const auto& x : integer_roots(b - y2)) {
            candidates.insert(ECPoint(Rational(x), Rational(*y)));
            candidates.insert(ECPoint(Rational(x), Rational(-*y)));
        }
    }

    std::vector<TorsionPoint> out{{ECPoint::infinity(), 1}};
    for (const auto& P : candidates) {
        ECPoint acc = P;
        for (int k = 1; k <= 12; ++k) {
            if (acc.is_infinity()) {
                out.push_back({P, k});
                break;
            }
            acc = ec_add(E, acc, P);
        }
    }
    return out;
}

const ECurve& curve_E()
{
    static const ECurve E(-1, 1);
    return E;
}

const ECPoint& point_Q0()
{
    static const ECPoint Q0(1, -1);
    return Q0;
}

ECPoint apply_phi(PhiVariant variant, const ECPoint& P)
{
    const ECurve& E = curve_E();
    ECPoint doubled = ec_add(E, P, P);
    if (variant == PhiVariant::double_point) return doubled;
    return ec_add(E, doubled, ECPoint(0, 1));
}

std::optional<long> express_as_multiple(const ECurve& E, const ECPoint& P, const ECPoint& G, long max_n)
{
    require_on(E, P);
    require_on(E, G);
    ECPoint multiple;
    for (long n = 0; n <= max_n; ++n) {
        if (multiple == P) return n;
        if (ec_neg(E, multiple) == P) return -n;
        multiple = ec_add(E, multiple, G);
    }
    return std::nullopt;
}

std::string to_string(SquareTag tag)
{
    switch (tag) {
    case SquareTag::trivial: return "trivial";
    case SquareTag::minus_theta: return "minus_theta";
    case SquareTag::other: return "other";
    }
    return "other";
}

SquareClass square_class(const KElement& a)
{
    if (a.is_zero()) throw DomainError("square class of zero");
    Integer m = lcm_of_denominators({a[0], a[1], a[2]});
    auto f = factor_integral(a * KElement(Rational(m * m)));
    SquareClass out{a, SquareTag::other, std::nullopt};
    for (const auto& [P, v] : f.primes)
        if (v % 2 != 0) return out;
    UnitClass uc = f.unit.reduced(2);
    out.unit_class = uc;
    if (uc == UnitClass{0, 0})
        out.canonical_tag = SquareTag::trivial;
    else if (uc == UnitClass{1, 1})
        out.canonical_tag = SquareTag::minus_theta;
    return out;
}

SquareClass x_minus_T(const ECPoint& P)
{
    require_on(curve_E(), P);
    if (P.is_infinity()) return SquareClass{KElement(1), SquareTag::trivial, UnitClass{0, 0}};
    return square_class(KElement(P.u(), -1, 0));
}

} // namespace plab
