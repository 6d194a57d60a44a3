#include "plab/preimage_curves.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plab {

ProjPoint::ProjPoint(std::vector<Integer> coords) : c_(std::move(coords))
{
    Integer g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    if (g == 0) throw DomainError("projective point with all coordinates zero");
    auto first = std::find_if(c_.begin(), c_.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : c_) x /= g;
}

ProjPoint ProjPoint::from_rationals(const std::vector<Rational>& coords)
{
    Integer m = lcm_of_denominators(coords);
    std::vector<Integer> out;
    for (const auto& q : coords) out.push_back(Rational(q * m).get_num());
    return ProjPoint(std::move(out));
}

bool ProjPoint::operator<(const ProjPoint& o) const
{
    return c_ < o.c_;
}

std::string ProjPoint::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
    os << ']';
    return os.str();
}

IdealGens preimage_ideal(int N, const Rational& a)
{
    if (N < 2) throw DomainError("preimage curves need N >= 2");
    std::vector<std::string> vars;
    for (int i = 1; i <= N; ++i) vars.push_back("Z" + std::to_string(i));
    vars.push_back("W");
    const std::size_t w = static_cast<std::size_t>(N);
    auto var = [&](std::size_t k) { return MPoly::variable(vars, k); };
    IdealGens out;
    for (int i = 1; i < N; ++i) {
        const auto zi = static_cast<std::size_t>(i - 1);
        const auto znext = static_cast<std::size_t>(i);
        MPoly g = var(0) * var(0) + var(zi) * var(w) - var(znext) * var(znext) - var(w) * var(w) * a;
        out.gens.push_back(std::move(g));
        out.tags.push_back(znext);
    }
    return out;
}

std::vector<Rational> point_values(const ProjPoint& p)
{
    std::vector<Rational> out;
    for (std::size_t i = 1; i < p.size(); ++i) out.emplace_back(p[i]);
    out.emplace_back(p[0]);
    return out;
}

bool on_curve(const ProjPoint& p, const IdealGens& ideal)
{
    if (ideal.gens.empty()) return true;
    if (p.size() != ideal.gens.front().nvars()) return false;
    auto values = point_values(p);
    return std::all_of(ideal.gens.begin(), ideal.gens.end(), [&](const MPoly& g) { return g.eval(values) == 0; });
}

std::vector<ProjPoint> boundary_points(int N)
{
    if (N < 2) throw DomainError("preimage curves need N >= 2");
    std::vector<ProjPoint> out;
    const unsigned long count = 1UL << (N - 1);
    for (unsigned long mask = 0; mask < count; ++mask) {
        std::vector<Integer> c{0, 1};
        for (int i = 1; i < N; ++i) c.push_back((mask >> (N - 1 - i)) & 1 ? -1 : 1);
        out.emplace_back(std::move(c));
    }
    return out;
}

namespace {

void require_unit_leading(const MPoly& g, std::size_t tag)
{
    long k = g.degree_in(tag);
    if (k < 1) throw DomainError("generator does not involve its tagged variable");
    MPoly lead = g.coefficient_in(tag, static_cast<unsigned>(k));
    if (!lead.is_constant()) throw DomainError("generator is not monic in its tagged variable: " + g.to_string());
}

} // namespace

MembershipResult ideal_membership(const MPoly& g, const IdealGens& ideal)
{
    if (ideal.gens.size() != ideal.tags.size()) throw DomainError("every generator needs a tag");
    std::set<std::size_t> distinct(ideal.tags.begin(), ideal.tags.end());
    if (distinct.size() != ideal.tags.size()) throw DomainError("generator tags must be distinct");
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) require_unit_leading(ideal.gens[i], ideal.tags[i]);

    MembershipResult out;
    out.remainder = g;
    for (const auto& gen : ideal.gens) out.quotients.emplace_back(gen.vars());

    std::vector<bool> done(ideal.gens.size(), false);
    for (std::size_t step = 0; step < ideal.gens.size(); ++step) {
        std::optional<std::size_t> next;
        for (std::size_t i = 0; i < ideal.gens.size() && !next; ++i) {
            if (done[i]) continue;
            bool clean = true;
            for (std::size_t j = 0; j < ideal.gens.size(); ++j)
                if (j != i && !done[j] && ideal.gens[j].degree_in(ideal.tags[i]) > 0) clean = false;
            if (clean) next = i;
        }
        if (!next) throw DomainError("generators admit no triangular division order");
        const std::size_t i = *next;
        done[i] = true;
        const MPoly& F = ideal.gens[i];
        const std::size_t T = ideal.tags[i];
        const unsigned k = static_cast<unsigned>(F.degree_in(T));
        const Rational unit = F.coefficient_in(T, k).terms().begin()->second;
        MPoly& r = out.remainder;
        while (r.degree_in(T) >= static_cast<long>(k)) {
            const unsigned m = static_cast<unsigned>(r.degree_in(T));
            MPoly::Exponents e(r.nvars(), 0);
            e[T] = m - k;
            MPoly mono(r.vars());
            mono.add_term(e, 1 / unit);
            MPoly mult = r.coefficient_in(T, m) * mono;
            out.quotients[i] += mult;
            r -= mult * F;
        }
    }
    out.member = out.remainder.is_zero();
    return out;
}

namespace {

// [U:V:S] on the projective closure of E.
std::optional<ECPoint> from_uvs(const Integer& U, const Integer& V, const Integer& S)
{
    if (U == 0 && V == 0 && S == 0) return std::nullopt;
    ECPoint P;
    if (S == 0) {
        ensure(U == 0, "point [U:V:0] with U != 0 is not on E");
        P = ECPoint::infinity();
    } else {
        P = ECPoint(make_rational(U, S), make_rational(V, S));
    }
    ensure(curve_E().contains(P), "chart image is not on E");
    return P;
}

} // namespace

ECPoint mu(const ProjPoint& p)
{
    if (p.size() != 4 || !on_curve(p, preimage_ideal(3, 0))) throw DomainError(p.to_string() + " is not on X(3,0)");
    const Integer &W = p[0], &Z1 = p[1], &Z2 = p[2], &Z3 = p[3];
    auto first = from_uvs(Z2, Z3, Z1);
    auto second = from_uvs((W + Z1) * Z3, Z1 * Z2 + Z1 * W + W * W, Z2 * Z3);
    if (first && second) ensure(*first == *second, "charts of mu disagree at " + p.to_string());
    if (first) return *first;
    if (second) return *second;
    throw InternalError("no chart of mu applies at " + p.to_string());
}

ProjPoint mu_inv(const ECPoint& P)
{
    const ECurve& E = curve_E();
    if (!E.contains(P)) throw DomainError("point " + P.to_string() + " is not on E");
    Rational U = 0, V = 1, S = 0;
    if (!P.is_infinity()) {
        U = P.u();
        V = P.v();
        S = 1;
    }
    std::vector<Rational> first{U * U - S * S, S * S, U * S, V * S};
    std::vector<Rational> second{V * V - S * S, U * S, U * U, U * V};
    auto nonzero = [](const std::vector<Rational>& v) {
        return std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    };
    std::optional<ProjPoint> a, b;
    if (nonzero(first)) a = ProjPoint::from_rationals(first);
    if (nonzero(second)) b = ProjPoint::from_rationals(second);
    if (a && b) ensure(*a == *b, "charts of mu^-1 disagree at " + P.to_string());
    ProjPoint out = a ? *a : b ? *b : throw InternalError("no chart of mu^-1 applies at " + P.to_string());
    ensure(on_curve(out, preimage_ideal(3, 0)), "mu^-1 image is not on X(3,0)");
    return out;
}

ECPoint pi(const ProjPoint& p)
{
    if (p.size() != 5 || !on_curve(p, preimage_ideal(4, 0))) throw DomainError(p.to_string() + " is not on X(4,0)");
    return mu(ProjPoint({p[0], p[1], p[2], p[3]}));
}

std::vector<ProjPoint> lift_to_X4(const ProjPoint& p)
{
    if (p.size() != 4 || !on_curve(p, preimage_ideal(3, 0))) throw DomainError(p.to_string() + " is not on X(3,0)");
    Integer value = p[1] * p[1] + p[3] * p[0];
    std::vector<ProjPoint> out;
    if (value < 0) return out;
    auto root = nth_root_integer(value, 2);
    if (!root) return out;
    out.emplace_back(std::vector<Integer>{p[0], p[1], p[2], p[3], *root});
    if (*root != 0) out.emplace_back(std::vector<Integer>{p[0], p[1], p[2], p[3], -*root});
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<TablePoint>& known_points_X4()
{
    static const std::vector<TablePoint> table{
        {"P1", {0, 1, 1, 1, 1}, -1},     {"P2", {0, -1, 1, 1, 1}, 2},    {"P3", {0, 1, -1, 1, 1}, -2},
        {"P4", {0, -1, -1, 1, 1}, 1},    {"P5", {0, 1, 1, -1, 1}, 1},    {"P6", {0, -1, 1, -1, 1}, -2},
        {"P7", {0, 1, -1, -1, 1}, 2},    {"P8", {0, -1, -1, -1, 1}, -1}, {"P9", {1, 0, 0, 0, 0}, 0},
        {"P10", {1, -1, 0, -1, 0}, 3},
    };
    return table;
}

MPoly critical_orbit(int n)
{
    if (n < 0) throw DomainError("orbit length must be non-negative");
    MPoly c = MPoly::variable({"c"}, 0);
    MPoly z = MPoly::constant({"c"}, 0);
    for (int i = 0; i < n; ++i) z = z * z + c;
    return z;
}

namespace {

// Exact division in Q[t], coefficients low to high.
std::vector<Rational> divide_exact(std::vector<Rational> num, const std::vector<Rational>& den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw InternalError("division would not be exact");
    std::vector<Rational> q(num.size() - dn, Rational(0));
    for (std::size_t k = num.size(); k-- > dn;) {
        Rational t = num[k] / den[dn];
        q[k - dn] = t;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= t * den[j];
    }
    for (const auto& r : num) ensure(r == 0, "f^4(0) is not divisible by f^2(0)");
    return q;
}

} // namespace

MPoly ramification_poly()
{
    MPoly z4 = critical_orbit(4);
    MPoly z2 = critical_orbit(2);
    MPoly F = univariate("c", divide_exact(univariate_coeffs(z4), univariate_coeffs(z2)));
    ensure(z2 * F == z4, "f^4(0) != (c^2 + c) F(c)");
    return F;
}

SingularReport singular_check_mod_p(std::uint64_t p)
{
    if (p == 2 || !is_prime(Integer(std::to_string(p)))) throw DomainError("singular check needs an odd prime, got " + std::to_string(p));
    SingularReport out;
    out.p = p;
    out.inverted_in_base_ring = p == 23;

    MPoly orbit = critical_orbit(4);
    FpFactorization fac = factor_mod_p(orbit, p);
    for (const auto& f : fac.factors)
        if (f.factor.degree() == 1 && f.multiplicity >= 2)
            out.double_roots.push_back(symmetric_residue((p - f.factor.coeff(0)) % p, p));
    std::sort(out.double_roots.begin(), out.double_roots.end());

    // g(x, c) = f_c^4(x)
    const std::vector<std::string> vars{"x", "c"};
    MPoly x = MPoly::variable(vars, 0), c = MPoly::variable(vars, 1);
    MPoly g = x;
    for (int i = 0; i < 4; ++i) g = g * g + c;
    MPoly gxx = g.derivative(0).derivative(0);
    MPoly gxc = g.derivative(0).derivative(1);
    MPoly gcc = g.derivative(1).derivative(1);

    for (long long c0 : out.double_roots) {
        const std::uint64_t cm = static_cast<std::uint64_t>((c0 % static_cast<long long>(p) + static_cast<long long>(p)) % static_cast<long long>(p));
        std::vector<std::uint64_t> at{0, cm};
        ensure(g.eval_mod(at, p) == 0 && g.derivative(0).eval_mod(at, p) == 0 && g.derivative(1).eval_mod(at, p) == 0,
               "double root does not give a singular point");
        std::uint64_t a = gxx.eval_mod(at, p), b = gxc.eval_mod(at, p), d = gcc.eval_mod(at, p);
        std::uint64_t det = (mod_mul(a, d, p) + p - mod_mul(b, b, p)) % p;

        std::vector<std::uint64_t> cpt{cm};
        auto z2 = critical_orbit(2).eval_mod(cpt, p);
        auto z3 = critical_orbit(3).eval_mod(cpt, p);
        std::vector<long long> point{1, symmetric_residue(z3, p), symmetric_residue(z2, p), symmetric_residue(cm, p), 0};
        // W = 1, Z4 = x = 0 must satisfy the ideal mod p
        std::vector<std::uint64_t> vals;
        for (std::size_t i = 1; i < point.size(); ++i)
            vals.push_back(static_cast<std::uint64_t>((point[i] % static_cast<long long>(p) + static_cast<long long>(p)) % static_cast<long long>(p)));
        vals.push_back(1);
        for (const auto& gen : preimage_ideal(4, 0).gens) ensure(gen.eval_mod(vals, p) == 0, "singular point is off X(4,0) mod p");

        out.points.push_back({c0, det, det != 0, point});
    }
    return out;
}

long riemann_hurwitz(long genus_base, long degree, long simple_ram_count)
{
    if (degree < 1 || genus_base < 0 || simple_ram_count < 0) throw DomainError("Riemann-Hurwitz inputs out of range");
    long twice = degree * (2 * genus_base - 2) + simple_ram_count + 2;
    if (twice % 2 != 0) throw DomainError("Riemann-Hurwitz data gives a non-integral genus");
    if (twice < 0) throw DomainError("Riemann-Hurwitz data gives a negative genus");
    return twice / 2;
}

} // namespace plab
