#include "plab/dynamics.hpp"

#include "plab/errors.hpp"
#include "plab/parallel.hpp"

#include <algorithm>
#include <set>

namespace plab {

std::vector<Rational> preimage_step(int d, const Rational& c, const Rational& y)
{
    if (d < 2) throw DomainError("degree must be at least 2");
    auto r = nth_root_rational(y - c, static_cast<unsigned long>(d));
    if (!r) return {};
    if (d % 2 != 0 || *r == 0) return {*r};
    return {-*r, *r};
}

PreimageTree iterated_preimages(int d, const Rational& c, const Rational& a, int depth_limit)
{
    if (depth_limit < 1) throw DomainError("depth limit must be at least 1");
    PreimageTree tree{d, c, a, {}, {}, false, false, {}};
    std::set<Rational> visited{a};
    std::set<Rational> all;
    std::vector<Rational> frontier{a};
    for (int level = 1; level <= depth_limit && !frontier.empty(); ++level) {
        std::set<Rational> found;
        for (const auto& y : frontier)
            for (const auto& x : preimage_step(d, c, y)) found.insert(x);
        std::vector<PreimageNode> nodes;
        std::vector<Rational> next;
        for (const auto& x : found) {
            bool seen = visited.count(x) > 0;
            nodes.push_back({x, seen});
            all.insert(x);
            if (seen) {
                tree.cycle_detected = true;
            } else {
                next.push_back(x);
            }
        }
        for (const auto& x : next) visited.insert(x);
        if (nodes.empty()) break;
        tree.levels.push_back(std::move(nodes));
        frontier = std::move(next);
    }
    if (static_cast<int>(tree.levels.size()) == depth_limit) {
        for (const auto& y : frontier)
            if (!preimage_step(d, c, y).empty()) tree.truncated_at.push_back(y);
        tree.truncated = !tree.truncated_at.empty();
    }
    tree.values.assign(all.begin(), all.end());
    return tree;
}

long corollary_count(int d, const Rational& c)
{
    if (d < 3) throw DomainError("the count formula needs d >= 3");
    auto r = nth_root_rational(-c, static_cast<unsigned long>(d));
    if (d % 2 != 0) return r ? 1 : 0;
    if (c == -1) return 3;
    if (c == 0) return 1;
    return r ? 2 : 0;
}

long kappa(int d)
{
    if (d < 2) throw DomainError("kappa needs d >= 2");
    if (d == 2) return 6;
    return d % 2 == 0 ? 3 : 1;
}

bool DMSolution::trivial() const
{
    Integer p = x * y * z;
    return p == 0 || p == 1 || p == -1;
}

DMSolution dm_solution(int d, const DMTriple& t)
{
    const auto ud = static_cast<unsigned long>(d);
    if (d % 2 == 0) return {d - 1, t.C, pow(t.B, ud), pow(t.A, ud / 2)};
    return {d, t.A, Integer(-pow(t.B, ud - 1)), pow(t.C, (ud - 1) / 2)};
}

DMTriple dm_reduction(int d, const Rational& z1, const Rational& z2)
{
    if (d < 2) throw DomainError("the reduction needs d >= 2");
    if (z1 == 0) throw DomainError("z1 must be nonzero");
    if (z2 == 0) throw DomainError("z2 = 0 is not a witness");
    const auto ud = static_cast<unsigned long>(d);
    const Rational c = -pow(z1, ud);
    const Rational w = pow(z2, ud) + c;
    if (w == 0 || pow(w, ud) + c != 0) throw DomainError("z2 is not a second preimage of 0");
    const Rational s = z2 / w;
    const Rational t = 1 / w;
    ensure(pow(s, ud) == pow(t, ud - 1) + 1, "(z2/z1)^d != (1/z1)^(d-1) + 1");
    // denominators: v(den s) = (d-1)k, v(den t) = dk
    auto B = nth_root_integer(t.get_den(), ud);
    ensure(B && pow(*B, ud - 1) == s.get_den(), "denominators do not have the shape B^(d-1), B^d");
    DMTriple out{s.get_num(), *B, t.get_num()};
    ensure(pow(out.A, ud) == pow(out.C, ud - 1) + pow(out.B, ud * (ud - 1)), "A^d != C^(d-1) + B^(d(d-1))");
    ensure(gcd(out.A, out.B) == 1 && gcd(out.B, out.C) == 1, "Darmon-Merel triple is not coprime");
    return out;
}

DMSearchResult dm_search(int n, long bound)
{
    if (n < 2) throw DomainError("exponent must be at least 2");
    if (bound < 0) throw DomainError("bound must be non-negative");
    const auto un = static_cast<unsigned long>(n);
    std::vector<Integer> powers;
    for (long x = -bound; x <= bound; ++x) powers.push_back(pow(Integer(x), un));
    const std::size_t width = powers.size();
    std::vector<std::vector<DMSolution>> rows(width);
    parallel_for(width, [&](std::size_t i) {
        const Integer x(static_cast<long>(i) - bound);
        for (std::size_t j = 0; j < width; ++j) {
            Integer v = powers[i] + powers[j];
            if (v < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) continue;
            const Integer y(static_cast<long>(j) - bound);
            Integer z = sqrt(v);
            if (gcd(gcd(x, y), z) != 1) continue;
            if (z != 0) rows[i].push_back({n, x, y, Integer(-z)});
            rows[i].push_back({n, x, y, z});
        }
    });
    DMSearchResult out{n, bound, {}, {}};
    for (auto& row : rows)
        for (auto& s : row) (s.trivial() ? out.trivial : out.nontrivial).push_back(std::move(s));
    return out;
}

RouteVerdict second_preimage_route_d34(int d, const Rational& c)
{
    if (d != 3 && d != 4) throw DomainError("the torsion route covers d = 3 and d = 4 only");
    if (c == 0) throw DomainError("c must be nonzero");
    if (d == 4 && c == -1) throw DomainError("c = -1 is excluded for d = 4");
    RouteVerdict out{d, c, Rational(d == 3 ? -1 : 1), false, false, {}};
    out.first_preimage_exists = nth_root_rational(-c, static_cast<unsigned long>(d)).has_value();
    ECurve curve(0, out.curve_b);
    for (const auto& tp : ec_torsion(curve)) {
        RouteCandidate cand{tp, ""};
        const ECPoint& P = tp.point;
        std::optional<Rational> z1;
        if (P.is_infinity()) {
            cand.excluded_because = "point at infinity";
        } else if (d == 3) {
            // (x, y) = (z2/z1, 1/z1)
            if (P.v() == 0)
                cand.excluded_because = "1/z1 = 0 is impossible";
            else if (P.u() == 0)
                cand.excluded_because = "z2 = 0 is not a second preimage";
            else
                z1 = 1 / P.v();
        } else {
            // (x, y) = (1/z1, (z2/z1)^2)
            if (P.u() == 0)
                cand.excluded_because = "1/z1 = 0 is impossible";
            else if (P.v() == 0)
                cand.excluded_because = "z2 = 0 forces c = -1";
            else if (!nth_root_rational(P.v(), 2))
                cand.excluded_because = to_string(P.v()) + " is not the square of a rational";
            else
                z1 = 1 / P.u();
        }
        if (z1) {
            Rational c_point = -pow(*z1, static_cast<unsigned long>(d));
            if (c_point == c)
                out.second_preimage_exists = true;
            else
                cand.excluded_because = "belongs to c = " + to_string(c_point);
        }
        out.candidates.push_back(std::move(cand));
    }
    return out;
}

} // namespace plab
