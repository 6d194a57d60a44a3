#include "plab/mpoly.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace plab {

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c)
{
    MPoly out(std::move(vars));
    out.add_term(Exponents(out.nvars(), 0), c);
    return out;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::size_t index)
{
    MPoly out(std::move(vars));
    if (index >= out.nvars()) throw DomainError("variable index out of range");
    Exponents e(out.nvars(), 0);
    e[index] = 1;
    out.add_term(e, 1);
    return out;
}

std::size_t MPoly::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainError("unknown variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

long MPoly::total_degree() const
{
    long best = -1;
    for (const auto& [e, c] : terms_)
        best = std::max<long>(best, std::accumulate(e.begin(), e.end(), 0L));
    return best;
}

long MPoly::degree_in(std::size_t var) const
{
    long best = -1;
    for (const auto& [e, c] : terms_) best = std::max<long>(best, e.at(var));
    return best;
}

MPoly MPoly::coefficient_in(std::size_t var, unsigned k) const
{
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) != k) continue;
        Exponents f = e;
        f[var] = 0;
        out.add_term(f, c);
    }
    return out;
}

void MPoly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != vars_.size()) throw DomainError("exponent vector has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void MPoly::require_same_ring(const MPoly& o) const
{
    if (vars_ != o.vars_) throw DomainError("polynomials live in different rings");
}

MPoly MPoly::operator-() const
{
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MPoly MPoly::operator+(const MPoly& o) const
{
    require_same_ring(o);
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const
{
    return *this + (-o);
}

MPoly MPoly::operator*(const MPoly& o) const
{
    require_same_ring(o);
    MPoly out(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MPoly MPoly::operator*(const Rational& k) const
{
    MPoly out(vars_);
    if (k == 0) return out;
    out.terms_ = terms_;
    for (auto& [e, c] : out.terms_) c *= k;
    return out;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result = constant(vars_, 1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

MPoly MPoly::derivative(std::size_t var) const
{
    if (var >= nvars()) throw DomainError("variable index out of range");
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        --f[var];
        out.add_term(f, c * e[var]);
    }
    return out;
}

Rational MPoly::eval(const std::vector<Rational>& point) const
{
    if (point.size() != nvars()) throw DomainError("evaluation point has the wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= plab::pow(point[i], static_cast<unsigned long>(e[i]));
        sum += t;
    }
    return sum;
}

namespace {

std::uint64_t reduce_mod(const Integer& n, std::uint64_t p)
{
    Integer r = n % Integer(std::to_string(p));
    if (r < 0) r += Integer(std::to_string(p));
    return std::stoull(r.get_str());
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t p)
{
    std::uint64_t den = reduce_mod(q.get_den(), p);
    if (den == 0) throw DomainError("denominator " + q.get_den().get_str() + " is not invertible mod " + std::to_string(p));
    return mod_mul(reduce_mod(q.get_num(), p), mod_inv(den, p), p);
}

} // namespace

std::uint64_t MPoly::eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const
{
    if (point.size() != nvars()) throw DomainError("evaluation point has the wrong length");
    std::uint64_t sum = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = rational_mod(c, p);
        for (std::size_t i = 0; i < e.size(); ++i) t = mod_mul(t, mod_pow(point[i] % p, e[i], p), p);
        sum = (sum + t) % p;
    }
    return sum;
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto deg = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        long da = deg(a->first), db = deg(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool has_var = deg(e) > 0;
        bool wrote = false;
        if (mag != 1 || !has_var) {
            os << plab::to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << vars_[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::vector<Rational> univariate_coeffs(const MPoly& f)
{
    if (f.nvars() != 1) throw DomainError("expected a univariate polynomial");
    std::vector<Rational> out(static_cast<std::size_t>(std::max<long>(f.degree_in(0), 0)) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) out[e[0]] = c;
    return out;
}

MPoly univariate(const std::string& var, const std::vector<Rational>& coeffs)
{
    MPoly out({var});
    for (std::size_t k = 0; k < coeffs.size(); ++k) out.add_term({static_cast<unsigned>(k)}, coeffs[k]);
    return out;
}

namespace {

std::vector<Rational> trimmed(std::vector<Rational> f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational factor = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= factor * m[col][k];
        }
    }
    return det;
}

} // namespace

Rational resultant(const std::vector<Rational>& f_in, const std::vector<Rational>& g_in)
{
    auto f = trimmed(f_in);
    auto g = trimmed(g_in);
    if (f.empty() || g.empty()) return 0;
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    if (m == 0 && n == 0) return 1;
    const std::size_t size = m + n;
    std::vector<std::vector<Rational>> sylvester(size, std::vector<Rational>(size, Rational(0)));
    // rows hold coefficients high to low, shifted
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) sylvester[r][r + k] = f[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) sylvester[n + r][r + k] = g[n - k];
    return determinant(std::move(sylvester));
}

Rational poly_disc(const MPoly& f)
{
    auto c = trimmed(univariate_coeffs(f));
    if (c.size() < 2) throw DomainError("discriminant of a constant polynomial");
    const std::size_t n = c.size() - 1;
    std::vector<Rational> d(n);
    for (std::size_t k = 1; k <= n; ++k) d[k - 1] = c[k] * static_cast<unsigned long>(k);
    Rational r = resultant(c, d) / c.back();
    return (n * (n - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

FpFactorization factor_mod_p(const MPoly& f, std::uint64_t p)
{
    if (!is_prime(Integer(std::to_string(p)))) throw DomainError(std::to_string(p) + " is not prime");
    auto c = trimmed(univariate_coeffs(f));
    if (c.empty()) throw DomainError("cannot factor the zero polynomial");
    std::vector<FpPoly::Coeff> reduced;
    for (const auto& q : c) reduced.push_back(rational_mod(q, p));
    if (reduced.back() == 0) throw DomainError("p divides the leading coefficient");
    return factor(FpPoly(p, reduced));
}

} // namespace plab
