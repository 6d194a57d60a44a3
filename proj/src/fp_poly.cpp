#include "plab/fp_poly.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace plab {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0) throw DomainError("inverse of zero in F_p");
    return mod_pow(a, p - 2, p);
}

long long symmetric_residue(std::uint64_t x, std::uint64_t p)
{
    x %= p;
    if (x > p / 2) return -static_cast<long long>(p - x);
    return static_cast<long long>(x);
}

FpPoly::FpPoly(Coeff p) : p_(p)
{
    if (p < 2) throw DomainError("modulus must be at least 2");
}

FpPoly::FpPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs))
{
    if (p < 2) throw DomainError("modulus must be at least 2");
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::from_integers(Coeff p, const std::vector<Integer>& coeffs)
{
    std::vector<Coeff> c;
    c.reserve(coeffs.size());
    Integer mod(std::to_string(p));
    for (const auto& v : coeffs) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        c.push_back(static_cast<Coeff>(std::stoull(r.get_str())));
    }
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monomial(Coeff p, std::size_t degree, Coeff c)
{
    std::vector<Coeff> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const
{
    std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Coeff s = coeff(i) + o.coeff(i);
        r[i] = s >= p_ ? s - p_ : s;
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const
{
    std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Coeff a = coeff(i), b = o.coeff(i);
        r[i] = a >= b ? a - b : a + (p_ - b);
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const
{
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<Coeff> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            Coeff t = r[i + j] + mod_mul(c_[i], o.c_[j], p_);
            r[i + j] = t >= p_ ? t - p_ : t;
        }
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(Coeff k) const
{
    std::vector<Coeff> r(c_);
    for (auto& c : r) c = mod_mul(c, k % p_, p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::monic() const
{
    if (is_zero()) throw DomainError("monic of zero polynomial");
    return scaled(mod_inv(leading(), p_));
}

FpPoly FpPoly::derivative() const
{
    if (c_.size() <= 1) return FpPoly(p_);
    std::vector<Coeff> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mod_mul(c_[i], i % p_, p_);
    return FpPoly(p_, std::move(r));
}

FpPoly::Coeff FpPoly::eval(Coeff x) const
{
    Coeff r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = mod_mul(r, x % p_, p_) + *it;
        if (r >= p_) r -= p_;
    }
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const
{
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {FpPoly(p_), *this};
    std::vector<Coeff> rem(c_);
    std::vector<Coeff> quo(c_.size() - d.c_.size() + 1, 0);
    Coeff inv = mod_inv(d.leading(), p_);
    std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Coeff q = mod_mul(rem[k + dd], inv, p_);
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            Coeff t = mod_mul(q, d.c_[j], p_);
            Coeff& slot = rem[k + j];
            slot = slot >= t ? slot - t : slot + (p_ - t);
        }
    }
    return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

std::string FpPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        bool show_coeff = c_[k] != 1 || k == 0;
        if (show_coeff) os << c_[k];
        if (k > 0) {
            if (show_coeff) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

FpPoly powmod(const FpPoly& base, const Integer& exp, const FpPoly& m)
{
    if (exp < 0) throw DomainError("negative exponent");
    FpPoly result(m.modulus(), {1});
    result = result % m;
    FpPoly b = base % m;
    std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

namespace {

using Coeff = FpPoly::Coeff;

// p-th root of a polynomial whose derivative vanishes (only x^{kp} terms).
FpPoly pth_root(const FpPoly& f)
{
    Coeff p = f.modulus();
    std::vector<Coeff> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
    return FpPoly(p, std::move(r));
}

// Monic f -> (square-free factor, multiplicity).
std::vector<std::pair<FpPoly, unsigned>> squarefree(const FpPoly& f)
{
    Coeff p = f.modulus();
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        for (auto& [h, j] : squarefree(pth_root(f))) out.emplace_back(h, j * static_cast<unsigned>(p));
        return out;
    }
    FpPoly c = gcd(f, d);
    FpPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac.monic(), i);
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) {
        for (auto& [h, j] : squarefree(pth_root(c.monic())))
            out.emplace_back(h, j * static_cast<unsigned>(p));
    }
    return out;
}

// Square-free monic f -> products of all irreducible factors of degree d.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f)
{
    Coeff p = f.modulus();
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly x = FpPoly::monomial(p, 1);
    FpPoly h = x % f;
    Integer pz(std::to_string(p));
    for (unsigned d = 1; 2 * static_cast<long>(d) <= f.degree(); ++d) {
        h = powmod(h, pz, f);
        FpPoly g = gcd(h - x, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
    return out;
}

FpPoly random_poly(Coeff p, long max_degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Coeff> dist(0, p - 1);
    std::vector<Coeff> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& v : c) v = dist(rng);
    return FpPoly(p, std::move(c));
}

// f square-free, monic, all irreducible factors of degree d.
void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f.monic());
        return;
    }
    Coeff p = f.modulus();
    Integer q = pow(Integer(std::to_string(p)), d);
    for (;;) {
        FpPoly a = random_poly(p, f.degree() - 1, rng);
        if (a.degree() < 1) continue;
        FpPoly b(p);
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            FpPoly t = a % f;
            b = t;
            for (unsigned i = 1; i < d; ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            b = powmod(a, (q - 1) / 2, f) - FpPoly(p, {1});
        }
        FpPoly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

bool factor_less(const FpFactor& a, const FpFactor& b)
{
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
}

} // namespace

FpPoly FpFactorization::reconstruct() const
{
    FpPoly r(p, {unit});
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.factor;
    return r;
}

std::string FpFactorization::to_string(const std::string& var) const
{
    std::ostringstream os;
    bool first = true;
    if (unit != 1 || factors.empty()) {
        os << unit;
        first = false;
    }
    for (const auto& f : factors) {
        if (!first) os << ' ';
        first = false;
        os << '(' << f.factor.to_string(var) << ')';
        if (f.multiplicity > 1) os << '^' << f.multiplicity;
    }
    return os.str();
}

FpFactorization factor(const FpPoly& f)
{
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    if (!is_prime(Integer(std::to_string(f.modulus()))))
        throw DomainError("modulus " + std::to_string(f.modulus()) + " is not prime");
    FpFactorization out{f.modulus(), f.leading(), {}};
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(0x5eed2551ULL);
    for (const auto& [sf, mult] : squarefree(f.monic())) {
        for (const auto& [block, d] : distinct_degree(sf)) {
            std::vector<FpPoly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) out.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    // merge equal factors that arrived from different square-free layers
    std::vector<FpFactor> merged;
    for (auto& fac : out.factors) {
        if (!merged.empty() && merged.back().factor == fac.factor)
            merged.back().multiplicity += fac.multiplicity;
        else
            merged.push_back(std::move(fac));
    }
    out.factors = std::move(merged);
    return out;
}

std::vector<std::uint64_t> roots(const FpPoly& f)
{
    std::vector<std::uint64_t> out;
    if (f.degree() < 1) return out;
    for (const auto& fac : factor(f).factors) {
        if (fac.factor.degree() == 1) {
            // monic x + c0 -> root -c0
            Coeff c0 = fac.factor.coeff(0);
            out.push_back(c0 == 0 ? 0 : f.modulus() - c0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace plab
