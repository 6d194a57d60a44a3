#include "plab/cubic_field.hpp"

#include "plab/errors.hpp"
#include "plab/fp_poly.hpp"

#include <cmath>
#include <sstream>

namespace plab {

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;
using Vec3 = std::array<Rational, 3>;

// Solves m * x = rhs by Gaussian elimination; m must be invertible.
Vec3 solve3(Mat3 m, Vec3 rhs)
{
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pivot = col;
        while (pivot < 3 && m[pivot][col] == 0) ++pivot;
        if (pivot == 3) throw DomainError("singular multiplication matrix");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < 3; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    Vec3 x;
    for (std::size_t i = 0; i < 3; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

std::string monomial_name(std::size_t i)
{
    if (i == 0) return "";
    if (i == 1) return "theta";
    return "theta^2";
}

} // namespace

bool KElement::is_integral() const
{
    return c_[0].get_den() == 1 && c_[1].get_den() == 1 && c_[2].get_den() == 1;
}

KElement KElement::operator+(const KElement& o) const
{
    return KElement(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]);
}

KElement KElement::operator-(const KElement& o) const
{
    return KElement(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]);
}

KElement KElement::operator*(const KElement& o) const
{
    const auto& a = c_;
    const auto& b = o.c_;
    Rational d0 = a[0] * b[0];
    Rational d1 = a[0] * b[1] + a[1] * b[0];
    Rational d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
    Rational d3 = a[1] * b[2] + a[2] * b[1];
    Rational d4 = a[2] * b[2];
    // theta^3 = theta - 1, theta^4 = theta^2 - theta
    return KElement(d0 - d3, d1 + d3 - d4, d2 + d4);
}

KElement KElement::operator/(const KElement& o) const
{
    return *this * k_inv(o);
}

std::string KElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << plab::to_string(mag);
        } else {
            if (mag != 1) os << plab::to_string(mag) << '*';
            os << monomial_name(i);
        }
    }
    return first ? "0" : os.str();
}

KElement k_add(const KElement& a, const KElement& b)
{
    return a + b;
}

KElement k_mul(const KElement& a, const KElement& b)
{
    return a * b;
}

Mat3 multiplication_matrix(const KElement& a)
{
    Mat3 m;
    KElement basis = 1;
    for (std::size_t j = 0; j < 3; ++j) {
        KElement col = a * basis;
        for (std::size_t i = 0; i < 3; ++i) m[i][j] = col[i];
        basis *= KElement::theta();
    }
    return m;
}

KElement k_inv(const KElement& a)
{
    if (a.is_zero()) throw DomainError("inverse of zero in K");
    Vec3 x = solve3(multiplication_matrix(a), Vec3{Rational(1), Rational(0), Rational(0)});
    return KElement(x[0], x[1], x[2]);
}

KElement k_pow(const KElement& a, long e)
{
    KElement base = e < 0 ? k_inv(a) : a;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    KElement r = 1;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Rational norm(const KElement& a)
{
    Mat3 m = multiplication_matrix(a);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational trace(const KElement& a)
{
    Mat3 m = multiplication_matrix(a);
    return m[0][0] + m[1][1] + m[2][2];
}

long double theta_real()
{
    static const long double root = [] {
        long double t = -1.3L;
        for (int i = 0; i < 60; ++i) t -= (t * t * t - t + 1) / (3 * t * t - 1);
        return t;
    }();
    return root;
}

long double real_embedding(const KElement& a)
{
    long double t = theta_real();
    return a[0].get_d() + a[1].get_d() * t + a[2].get_d() * t * t;
}

KElement UnitClass::element() const
{
    KElement e = k_pow(KElement::theta(), theta_exp);
    return sign_bit != 0 ? -e : e;
}

UnitClass UnitClass::reduced(long modulus) const
{
    long k = theta_exp % modulus;
    if (k < 0) k += modulus;
    return UnitClass{sign_bit, k};
}

std::string UnitClass::to_string() const
{
    std::string s = sign_bit != 0 ? "-" : "";
    if (theta_exp == 0) return s + "1";
    s += "theta";
    if (theta_exp != 1) s += "^" + std::to_string(theta_exp);
    return s;
}

UnitClass unit_decompose(const KElement& u)
{
    if (!u.is_integral() || abs(norm(u)) != 1)
        throw DomainError("not a unit of Z[theta]: " + u.to_string());
    long double value = std::fabs(real_embedding(u));
    long estimate = std::lround(std::log(value) / std::log(std::fabs(theta_real())));
    for (long delta : {0L, -1L, 1L, -2L, 2L}) {
        long k = estimate + delta;
        KElement t = k_pow(KElement::theta(), k);
        if (u == t) return UnitClass{0, k};
        if (u == -t) return UnitClass{1, k};
    }
    throw InternalError("unit " + u.to_string() + " is not +-theta^k near k = " + std::to_string(estimate));
}

const PrimeIdealRef& prime_p1()
{
    static const PrimeIdealRef p{23, KElement(-4, 0, 3), 1, 1};
    return p;
}

const PrimeIdealRef& prime_p2()
{
    static const PrimeIdealRef p{23, KElement(-1, 0, 3), 1, 2};
    return p;
}

const PrimeIdealRef& prime_two()
{
    static const PrimeIdealRef p{2, KElement(2), 3, 1};
    return p;
}

namespace {

using IVec = std::array<Integer, 3>;

Rational dot(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<Rational, 3> to_q(const IVec& v)
{
    return {Rational(v[0]), Rational(v[1]), Rational(v[2])};
}

// LLL (delta = 3/4) on three integer vectors, exact Gram-Schmidt.
void lll_reduce(std::array<IVec, 3>& b)
{
    auto gram_schmidt = [&](std::array<std::array<Rational, 3>, 3>& star,
                            std::array<std::array<Rational, 3>, 3>& mu, std::array<Rational, 3>& len) {
        for (std::size_t i = 0; i < 3; ++i) {
            star[i] = to_q(b[i]);
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(to_q(b[i]), star[j]) / len[j];
                for (std::size_t c = 0; c < 3; ++c) star[i][c] -= mu[i][j] * star[j][c];
            }
            len[i] = dot(star[i], star[i]);
        }
    };
    std::array<std::array<Rational, 3>, 3> star, mu;
    std::array<Rational, 3> len;
    std::size_t k = 1;
    int guard = 0;
    while (k < 3) {
        ensure(++guard < 10000, "lattice reduction did not terminate");
        gram_schmidt(star, mu, len);
        for (std::size_t j = k; j-- > 0;) {
            gram_schmidt(star, mu, len);
            Rational m = mu[k][j];
            Integer q;
            // nearest integer
            Rational shifted = m + Rational(1, 2);
            mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
            if (q != 0)
                for (std::size_t c = 0; c < 3; ++c) b[k][c] -= q * b[j][c];
        }
        gram_schmidt(star, mu, len);
        if (len[k] >= (Rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * len[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
}

// Generator of the degree-one prime (p, theta - r).
KElement degree_one_generator(const Integer& p, const Integer& r)
{
    Integer r2 = (r * r) % p;
    std::array<IVec, 3> basis{IVec{p, 0, 0}, IVec{-r, 1, 0}, IVec{-r2, 0, 1}};
    lll_reduce(basis);
    constexpr long kBox = 6;
    for (long radius = 0; radius <= kBox; ++radius) {
        for (long a = -radius; a <= radius; ++a)
            for (long b = -radius; b <= radius; ++b)
                for (long c = -radius; c <= radius; ++c) {
                    if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != radius) continue;
                    IVec v;
                    for (std::size_t i = 0; i < 3; ++i) v[i] = a * basis[0][i] + b * basis[1][i] + c * basis[2][i];
                    KElement g{Rational(v[0]), Rational(v[1]), Rational(v[2])};
                    if (abs(norm(g)) == p) return g;
                }
    }
    throw UnsupportedInput("no generator of norm " + p.get_str() + " found near the reduced basis");
}

// Number of times g divides a in Z[theta]; a integral and nonzero.
long divide_out(KElement& a, const KElement& g)
{
    KElement inv = k_inv(g);
    long v = 0;
    for (;;) {
        KElement q = a * inv;
        if (!q.is_integral()) return v;
        a = q;
        ++v;
    }
}

} // namespace

std::vector<PrimeIdealRef> primes_above(const Integer& p)
{
    if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    if (p == 23) return {prime_p1(), prime_p2()};
    if (!p.fits_ulong_p()) throw UnsupportedInput("prime too large: " + p.get_str());
    auto pu = p.get_ui();
    FpPoly min_poly = FpPoly::from_integers(pu, {1, -1, 0, 1});
    auto rs = roots(min_poly);
    if (rs.empty()) return {PrimeIdealRef{p, KElement(Rational(p)), 3, 1}};
    std::vector<PrimeIdealRef> out;
    for (auto r : rs) out.push_back(PrimeIdealRef{p, degree_one_generator(p, Integer(std::to_string(r))), 1, 1});
    if (rs.size() == 1) {
        KElement other = KElement(Rational(p)) / out[0].generator;
        ensure(other.is_integral() && abs(norm(other)) == p * p, "cofactor of a degree-one prime is not prime");
        out.push_back(PrimeIdealRef{p, other, 2, 1});
    }
    ensure(rs.size() != 2, "two simple roots of the minimal polynomial mod an unramified prime");
    return out;
}

long valuation_at(const KElement& a, const PrimeIdealRef& P)
{
    if (a.is_zero()) throw UndefinedInput("valuation of zero");
    Integer m = lcm_of_denominators({a[0], a[1], a[2]});
    KElement numerator = a * KElement(Rational(m));
    KElement denominator = KElement(Rational(m));
    return divide_out(numerator, P.generator) - divide_out(denominator, P.generator);
}

ElementFactorization factor_integral(const KElement& a)
{
    if (a.is_zero()) throw UndefinedInput("factorization of zero");
    if (!a.is_integral()) throw DomainError("element is not integral: " + a.to_string());
    ElementFactorization out;
    KElement rest = a;
    Integer n = abs(norm(a).get_num());
    if (n != 1) {
        for (const auto& p : prime_divisors(n)) {
            for (const auto& P : primes_above(p)) {
                long v = divide_out(rest, P.generator);
                if (v > 0) out.primes.emplace_back(P, v);
            }
        }
    }
    out.unit = unit_decompose(rest);
    return out;
}

bool is_square(const KElement& a)
{
    if (a.is_zero()) throw DomainError("square test of zero");
    Integer m = lcm_of_denominators({a[0], a[1], a[2]});
    auto f = factor_integral(a * KElement(Rational(m * m)));
    for (const auto& [P, v] : f.primes)
        if (v % 2 != 0) return false;
    return f.unit.sign_bit == 0 && f.unit.theta_exp % 2 == 0;
}

FourthPowerFreeDecomp fourth_power_free(const KElement& a)
{
    auto f = factor_integral(a);
    FourthPowerFreeDecomp out;
    long k = f.unit.theta_exp;
    long k_floor = k >= 0 ? k / 4 : -((-k + 3) / 4);
    out.unit_part = UnitClass{f.unit.sign_bit, k - 4 * k_floor};
    out.delta = out.unit_part.element();
    out.s = k_pow(KElement::theta(), k_floor);
    for (const auto& [P, v] : f.primes) {
        out.s *= k_pow(P.generator, v / 4);
        if (v % 4 != 0) {
            out.delta *= k_pow(P.generator, v % 4);
            out.residual.emplace_back(P, v % 4);
        }
    }
    if (out.residual.empty()) out.delta_class = out.unit_part;
    ensure(out.delta * k_pow(out.s, 4) == a, "fourth-power-free reconstruction failed");
    return out;
}

} // namespace plab
