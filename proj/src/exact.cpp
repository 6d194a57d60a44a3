#include "plab/exact.hpp"

#include "plab/errors.hpp"

#include <algorithm>
#include <cctype>

namespace plab {

namespace {

bool is_decimal(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer from_decimal(std::string_view s)
{
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_decimal(text, true)) throw DomainError("malformed rational: " + std::string(text));
        return Rational(from_decimal(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_decimal(num, true) || !is_decimal(den, false))
        throw DomainError("malformed rational: " + std::string(text));
    return make_rational(from_decimal(num), from_decimal(den));
}

Integer parse_integer(std::string_view text)
{
    if (!is_decimal(text, true)) throw DomainError("malformed integer: " + std::string(text));
    return from_decimal(text);
}

std::string to_string(const Integer& n)
{
    return n.get_str();
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer pow(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow(const Rational& base, unsigned long exp)
{
    return make_rational(pow(base.get_num(), exp), pow(base.get_den(), exp));
}

Rational pow(const Rational& base, long exp)
{
    if (exp >= 0) return pow(base, static_cast<unsigned long>(exp));
    if (base == 0) throw DomainError("negative power of zero");
    return 1 / pow(base, static_cast<unsigned long>(-exp));
}

Integer naive_height(const Rational& q)
{
    Integer n = abs(q.get_num());
    return n > q.get_den() ? n : Integer(q.get_den());
}

bool is_prime(const Integer& p)
{
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

long padic_valuation(const Integer& n, const Integer& p)
{
    if (n == 0) throw UndefinedInput("valuation of zero");
    if (!is_prime(p)) throw DomainError("valuation at non-prime " + p.get_str());
    Integer m = n;
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

long padic_valuation(const Rational& q, const Integer& p)
{
    if (q == 0) throw UndefinedInput("valuation of zero");
    return padic_valuation(q.get_num(), p) - padic_valuation(Integer(q.get_den()), p);
}

std::optional<Integer> nth_root_integer(const Integer& n, unsigned long k)
{
    if (k == 0) throw DomainError("zeroth root");
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

std::optional<Rational> nth_root_rational(const Rational& q, unsigned long n)
{
    if (n == 0) throw DomainError("zeroth root");
    auto num = nth_root_integer(q.get_num(), n);
    if (!num) return std::nullopt;
    auto den = nth_root_integer(Integer(q.get_den()), n);
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

Integer SmallFactorization::reconstruct() const
{
    Integer r = sign;
    for (const auto& [p, e] : factors) r *= pow(p, e);
    return r * cofactor;
}

SmallFactorization factor_small(const Integer& n, unsigned long bound)
{
    if (n == 0) throw DomainError("cannot factor zero");
    SmallFactorization out;
    out.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);
    // Trial divisors only need to reach floor(sqrt(m)); kept as a machine word.
    unsigned long root_limit = 0;
    auto refresh_limit = [&] {
        Integer r = sqrt(m);
        root_limit = r.fits_ulong_p() ? r.get_ui() : bound;
    };
    auto strip = [&](unsigned long d) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++e;
        }
        if (e > 0) {
            out.factors[Integer(d)] = e;
            refresh_limit();
        }
    };
    refresh_limit();
    bool exhausted = false;
    if (bound >= 2) strip(2);
    for (unsigned long d = 3; d <= bound; d += 2) {
        if (d > root_limit) {
            exhausted = true;
            break;
        }
        strip(d);
    }
    // Below d^2 every remaining cofactor is prime.
    if (exhausted && m > 1 && m <= bound) {
        out.factors[m] = 1;
        m = 1;
    }
    out.cofactor = m;
    return out;
}

namespace {

// The cofactor left by trial division as a prime power. Below (bound+1)^2 it is
// prime outright; above that only a probable prime or a power of one is
// accepted.
std::pair<Integer, unsigned> cofactor_prime_power(const Integer& n, const Integer& cofactor, unsigned long bound)
{
    Integer limit = Integer(bound) + 1;
    if (cofactor < limit * limit || is_prime(cofactor)) return {cofactor, 1};
    for (unsigned long k = mpz_sizeinbase(cofactor.get_mpz_t(), 2); k >= 2; --k) {
        auto r = nth_root_integer(cofactor, k);
        if (r && is_prime(*r)) return {*r, static_cast<unsigned>(k)};
    }
    throw UnsupportedInput("cannot factor " + n.get_str() + " by trial division up to " + std::to_string(bound));
}

} // namespace

std::vector<Integer> prime_divisors(const Integer& n, unsigned long bound)
{
    auto f = factor_small(n, bound);
    std::vector<Integer> primes;
    for (const auto& [p, e] : f.factors) primes.push_back(p);
    if (f.cofactor > 1) primes.push_back(cofactor_prime_power(n, f.cofactor, bound).first);
    return primes;
}

std::vector<Integer> divisors(const Integer& n, unsigned long bound)
{
    auto f = factor_small(n, bound);
    std::vector<std::pair<Integer, unsigned>> pf(f.factors.begin(), f.factors.end());
    if (f.cofactor > 1) pf.push_back(cofactor_prime_power(n, f.cofactor, bound));
    std::vector<Integer> out{1};
    for (const auto& [p, e] : pf) {
        std::size_t existing = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer lcm_of_denominators(const std::vector<Rational>& values)
{
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

} // namespace plab
