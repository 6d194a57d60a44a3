#include "plab/errors.hpp"
#include "plab/exact.hpp"

#include <doctest.h>

#include <random>

using namespace plab;

namespace {

// repeated division, no GMP helpers
long naive_valuation(long n, long p)
{
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool naive_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("parse and print rationals")
{
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("10/-5"), DomainError);
    CHECK(to_string(Rational(-477)) == "-477");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_integer("3/2"), DomainError);
    CHECK(make_rational(6, -4) == Rational(-3, 2));
}

TEST_CASE("powers and heights")
{
    CHECK(pow(Integer(3), 4UL) == 81);
    CHECK(pow(Rational(-2, 3), 3UL) == Rational(-8, 27));
    CHECK(pow(Rational(2, 3), -2L) == Rational(9, 4));
    CHECK(naive_height(Rational(-7, 3)) == 7);
    CHECK(naive_height(Rational(2, 9)) == 9);
    CHECK(naive_height(Rational(0)) == 1);
}

TEST_CASE("primality matches trial division")
{
    for (long n = -5; n < 3000; ++n) CHECK(is_prime(Integer(n)) == naive_prime(n));
    CHECK(is_prime(Integer(2551)));
    CHECK_FALSE(is_prime(Integer(58673)));
}

TEST_CASE("p-adic valuation against repeated division")
{
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_int_distribution<long> dist(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        long n = dist(rng);
        for (long p : {2L, 3L, 5L, 23L}) {
            CHECK(padic_valuation(Integer(n), Integer(p)) == naive_valuation(n, p));
            CHECK(padic_valuation(Integer(-n), Integer(p)) == naive_valuation(n, p));
        }
    }
    CHECK(padic_valuation(Rational(4, 27), Integer(3)) == -3);
    CHECK(padic_valuation(Rational(4, 27), Integer(2)) == 2);
    CHECK_THROWS_AS(padic_valuation(Integer(0), Integer(3)), UndefinedInput);
}

TEST_CASE("exact roots")
{
    CHECK(nth_root_integer(Integer(81), 4) == Integer(3));
    CHECK_FALSE(nth_root_integer(Integer(80), 4).has_value());
    CHECK(nth_root_integer(Integer(-27), 3) == Integer(-3));
    CHECK_FALSE(nth_root_integer(Integer(-16), 4).has_value());
    CHECK(nth_root_rational(Rational(16, 81), 4) == Rational(2, 3));
    CHECK(nth_root_rational(Rational(-8, 125), 3) == Rational(-2, 5));
    CHECK_FALSE(nth_root_rational(Rational(2, 9), 2).has_value());

    // property: (r^k)^(1/k) = |r| for even k, r for odd k
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 300);
    for (int i = 0; i < 300; ++i) {
        Rational r = make_rational(num(rng), den(rng));
        for (unsigned long k = 2; k <= 5; ++k) {
            auto back = nth_root_rational(pow(r, k), k);
            REQUIRE(back.has_value());
            CHECK(*back == (k % 2 == 0 ? Rational(abs(r)) : r));
        }
    }
}

TEST_CASE("factorization and divisors")
{
    auto f = factor_small(Integer(-58673), 1000);
    CHECK(f.sign == -1);
    CHECK(f.factors.at(Integer(23)) == 1);
    CHECK(f.factors.count(Integer(2551)) == 0);
    CHECK(f.cofactor == 2551);
    CHECK(f.reconstruct() == -58673);

    CHECK(prime_divisors(Integer(360)) == std::vector<Integer>{2, 3, 5});
    CHECK(divisors(Integer(-12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});

    // cofactor above the trial bound: a prime, a prime square
    Integer big = Integer("1000000007");
    CHECK(prime_divisors(big * 6, 100) == std::vector<Integer>{2, 3, big});
    CHECK(prime_divisors(big * big, 100) == std::vector<Integer>{big});
    Integer q = Integer("998244353");
    CHECK_THROWS_AS(prime_divisors(big * q, 100), UnsupportedInput);

    std::mt19937_64 rng(0x5eed0003);
    std::uniform_int_distribution<long> dist(1, 20'000);
    for (int i = 0; i < 100; ++i) {
        long n = dist(rng);
        auto ds = divisors(Integer(n));
        std::vector<Integer> naive;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) naive.push_back(d);
        CHECK(ds == naive);
    }
}

TEST_CASE("lcm of denominators")
{
    CHECK(lcm_of_denominators({Rational(1, 4), Rational(5, 6), Rational(3)}) == 12);
    CHECK(lcm_of_denominators({}) == 1);
}

TEST_CASE("edge cases")
{
    CHECK(parse_rational("+3/6") == Rational(1, 2));
    CHECK(parse_integer("+12") == 12);
    CHECK(parse_integer("-0") == 0);
    CHECK_THROWS_AS(parse_rational("-"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/+2"), DomainError);
    CHECK_THROWS_AS(parse_integer("1x"), DomainError);
    CHECK(pow(Rational(5), 0L) == 1);
    CHECK_THROWS_AS(pow(Rational(0), -1L), DomainError);
    CHECK_THROWS_AS(padic_valuation(Integer(12), Integer(4)), DomainError);
    CHECK_THROWS_AS(padic_valuation(Rational(0), Integer(3)), UndefinedInput);
    CHECK_THROWS_AS(nth_root_integer(Integer(4), 0), DomainError);
    CHECK_THROWS_AS(nth_root_rational(Rational(4), 0), DomainError);
    CHECK(nth_root_rational(Rational(0), 3) == Rational(0));
    CHECK_THROWS_AS(factor_small(Integer(0)), DomainError);
    CHECK_THROWS_AS(divisors(Integer(0)), DomainError);
    CHECK(factor_small(Integer(1)).factors.empty());
    CHECK(factor_small(Integer(-1)).sign == -1);
    // bound below 2 leaves everything in the cofactor
    CHECK(factor_small(Integer(12), 1).cofactor == 12);
    CHECK(prime_divisors(Integer(7 * 7 * 7 * 2), 3) == std::vector<Integer>{2, 7});
    CHECK_THROWS_AS(prime_divisors(Integer(11 * 11 * 13), 3), UnsupportedInput);
    Integer big("1000000007");
    CHECK(prime_divisors(big * big * big * 2, 100) == std::vector<Integer>{2, big});
    CHECK_THROWS_AS(parse_integer(""), DomainError);
    CHECK_THROWS_AS(parse_rational("x/2"), DomainError);
    CHECK(prime_divisors(Integer(5), 3) == std::vector<Integer>{5});
    CHECK(divisors(big * 2, 100) == std::vector<Integer>{1, 2, big, big * 2});
}
