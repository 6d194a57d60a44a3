#include "plab/cubic_field.hpp"
#include "plab/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace plab;

namespace {

// product of (a0 + a1 r + a2 r^2) over the three complex roots of t^3 - t + 1
long double numeric_norm(const KElement& a)
{
    // roots by Durand-Kerner
    std::complex<long double> r[3] = {{0.4L, 0.9L}, {0.4L, -0.9L}, {-1.3L, 0.1L}};
    for (int it = 0; it < 200; ++it) {
        for (int i = 0; i < 3; ++i) {
            auto num = r[i] * r[i] * r[i] - r[i] + 1.0L;
            std::complex<long double> den = 1;
            for (int j = 0; j < 3; ++j)
                if (j != i) den *= r[i] - r[j];
            r[i] -= num / den;
        }
    }
    std::complex<long double> prod = 1;
    for (auto& x : r)
        prod *= static_cast<long double>(a[0].get_d()) + static_cast<long double>(a[1].get_d()) * x +
                static_cast<long double>(a[2].get_d()) * x * x;
    return prod.real();
}

// schoolbook product reduced by t^3 = t - 1
KElement reference_mul(const KElement& a, const KElement& b)
{
    Rational c[5];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i + j] += a[i] * b[j];
    for (int k = 4; k >= 3; --k) {
        c[k - 2] += c[k];
        c[k - 3] -= c[k];
        c[k] = 0;
    }
    return KElement(c[0], c[1], c[2]);
}

KElement random_integral(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    return KElement(d(rng), d(rng), d(rng));
}

} // namespace

TEST_CASE("theta relation and basic arithmetic")
{
    KElement t = KElement::theta();
    CHECK(t * t * t == t - KElement(1));
    CHECK(k_pow(t, -1) * t == KElement(1));
    CHECK(k_inv(t) == KElement(1, 0, -1)); // theta^-1 = 1 - theta^2
    CHECK(norm(t) == -1);
    CHECK(trace(t) == 0);
    CHECK(trace(t * t) == 2);
    CHECK_THROWS_AS(k_inv(KElement(0)), DomainError);
    CHECK(KElement(1, -2, 3).to_string() == "1 - 2*theta + 3*theta^2");
}

TEST_CASE("multiplication against reference reduction")
{
    std::mt19937_64 rng(0x5eed0201);
    for (int i = 0; i < 300; ++i) {
        KElement a = random_integral(rng, 50), b = random_integral(rng, 50);
        CHECK(a * b == reference_mul(a, b));
        CHECK(k_mul(a, b) == b * a);
        CHECK(k_add(a, b) == a + b);
        if (!a.is_zero()) CHECK((a * b) / a == b);
    }
}

TEST_CASE("norm is multiplicative and matches the complex embeddings")
{
    std::mt19937_64 rng(0x5eed0202);
    for (int i = 0; i < 200; ++i) {
        KElement a = random_integral(rng, 20), b = random_integral(rng, 20);
        CHECK(norm(a * b) == norm(a) * norm(b));
        CHECK(std::fabs(static_cast<double>(numeric_norm(a) - norm(a).get_d())) < 1e-6 * (1 + std::fabs(norm(a).get_d())));
    }
    CHECK(std::fabs(static_cast<double>(theta_real()) + 1.324717957244746) < 1e-12);
}

TEST_CASE("unit decomposition")
{
    for (int s = 0; s < 2; ++s)
        for (long e = -6; e <= 6; ++e) {
            UnitClass u{s, e};
            CHECK(unit_decompose(u.element()) == u);
        }
    CHECK(UnitClass{1, 1}.to_string() == "-theta");
    CHECK(UnitClass{1, 7}.reduced(4) == UnitClass{1, 3});
    CHECK(UnitClass{0, -1}.reduced(2) == UnitClass{0, 1});
    CHECK_THROWS_AS(unit_decompose(KElement(2)), DomainError);
}

TEST_CASE("primes above 23 and 2")
{
    CHECK(abs(norm(prime_p1().generator)) == 23);
    CHECK(abs(norm(prime_p2().generator)) == 23);
    CHECK(prime_p1().generator == KElement(-4, 0, 3));
    CHECK(prime_p2().generator == KElement(-1, 0, 3));
    CHECK(prime_two().residue_degree == 3);
    // (23) = p1 p2^2
    KElement g1 = prime_p1().generator, g2 = prime_p2().generator;
    auto u = unit_decompose(KElement(23) / (g1 * g2 * g2));
    CHECK(u.element() * g1 * g2 * g2 == KElement(23));
    CHECK(valuation_at(KElement(23), prime_p1()) == 1);
    CHECK(valuation_at(KElement(23), prime_p2()) == 2);
    CHECK(valuation_at(KElement(8), prime_two()) == 3);
    CHECK_THROWS_AS(valuation_at(KElement(0), prime_two()), UndefinedInput);

    auto above = primes_above(Integer(23));
    CHECK(above.size() == 2);
    for (long p : {5L, 7L, 11L, 59L}) {
        long total = 0;
        for (const auto& P : primes_above(Integer(p))) total += P.residue_degree * P.ramification_index;
        CHECK(total == 3);
    }
}

TEST_CASE("valuations are additive and factorizations reconstruct")
{
    std::mt19937_64 rng(0x5eed0203);
    for (int i = 0; i < 150; ++i) {
        KElement a = random_integral(rng, 15), b = random_integral(rng, 15);
        if (a.is_zero() || b.is_zero()) continue;
        for (const auto* P : {&prime_p1(), &prime_p2(), &prime_two()})
            CHECK(valuation_at(a * b, *P) == valuation_at(a, *P) + valuation_at(b, *P));
        auto fa = factor_integral(a);
        KElement back = fa.unit.element();
        for (const auto& [P, e] : fa.primes) back *= k_pow(P.generator, e);
        CHECK(back == a);
    }
}

TEST_CASE("squares and fourth-power-free parts")
{
    std::mt19937_64 rng(0x5eed0204);
    for (int i = 0; i < 100; ++i) {
        KElement a = random_integral(rng, 8);
        if (a.is_zero()) continue;
        CHECK(is_square(a * a));
        CHECK_FALSE(is_square(a * a * KElement(-1)));
        auto d = fourth_power_free(a * a * a * a * KElement(0, 0, 1) * KElement(46));
        KElement s4 = d.s * d.s * d.s * d.s;
        CHECK(d.delta * s4 == a * a * a * a * KElement(0, 0, 1) * KElement(46));
        for (const auto& [P, e] : d.residual) {
            CHECK(e >= 1);
            CHECK(e <= 3);
        }
        CHECK_FALSE(d.delta_class.has_value());
    }
    auto unit = fourth_power_free(k_pow(KElement::theta(), 6) * KElement(16));
    REQUIRE(unit.delta_class.has_value());
    CHECK(*unit.delta_class == UnitClass{0, 2});
    CHECK(unit.residual.empty());
    CHECK_FALSE(is_square(KElement::theta()));
    CHECK(is_square(KElement(4)));
}

TEST_CASE("edge cases")
{
    CHECK(KElement(0).to_string() == "0");
    CHECK(KElement(0, -1, 0).to_string() == "-theta");
    CHECK(KElement(Rational(1, 2), 0, -2).to_string() == "1/2 - 2*theta^2");
    CHECK(KElement(Rational(1, 2)).is_integral() == false);
    CHECK_THROWS_AS(unit_decompose(KElement(Rational(1, 2))), DomainError);
    CHECK(unit_decompose(-k_pow(KElement::theta(), 9)) == UnitClass{1, 9});
    CHECK(unit_decompose(-k_pow(KElement::theta(), -25)) == UnitClass{1, -25});
    CHECK_THROWS_AS(primes_above(Integer(15)), DomainError);
    CHECK_THROWS_AS(primes_above(Integer("18446744073709551629")), UnsupportedInput);
    // 2 and 3 have no roots of t^3 - t + 1, so they stay inert
    for (long p : {2L, 3L}) {
        auto P = primes_above(Integer(p));
        REQUIRE(P.size() == 1);
        CHECK(P[0].residue_degree == 3);
    }
    // 59 splits completely; generators have norm +-59
    auto P59 = primes_above(Integer(59));
    for (const auto& P : P59) CHECK(abs(norm(P.generator)) == 59);
    CHECK_THROWS_AS(factor_integral(KElement(0)), UndefinedInput);
    CHECK_THROWS_AS(factor_integral(KElement(Rational(1, 3))), DomainError);
    CHECK_THROWS_AS(is_square(KElement(0)), DomainError);
    CHECK_FALSE(is_square(KElement(23)));
    CHECK_FALSE(is_square(KElement(-4)));
    CHECK(is_square(k_pow(KElement(3, 1, 0), 2) * KElement(-1, 0, 0) * KElement(-1, 0, 0)));
    CHECK(multiplication_matrix(KElement::theta())[0][2] == -1);
    CHECK(std::fabs(static_cast<double>(real_embedding(KElement(1, 1, 0)) - (1 + theta_real()))) < 1e-12);
}
