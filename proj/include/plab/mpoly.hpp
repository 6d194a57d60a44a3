#pragma once

// Sparse multivariate polynomials with rational coefficients.

#include "plab/exact.hpp"
#include "plab/fp_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace plab {

class MPoly {
public:
    using Exponents = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rational& c);
    static MPoly variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::size_t var_index(const std::string& name) const;
    /// Exponent vector -> nonzero coefficient.
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    long total_degree() const;
    /// -1 for the zero polynomial.
    long degree_in(std::size_t var) const;
    /// Coefficient of var^k, as a polynomial in the same ring.
    MPoly coefficient_in(std::size_t var, unsigned k) const;

    void add_term(const Exponents& e, const Rational& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& k) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    MPoly pow(unsigned e) const;
    MPoly derivative(std::size_t var) const;
    Rational eval(const std::vector<Rational>& point) const;
    /// Evaluation with coefficients reduced mod p; denominators must be units.
    std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

    /// Graded order: higher total degree first, ties by lex on the variable
    /// order. Example: "Z1^2 + Z1*W - Z2^2 + 1/4*W^2".
    std::string to_string() const;

private:
    void require_same_ring(const MPoly& o) const;
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// Coefficients low to high of a polynomial in a single variable.
std::vector<Rational> univariate_coeffs(const MPoly& f);
MPoly univariate(const std::string& var, const std::vector<Rational>& coeffs_low_to_high);

/// Determinant of the Sylvester matrix; both inputs nonconstant or at least
/// one nonzero, coefficients low to high.
Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws DomainError for constants.
Rational poly_disc(const MPoly& f);

/// Factorization over F_p of a univariate polynomial with p-integral
/// coefficients. Throws DomainError if p divides the leading coefficient.
FpFactorization factor_mod_p(const MPoly& f, std::uint64_t p);

} // namespace plab
