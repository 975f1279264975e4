#ifndef HIGGSE_POLYNOMIAL_HPP
#define HIGGSE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>

#include "higgse/rational.hpp"

namespace higgse {

// (deg_u, deg_v); std::pair ordering = lexicographic, the canonical term order.
using ExponentPair = std::pair<int, int>;

// Sparse exact polynomial in u, v over arbitrary-precision rationals.
// Canonical form: no stored coefficient is zero, so equality is map equality.
class BivariatePolynomial {
public:
    using TermMap = std::map<ExponentPair, Rational>;

    BivariatePolynomial() = default;
    BivariatePolynomial(const Rational& c);  // constant polynomial
    BivariatePolynomial(long c) : BivariatePolynomial(Rational(c)) {}

    static BivariatePolynomial monomial(int deg_u, int deg_v, const Rational& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(int deg_u, int deg_v) const;
    Rational constant_term() const { return coeff(0, 0); }

    // Max over terms; -1 for the zero polynomial.
    int total_degree() const;
    int degree_u() const;
    int degree_v() const;

    bool operator==(const BivariatePolynomial&) const = default;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const BivariatePolynomial& o);
    BivariatePolynomial operator-() const;

    Rational eval(const Rational& at_u, const Rational& at_v) const;

    bool has_integer_coefficients() const;
    bool has_nonnegative_coefficients() const;

    // "1 - 2*u*v + u^2*v^2"; "0" for the zero polynomial.
    std::string str() const;

    // Direct term insertion; drops zero coefficients.
    void add_term(int deg_u, int deg_v, const Rational& c);

private:
    TermMap terms_;
};

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b);
BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b);
BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a);

BivariatePolynomial poly_pow(const BivariatePolynomial& a, int n);

// Exchanges u- and v-exponents in every term.
BivariatePolynomial swap_uv(const BivariatePolynomial& a);

// Common building blocks.
BivariatePolynomial var_u();
BivariatePolynomial var_v();
BivariatePolynomial uv_pow(int k);       // (uv)^k
BivariatePolynomial geom_sum(int n);     // 1 + uv + ... + (uv)^(n-1)

}  // namespace higgse

#endif
