#ifndef HIGGSE_RATIONAL_FUNCTION_HPP
#define HIGGSE_RATIONAL_FUNCTION_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "higgse/polynomial.hpp"
#include "higgse/univariate.hpp"

namespace higgse {

struct DenominatorFactor {
    BivariatePolynomial factor;
    int multiplicity = 1;

    bool operator==(const DenominatorFactor&) const = default;
};

// Numerator polynomial over an explicit multiset of denominator factors.
// Factors are normalized to constant term exactly 1 (signs and scalars are
// absorbed into the numerator), merged when equal and kept sorted, so the
// denominator always expands to a series with constant term 1 at the origin.
// No polynomial reduction is ever performed; equality is rat_eq.
class FactoredRational {
public:
    FactoredRational() = default;  // zero
    FactoredRational(BivariatePolynomial num) : num_(std::move(num)) {}
    FactoredRational(const Rational& c) : num_(c) {}
    FactoredRational(long c) : num_(Rational(c)) {}
    FactoredRational(BivariatePolynomial num, std::vector<DenominatorFactor> den);

    const BivariatePolynomial& numerator() const { return num_; }
    const std::vector<DenominatorFactor>& denominator_factors() const { return den_; }
    BivariatePolynomial denominator() const;  // expanded product

    bool is_zero() const { return num_.is_zero(); }

    FactoredRational operator+(const FactoredRational& o) const;
    FactoredRational operator-(const FactoredRational& o) const;
    FactoredRational operator*(const FactoredRational& o) const;
    // Throws ZeroConstantTerm when o's numerator cannot become a factor.
    FactoredRational operator/(const FactoredRational& o) const;
    FactoredRational operator-() const;

    std::string str() const;

private:
    void push_factor(BivariatePolynomial f, int mult);
    void normalize();

    BivariatePolynomial num_;
    std::vector<DenominatorFactor> den_;
};

// num / (f1 * f2 * ...), each factor with multiplicity 1.
FactoredRational frac(BivariatePolynomial num, std::initializer_list<BivariatePolynomial> factors);
// num / f^mult
FactoredRational frac_pow(BivariatePolynomial num, BivariatePolynomial factor, int mult);

// True iff num(a)*den(b) == num(b)*den(a). Shared factors are cancelled
// multiset-wise before cross-multiplying.
bool rat_eq(const FactoredRational& a, const FactoredRational& b);

FactoredRational swap_uv(const FactoredRational& a);

// True iff the function is invariant under u <-> v (decided by rat_eq).
bool uv_symmetric(const FactoredRational& a);

// Substitutes u = t, v = t; the result is reduced.
UnivariateRational diagonal(const FactoredRational& a);

// reduce(diagonal(a)) evaluated at t = 1. Throws PoleAtOne when the reduced
// denominator vanishes there.
Rational limit_at_one(const FactoredRational& a);

// (total degree of numerator - total degree of denominator) / 2 on the
// reduced diagonal: the complex dimension when a is an E-polynomial.
// Throws ZeroInput for the zero function.
int uv_degree(const FactoredRational& a);

// Exact quotient if the denominator divides the numerator; empty otherwise.
// Division runs factor by factor, viewing polynomials as univariate in u
// over the rational-function field in v.
std::optional<BivariatePolynomial> as_polynomial(const FactoredRational& a);

// Exact evaluation; throws ZeroInput if the denominator vanishes there.
Rational eval_at(const FactoredRational& a, const Rational& at_u, const Rational& at_v);

}  // namespace higgse

#endif
