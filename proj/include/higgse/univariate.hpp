#ifndef HIGGSE_UNIVARIATE_HPP
#define HIGGSE_UNIVARIATE_HPP

#include <utility>
#include <vector>

#include "higgse/rational.hpp"

namespace higgse {

// Dense univariate polynomial over Rational. The zero polynomial has an
// empty coefficient vector; otherwise the leading coefficient is nonzero.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    UnivariatePoly(const Rational& c);
    UnivariatePoly(long c) : UnivariatePoly(Rational(c)) {}
    explicit UnivariatePoly(std::vector<Rational> coeffs);

    static UnivariatePoly monomial(int deg, const Rational& c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const UnivariatePoly&) const = default;

    UnivariatePoly& operator+=(const UnivariatePoly& o);
    UnivariatePoly& operator-=(const UnivariatePoly& o);
    UnivariatePoly& operator*=(const UnivariatePoly& o);
    UnivariatePoly operator-() const;

    Rational eval(const Rational& x) const;
    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b);
UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b);
UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly operator*(const Rational& c, const UnivariatePoly& a);

// Euclidean division over Q; quotient, remainder with deg(rem) < deg(b).
std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b);

// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b);

UnivariatePoly univariate_pow(const UnivariatePoly& a, int n);

// Reduced rational function in one variable: gcd(num, den) = 1, den monic.
class UnivariateRational {
public:
    UnivariateRational() : num_(), den_(Rational(1)) {}
    UnivariateRational(const Rational& c) : num_(c), den_(Rational(1)) {}
    UnivariateRational(UnivariatePoly num, UnivariatePoly den);  // reduces

    const UnivariatePoly& num() const { return num_; }
    const UnivariatePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool operator==(const UnivariateRational&) const = default;

    UnivariateRational operator+(const UnivariateRational& o) const;
    UnivariateRational operator-(const UnivariateRational& o) const;
    UnivariateRational operator*(const UnivariateRational& o) const;
    UnivariateRational operator/(const UnivariateRational& o) const;  // o nonzero

    std::string str(const char* var = "t") const;

private:
    UnivariatePoly num_, den_;
};

}  // namespace higgse

#endif
