#include "higgse/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace higgse {

UnivariatePoly::UnivariatePoly(const Rational& c)
{
    if (c != 0)
        c_.push_back(c);
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UnivariatePoly UnivariatePoly::monomial(int deg, const Rational& c)
{
    UnivariatePoly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Rational(0));
        p.c_[deg] = c;
    }
    return p;
}

void UnivariatePoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UnivariatePoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[i];
}

const Rational& UnivariatePoly::leading() const
{
    if (c_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const UnivariatePoly& o)
{
    *this = *this * o;
    return *this;
}

UnivariatePoly UnivariatePoly::operator-() const
{
    UnivariatePoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b)
{
    a += b;
    return a;
}

UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b)
{
    a -= b;
    return a;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0)
            continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return UnivariatePoly(std::move(r));
}

UnivariatePoly operator*(const Rational& c, const UnivariatePoly& a)
{
    if (c == 0)
        return {};
    std::vector<Rational> r = a.coeffs();
    for (auto& x : r)
        x *= c;
    return UnivariatePoly(std::move(r));
}

Rational UnivariatePoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string UnivariatePoly::str(const char* var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational a = c_[i];
        if (a == 0)
            continue;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        if (a != 1 || i == 0)
            os << rational_str(a);
        if (i > 0) {
            if (a != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b)
{
    if (b.is_zero())
        throw std::invalid_argument("divmod: division by zero polynomial");
    UnivariatePoly rem = a;
    if (a.degree() < b.degree())
        return {UnivariatePoly(), rem};
    std::vector<Rational> quo(a.degree() - b.degree() + 1, Rational(0));
    const Rational& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational c = rem.leading() / lead;
        quo[shift] = c;
        rem -= c * (UnivariatePoly::monomial(shift) * b);
    }
    return {UnivariatePoly(std::move(quo)), rem};
}

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b)
{
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        a = (Rational(1) / a.leading()) * a;  // monic
    return a;
}

UnivariatePoly univariate_pow(const UnivariatePoly& a, int n)
{
    if (n < 0)
        throw std::invalid_argument("univariate_pow: negative exponent");
    UnivariatePoly r(Rational(1));
    UnivariatePoly base = a;
    while (n > 0) {
        if (n & 1)
            r *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return r;
}

UnivariateRational::UnivariateRational(UnivariatePoly num, UnivariatePoly den)
{
    if (den.is_zero())
        throw std::invalid_argument("UnivariateRational: zero denominator");
    if (num.is_zero()) {
        num_ = UnivariatePoly();
        den_ = UnivariatePoly(Rational(1));
        return;
    }
    UnivariatePoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    Rational lead = den.leading();
    num_ = (Rational(1) / lead) * num;
    den_ = (Rational(1) / lead) * den;
}

UnivariateRational UnivariateRational::operator+(const UnivariateRational& o) const
{
    return UnivariateRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

UnivariateRational UnivariateRational::operator-(const UnivariateRational& o) const
{
    return UnivariateRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

UnivariateRational UnivariateRational::operator*(const UnivariateRational& o) const
{
    return UnivariateRational(num_ * o.num_, den_ * o.den_);
}

UnivariateRational UnivariateRational::operator/(const UnivariateRational& o) const
{
    if (o.is_zero())
        throw std::invalid_argument("UnivariateRational: division by zero");
    return UnivariateRational(num_ * o.den_, den_ * o.num_);
}

std::string UnivariateRational::str(const char* var) const
{
    if (is_polynomial())
        return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace higgse
