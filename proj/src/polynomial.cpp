#include "higgse/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace higgse {

BivariatePolynomial::BivariatePolynomial(const Rational& c)
{
    if (c != 0)
        terms_.emplace(ExponentPair{0, 0}, c);
}

BivariatePolynomial BivariatePolynomial::monomial(int deg_u, int deg_v, const Rational& c)
{
    if (deg_u < 0 || deg_v < 0)
        throw std::invalid_argument("monomial: negative exponent");
    BivariatePolynomial p;
    if (c != 0)
        p.terms_.emplace(ExponentPair{deg_u, deg_v}, c);
    return p;
}

bool BivariatePolynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExponentPair{0, 0});
}

Rational BivariatePolynomial::coeff(int deg_u, int deg_v) const
{
    auto it = terms_.find({deg_u, deg_v});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first + e.second);
    return d;
}

int BivariatePolynomial::degree_u() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first);
    return d;
}

int BivariatePolynomial::degree_v() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.second);
    return d;
}

void BivariatePolynomial::add_term(int deg_u, int deg_v, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace({deg_u, deg_v}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e.first, e.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e.first, e.second, -c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o)
{
    *this = *this * o;
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const
{
    BivariatePolynomial r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b)
{
    a += b;
    return a;
}

BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b)
{
    a -= b;
    return a;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b)
{
    BivariatePolynomial r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a)
{
    if (c == 0)
        return {};
    BivariatePolynomial r;
    for (const auto& [e, cc] : a.terms())
        r.add_term(e.first, e.second, c * cc);
    return r;
}

Rational BivariatePolynomial::eval(const Rational& at_u, const Rational& at_v) const
{
    Rational sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c * rational_pow(at_u, e.first) * rational_pow(at_v, e.second);
    return sum;
}

bool BivariatePolynomial::has_integer_coefficients() const
{
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1)
            return false;
    return true;
}

bool BivariatePolynomial::has_nonnegative_coefficients() const
{
    for (const auto& [e, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

std::string BivariatePolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
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
        bool has_vars = e.first > 0 || e.second > 0;
        if (a != 1 || !has_vars) {
            os << rational_str(a);
            if (has_vars)
                os << "*";
        }
        if (e.first > 0) {
            os << "u";
            if (e.first > 1)
                os << "^" << e.first;
        }
        if (e.second > 0) {
            if (e.first > 0)
                os << "*";
            os << "v";
            if (e.second > 1)
                os << "^" << e.second;
        }
    }
    return os.str();
}

BivariatePolynomial poly_pow(const BivariatePolynomial& a, int n)
{
    if (n < 0)
        throw std::invalid_argument("poly_pow: negative exponent");
    BivariatePolynomial r(1);
    BivariatePolynomial base = a;
    while (n > 0) {
        if (n & 1)
            r *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return r;
}

BivariatePolynomial swap_uv(const BivariatePolynomial& a)
{
    BivariatePolynomial r;
    for (const auto& [e, c] : a.terms())
        r.add_term(e.second, e.first, c);
    return r;
}

BivariatePolynomial var_u()
{
    return BivariatePolynomial::monomial(1, 0);
}

BivariatePolynomial var_v()
{
    return BivariatePolynomial::monomial(0, 1);
}

BivariatePolynomial uv_pow(int k)
{
    return BivariatePolynomial::monomial(k, k);
}

BivariatePolynomial geom_sum(int n)
{
    BivariatePolynomial r;
    for (int i = 0; i < n; ++i)
        r.add_term(i, i, 1);
    return r;
}

Rational rational_from_string(const std::string& s)
{
    Rational r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, unsigned long e)
{
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;
}

}  // namespace higgse
