#include "higgse/series.hpp"

#include <stdexcept>

#include "higgse/errors.hpp"

namespace higgse {

TruncatedSeries::TruncatedSeries(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0");
    c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(const BivariatePolynomial& c, int order)
{
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::one_minus_pow(const BivariatePolynomial& r, int e, int order)
{
    if (e < 0)
        throw std::invalid_argument("one_minus_pow: negative exponent");
    TruncatedSeries s(order);
    // binomial expansion: sum_k C(e,k) (-r)^k x^k
    Rational binom = 1;
    BivariatePolynomial rk(1);
    for (int k = 0; k <= std::min(e, order); ++k) {
        s.c_[k] = binom * rk;
        binom *= Rational(e - k);
        binom /= Rational(k + 1);
        rk *= -r;
    }
    return s;
}

TruncatedSeries TruncatedSeries::geometric(const BivariatePolynomial& r, int order)
{
    TruncatedSeries s(order);
    BivariatePolynomial rk(1);
    for (int k = 0; k <= order; ++k) {
        s.c_[k] = rk;
        if (k < order)
            rk *= r;
    }
    return s;
}

const BivariatePolynomial& TruncatedSeries::coeff(int k) const
{
    if (k < 0 || k > order())
        throw std::out_of_range("series coefficient index beyond truncation order");
    return c_[k];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries s(std::min(order(), o.order()));
    for (int k = 0; k <= s.order(); ++k)
        s.c_[k] = c_[k] + o.c_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    TruncatedSeries s(std::min(order(), o.order()));
    for (int k = 0; k <= s.order(); ++k)
        s.c_[k] = c_[k] - o.c_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    TruncatedSeries s(std::min(order(), o.order()));
    for (int k = 0; k <= s.order(); ++k)
        for (int i = 0; i <= k; ++i)
            s.c_[k] += c_[i] * o.c_[k - i];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const BivariatePolynomial& p) const
{
    TruncatedSeries s(order());
    for (int k = 0; k <= order(); ++k)
        s.c_[k] = c_[k] * p;
    return s;
}

TruncatedSeries TruncatedSeries::shift(int k) const
{
    if (k < 0)
        throw std::invalid_argument("shift by negative power");
    TruncatedSeries s(order());
    for (int i = order(); i >= k; --i)
        s.c_[i] = c_[i - k];
    return s;
}

TruncatedSeries TruncatedSeries::invert() const
{
    const BivariatePolynomial& c0 = c_[0];
    if (!c0.is_constant() || c0.is_zero())
        throw std::invalid_argument("series inversion needs a nonzero constant leading coefficient");
    Rational inv0 = Rational(1) / c0.constant_term();
    TruncatedSeries s(order());
    s.c_[0] = BivariatePolynomial(inv0);
    for (int k = 1; k <= order(); ++k) {
        BivariatePolynomial acc;
        for (int i = 1; i <= k; ++i)
            acc += c_[i] * s.c_[k - i];
        s.c_[k] = -(inv0 * acc);
    }
    return s;
}

SeriesShape series_shape_from_string(const std::string& name)
{
    if (name == "symmetric_product")
        return SeriesShape::symmetric_product;
    if (name == "symmetric_product_reduced")
        return SeriesShape::symmetric_product_reduced;
    if (name == "bare_product")
        return SeriesShape::bare_product;
    if (name == "shifted_product")
        return SeriesShape::shifted_product;
    throw UnknownShape("unknown series shape: '" + name + "'");
}

std::string series_shape_name(SeriesShape shape)
{
    switch (shape) {
    case SeriesShape::symmetric_product: return "symmetric_product";
    case SeriesShape::symmetric_product_reduced: return "symmetric_product_reduced";
    case SeriesShape::bare_product: return "bare_product";
    case SeriesShape::shifted_product: return "shifted_product";
    }
    throw UnknownShape("invalid series shape value");
}

TruncatedSeries series_from_product(int g, SeriesShape shape, int order)
{
    if (g < 2)
        throw GenusOutOfRange("series_from_product needs genus >= 2");
    const BivariatePolynomial u = var_u(), v = var_v(), q = uv_pow(1);
    int a;
    switch (shape) {
    case SeriesShape::symmetric_product:
        a = g;
        break;
    case SeriesShape::symmetric_product_reduced:
    case SeriesShape::bare_product:
    case SeriesShape::shifted_product:
        a = g - 1;
        break;
    default:
        throw UnknownShape("invalid series shape value");
    }
    TruncatedSeries num =
        TruncatedSeries::one_minus_pow(u, a, order) * TruncatedSeries::one_minus_pow(v, a, order);
    if (shape == SeriesShape::bare_product)
        return num;
    TruncatedSeries s = num * TruncatedSeries::geometric(BivariatePolynomial(1), order) *
                        TruncatedSeries::geometric(q, order);
    if (shape == SeriesShape::shifted_product)
        s = s.shift(1);
    return s;
}

SymProdParams sym_prod_params(int g, int d)
{
    if (g < 2)
        throw GenusOutOfRange("genus must be >= 2");
    if (d < 1 || d > g - 1)
        throw DegreeOutOfRange("destabilizing degree d must satisfy 1 <= d <= g-1");
    return {2 * g - 2 - 2 * d, g, d};
}

BivariatePolynomial sym_prod_E(int n, int g)
{
    if (n < 0)
        throw std::invalid_argument("sym_prod_E: negative degree");
    return series_from_product(g, SeriesShape::symmetric_product, n).coeff(n);
}

BivariatePolynomial tilde_sym_prod_E(int n, int g)
{
    if (n < 0)
        throw std::invalid_argument("tilde_sym_prod_E: negative degree");
    BivariatePolynomial excess = series_from_product(g, SeriesShape::bare_product, n).coeff(n);
    return sym_prod_E(n, g) + (two_pow(2 * g) - 1) * excess;
}

EvenCoeffSum even_coeff_sum(int g)
{
    if (g < 2)
        throw GenusOutOfRange("genus must be >= 2");
    int order = 2 * g - 4;  // largest index extracted (d = 1)
    TruncatedSeries bare = series_from_product(g, SeriesShape::bare_product, std::max(order, 0));
    BivariatePolynomial series_value;
    for (int d = 1; d <= g - 1; ++d)
        series_value += bare.coeff(2 * g - 2 - 2 * d);

    const BivariatePolynomial u = var_u(), v = var_v();
    BivariatePolynomial closed =
        Rational(1, 2) *
        (poly_pow(BivariatePolynomial(1) - u, g - 1) * poly_pow(BivariatePolynomial(1) - v, g - 1) +
         poly_pow(BivariatePolynomial(1) + u, g - 1) * poly_pow(BivariatePolynomial(1) + v, g - 1) -
         Rational(2) * uv_pow(g - 1));
    return {series_value, closed};
}

BivariatePolynomial residue_sum_series(int g)
{
    if (g < 2)
        throw GenusOutOfRange("genus must be >= 2");
    int order = 2 * g - 4;
    TruncatedSeries s = series_from_product(g, SeriesShape::shifted_product, std::max(order, 0));
    BivariatePolynomial sum;
    for (int d = 1; d <= g - 1; ++d)
        sum += s.coeff(2 * g - 2 - 2 * d);
    return sum;
}

FactoredRational residue_sum_closed(int g)
{
    if (g < 2)
        throw GenusOutOfRange("genus must be >= 2");
    const BivariatePolynomial one(1);
    const BivariatePolynomial u = var_u(), v = var_v(), q = uv_pow(1);
    BivariatePolynomial am1 = poly_pow(one - u, g - 1) * poly_pow(one - v, g - 1);
    BivariatePolynomial am2 = poly_pow(one - u, g - 2) * poly_pow(one - v, g - 2);
    BivariatePolynomial bm1 = poly_pow(one + u, g - 1) * poly_pow(one + v, g - 1);

    // simple pole at x = -1
    FactoredRational res_m1 = frac(Rational(1, 4) * bm1, {one + q});
    // simple pole at x = 1/(uv); (uv-1)^2 = (1-uv)^2
    FactoredRational res_qinv =
        FactoredRational(-(uv_pow(g - 1) * am1), {{one - q, 2}, {one + q, 1}});
    // double pole at x = 1, as printed: three terms
    FactoredRational res_1 =
        frac(-Rational(g - 1, 2) * ((u + v - Rational(2) * q) * am2), {one - q}) +
        frac(-Rational(4 * g - 7, 4) * am1, {one - q}) +
        frac_pow(Rational(1, 2) * (q * am1), one - q, 2);

    return -(res_1 + res_m1 + res_qinv);
}

}  // namespace higgse
