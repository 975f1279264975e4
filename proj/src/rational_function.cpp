#include "higgse/rational_function.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "higgse/errors.hpp"

namespace higgse {

namespace {

bool factor_less(const DenominatorFactor& a, const DenominatorFactor& b)
{
    if (a.factor.terms() != b.factor.terms())
        return a.factor.terms() < b.factor.terms();
    return a.multiplicity < b.multiplicity;
}

}  // namespace

void FactoredRational::push_factor(BivariatePolynomial f, int mult)
{
    if (mult <= 0)
        throw std::invalid_argument("denominator factor multiplicity must be positive");
    Rational c0 = f.constant_term();
    if (c0 == 0)
        throw ZeroConstantTerm("denominator factor has zero constant term: " + f.str());
    if (!f.is_constant()) {
        if (c0 != 1) {
            // scale factor to constant term 1; the scalar joins the numerator
            f = (Rational(1) / c0) * f;
            num_ = (Rational(1) / rational_pow(c0, mult)) * num_;
        }
        den_.push_back({std::move(f), mult});
    } else {
        num_ = (Rational(1) / rational_pow(c0, mult)) * num_;
    }
}

void FactoredRational::normalize()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::sort(den_.begin(), den_.end(), factor_less);
    std::vector<DenominatorFactor> merged;
    for (auto& df : den_) {
        if (!merged.empty() && merged.back().factor == df.factor)
            merged.back().multiplicity += df.multiplicity;
        else
            merged.push_back(std::move(df));
    }
    den_ = std::move(merged);
}

FactoredRational::FactoredRational(BivariatePolynomial num, std::vector<DenominatorFactor> den)
    : num_(std::move(num))
{
    for (auto& df : den)
        push_factor(std::move(df.factor), df.multiplicity);
    normalize();
}

BivariatePolynomial FactoredRational::denominator() const
{
    BivariatePolynomial d(1);
    for (const auto& df : den_)
        d *= poly_pow(df.factor, df.multiplicity);
    return d;
}

FactoredRational FactoredRational::operator+(const FactoredRational& o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    // union of the factor multisets (max multiplicity per factor)
    std::map<BivariatePolynomial::TermMap, std::pair<BivariatePolynomial, int>> uni;
    auto absorb = [&uni](const std::vector<DenominatorFactor>& den) {
        for (const auto& df : den) {
            auto [it, fresh] = uni.try_emplace(df.factor.terms(), std::make_pair(df.factor, df.multiplicity));
            if (!fresh)
                it->second.second = std::max(it->second.second, df.multiplicity);
        }
    };
    absorb(den_);
    absorb(o.den_);

    auto cofactor = [&uni](const std::vector<DenominatorFactor>& den) {
        std::map<BivariatePolynomial::TermMap, int> have;
        for (const auto& df : den)
            have[df.factor.terms()] = df.multiplicity;
        BivariatePolynomial co(1);
        for (const auto& [key, fm] : uni) {
            int deficit = fm.second - (have.count(key) ? have.at(key) : 0);
            if (deficit > 0)
                co *= poly_pow(fm.first, deficit);
        }
        return co;
    };

    BivariatePolynomial new_num = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    std::vector<DenominatorFactor> new_den;
    for (const auto& [key, fm] : uni)
        new_den.push_back({fm.first, fm.second});
    return FactoredRational(std::move(new_num), std::move(new_den));
}

FactoredRational FactoredRational::operator-() const
{
    FactoredRational r = *this;
    r.num_ = -r.num_;
    return r;
}

FactoredRational FactoredRational::operator-(const FactoredRational& o) const
{
    return *this + (-o);
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const
{
    if (is_zero() || o.is_zero())
        return FactoredRational();
    std::vector<DenominatorFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return FactoredRational(num_ * o.num_, std::move(den));
}

FactoredRational FactoredRational::operator/(const FactoredRational& o) const
{
    if (o.is_zero())
        throw ZeroInput("division by the zero rational function");
    if (o.num_.constant_term() == 0)
        throw ZeroConstantTerm("division by a function whose numerator has zero constant term: " +
                               o.num_.str());
    BivariatePolynomial num = num_;
    for (const auto& df : o.den_)
        num *= poly_pow(df.factor, df.multiplicity);
    std::vector<DenominatorFactor> den = den_;
    den.push_back({o.num_, 1});
    return FactoredRational(std::move(num), std::move(den));
}

std::string FactoredRational::str() const
{
    if (den_.empty())
        return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ") / [";
    bool first = true;
    for (const auto& df : den_) {
        if (!first)
            os << " * ";
        first = false;
        os << "(" << df.factor.str() << ")";
        if (df.multiplicity > 1)
            os << "^" << df.multiplicity;
    }
    os << "]";
    return os.str();
}

FactoredRational frac(BivariatePolynomial num, std::initializer_list<BivariatePolynomial> factors)
{
    std::vector<DenominatorFactor> den;
    for (const auto& f : factors)
        den.push_back({f, 1});
    return FactoredRational(std::move(num), std::move(den));
}

FactoredRational frac_pow(BivariatePolynomial num, BivariatePolynomial factor, int mult)
{
    return FactoredRational(std::move(num), {{std::move(factor), mult}});
}

bool rat_eq(const FactoredRational& a, const FactoredRational& b)
{
    // drop the common part of the factor multisets before cross-multiplying
    std::map<BivariatePolynomial::TermMap, int> in_b;
    for (const auto& df : b.denominator_factors())
        in_b[df.factor.terms()] = df.multiplicity;

    BivariatePolynomial lhs = a.numerator();
    BivariatePolynomial rhs = b.numerator();
    for (const auto& df : b.denominator_factors()) {
        int common = 0;
        for (const auto& da : a.denominator_factors())
            if (da.factor == df.factor)
                common = std::min(da.multiplicity, df.multiplicity);
        if (df.multiplicity > common)
            lhs *= poly_pow(df.factor, df.multiplicity - common);
    }
    for (const auto& da : a.denominator_factors()) {
        int common = 0;
        auto it = in_b.find(da.factor.terms());
        if (it != in_b.end())
            common = std::min(da.multiplicity, it->second);
        if (da.multiplicity > common)
            rhs *= poly_pow(da.factor, da.multiplicity - common);
    }
    return lhs == rhs;
}

FactoredRational swap_uv(const FactoredRational& a)
{
    std::vector<DenominatorFactor> den;
    for (const auto& df : a.denominator_factors())
        den.push_back({swap_uv(df.factor), df.multiplicity});
    return FactoredRational(swap_uv(a.numerator()), std::move(den));
}

bool uv_symmetric(const FactoredRational& a)
{
    return rat_eq(a, swap_uv(a));
}

namespace {

UnivariatePoly diagonal_poly(const BivariatePolynomial& p)
{
    UnivariatePoly r;
    for (const auto& [e, c] : p.terms())
        r += UnivariatePoly::monomial(e.first + e.second, c);
    return r;
}

}  // namespace

UnivariateRational diagonal(const FactoredRational& a)
{
    UnivariatePoly num = diagonal_poly(a.numerator());
    UnivariatePoly den(Rational(1));
    // factors have constant term 1, so their diagonals are nonzero
    for (const auto& df : a.denominator_factors())
        den *= univariate_pow(diagonal_poly(df.factor), df.multiplicity);
    return UnivariateRational(std::move(num), std::move(den));
}

Rational limit_at_one(const FactoredRational& a)
{
    UnivariateRational d = diagonal(a);
    if (d.is_zero())
        return 0;
    Rational den1 = d.den().eval(1);
    if (den1 == 0)
        throw PoleAtOne("diagonal has a pole at t = 1: " + d.str());
    return d.num().eval(1) / den1;
}

int uv_degree(const FactoredRational& a)
{
    if (a.is_zero())
        throw ZeroInput("uv_degree of the zero function");
    UnivariateRational d = diagonal(a);
    if (d.is_zero())
        throw ZeroInput("uv_degree: diagonal vanishes identically");
    return (d.num().degree() - d.den().degree()) / 2;
}

namespace {

// p as a polynomial in u whose coefficients are univariate polynomials in v.
std::vector<UnivariatePoly> u_slices(const BivariatePolynomial& p)
{
    std::vector<UnivariatePoly> slices(static_cast<size_t>(std::max(0, p.degree_u() + 1)));
    for (const auto& [e, c] : p.terms())
        slices[e.first] += UnivariatePoly::monomial(e.second, c);
    return slices;
}

BivariatePolynomial from_u_slices(const std::vector<UnivariatePoly>& slices)
{
    BivariatePolynomial p;
    for (size_t du = 0; du < slices.size(); ++du)
        for (int dv = 0; dv <= slices[du].degree(); ++dv)
            p.add_term(static_cast<int>(du), dv, slices[du].coeff(dv));
    return p;
}

// Exact division p / f in Q[u,v]; empty when f does not divide p.
std::optional<BivariatePolynomial> divide_exact(const BivariatePolynomial& p,
                                                const BivariatePolynomial& f)
{
    if (p.is_zero())
        return BivariatePolynomial();
    if (f.is_constant())
        return (Rational(1) / f.constant_term()) * p;

    if (f.degree_u() == 0) {
        // divide every u-slice by the univariate polynomial f(v)
        UnivariatePoly fv = u_slices(f)[0];
        auto slices = u_slices(p);
        for (auto& s : slices) {
            auto [q, r] = divmod(s, fv);
            if (!r.is_zero())
                return std::nullopt;
            s = std::move(q);
        }
        return from_u_slices(slices);
    }

    // long division in u over the field Q(v)
    auto pu = u_slices(p);
    auto fu = u_slices(f);
    int dp = static_cast<int>(pu.size()) - 1;
    int df = static_cast<int>(fu.size()) - 1;
    if (dp < df)
        return std::nullopt;

    std::vector<UnivariateRational> rem(pu.size());
    for (size_t i = 0; i < pu.size(); ++i)
        rem[i] = UnivariateRational(pu[i], UnivariatePoly(Rational(1)));
    UnivariateRational lead_inv =
        UnivariateRational(UnivariatePoly(Rational(1)), fu[df]);

    std::vector<UnivariateRational> quo(dp - df + 1);
    for (int k = dp - df; k >= 0; --k) {
        UnivariateRational c = rem[k + df] * lead_inv;
        quo[k] = c;
        if (c.is_zero())
            continue;
        for (int j = 0; j <= df; ++j)
            rem[k + j] = rem[k + j] - c * UnivariateRational(fu[j], UnivariatePoly(Rational(1)));
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            return std::nullopt;

    // quotient must be polynomial in v coefficient-wise
    std::vector<UnivariatePoly> qslices(quo.size());
    for (size_t i = 0; i < quo.size(); ++i) {
        if (!quo[i].is_polynomial())
            return std::nullopt;
        qslices[i] = (Rational(1) / quo[i].den().leading()) * quo[i].num();
    }
    return from_u_slices(qslices);
}

}  // namespace

std::optional<BivariatePolynomial> as_polynomial(const FactoredRational& a)
{
    BivariatePolynomial result = a.numerator();
    for (const auto& df : a.denominator_factors()) {
        for (int i = 0; i < df.multiplicity; ++i) {
            auto q = divide_exact(result, df.factor);
            if (!q)
                return std::nullopt;
            result = std::move(*q);
        }
    }
    return result;
}

Rational eval_at(const FactoredRational& a, const Rational& at_u, const Rational& at_v)
{
    Rational den = 1;
    for (const auto& df : a.denominator_factors()) {
        Rational f = df.factor.eval(at_u, at_v);
        if (f == 0)
            throw ZeroInput("eval_at: denominator vanishes at the given point");
        den *= rational_pow(f, df.multiplicity);
    }
    return a.numerator().eval(at_u, at_v) / den;
}

}  // namespace higgse
