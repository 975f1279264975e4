#ifndef HIGGSE_SERIES_HPP
#define HIGGSE_SERIES_HPP

#include <string>
#include <vector>

#include "higgse/polynomial.hpp"
#include "higgse/rational_function.hpp"

namespace higgse {

// Power series in an auxiliary variable x with BivariatePolynomial
// coefficients, truncated at a declared order; holds exactly order+1 entries.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries constant(const BivariatePolynomial& c, int order);
    // (1 - r*x)^e expanded binomially (e >= 0).
    static TruncatedSeries one_minus_pow(const BivariatePolynomial& r, int e, int order);
    // 1/(1 - r*x) as a geometric series.
    static TruncatedSeries geometric(const BivariatePolynomial& r, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BivariatePolynomial& coeff(int k) const;  // requires k <= order

    // Arithmetic truncates to the smaller order.
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const BivariatePolynomial& p) const;

    // Multiplication by x^k (shifts coefficients, keeps the order).
    TruncatedSeries shift(int k) const;

    // Multiplicative inverse; requires the constant coefficient to be a
    // nonzero rational constant.
    TruncatedSeries invert() const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<BivariatePolynomial> c_;
};

// The generating-function shapes used for symmetric-product coefficients.
enum class SeriesShape {
    symmetric_product,          // (1-ux)^g (1-vx)^g / ((1-x)(1-uvx))
    symmetric_product_reduced,  // (1-ux)^(g-1) (1-vx)^(g-1) / ((1-x)(1-uvx))
    bare_product,               // (1-ux)^(g-1) (1-vx)^(g-1)
    shifted_product,            // x (1-ux)^(g-1) (1-vx)^(g-1) / ((1-x)(1-uvx))
};

// Throws UnknownShape on unparseable names (used by the CLI/JSON surface).
SeriesShape series_shape_from_string(const std::string& name);
std::string series_shape_name(SeriesShape shape);

// Exact truncated expansion of the named shape at the origin.
TruncatedSeries series_from_product(int g, SeriesShape shape, int order);

// Degree parameters of the unstable-stratum covers: n = 2g-2-2d, 1 <= d <= g-1.
struct SymProdParams {
    int n;
    int g;
    int d;
};
SymProdParams sym_prod_params(int g, int d);  // validates; throws DegreeOutOfRange

// E(S^n X): coefficient of x^n in the symmetric_product shape.
BivariatePolynomial sym_prod_E(int n, int g);

// E of the 2^(2g)-fold cover:
// sym_prod_E(n,g) + (2^(2g)-1) * Coeff_{x^n}[(1-ux)^(g-1)(1-vx)^(g-1)].
BivariatePolynomial tilde_sym_prod_E(int n, int g);

struct EvenCoeffSum {
    BivariatePolynomial series_value;  // sum of bare-product coefficients
    BivariatePolynomial closed_value;  // half-sum closed form
};
EvenCoeffSum even_coeff_sum(int g);

// Sum over d of Coeff_{x^(2g-2-2d)} of the shifted_product shape, computed
// directly from the truncated series.
BivariatePolynomial residue_sum_series(int g);

// The same sum assembled from the three residues of the meromorphic
// extension (simple poles at x=-1 and x=1/uv, double pole at x=1).
FactoredRational residue_sum_closed(int g);

}  // namespace higgse

#endif
