#include "higgse/strata.hpp"

#include "higgse/errors.hpp"
#include "higgse/series.hpp"

namespace higgse {

namespace {

const BivariatePolynomial kOne(1);

BivariatePolynomial q(int k)
{
    return uv_pow(k);
}

// (1-u)^e (1-v)^e and (1+u)^e (1+v)^e
BivariatePolynomial jminus(int e)
{
    return poly_pow(kOne - var_u(), e) * poly_pow(kOne - var_v(), e);
}

BivariatePolynomial jplus(int e)
{
    return poly_pow(kOne + var_u(), e) * poly_pow(kOne + var_v(), e);
}

void require_genus(int g)
{
    if (g < 2)
        throw GenusOutOfRange("genus must be >= 2");
}

}  // namespace

std::string StratumId::str() const
{
    if (tag == StratumTag::unstable)
        return "unstable(d=" + std::to_string(d) + ")";
    return stratum_tag_name(tag);
}

StratumTag stratum_tag_from_string(const std::string& name)
{
    if (name == "stable")
        return StratumTag::stable_bundle;
    if (name == "type1")
        return StratumTag::type1;
    if (name == "type2")
        return StratumTag::type2;
    if (name == "type3")
        return StratumTag::type3;
    if (name == "type4")
        return StratumTag::type4;
    if (name == "unstable")
        return StratumTag::unstable;
    if (name == "unstable_total")
        return StratumTag::unstable_total;
    throw std::invalid_argument("unknown stratum tag: '" + name + "'");
}

std::string stratum_tag_name(StratumTag tag)
{
    switch (tag) {
    case StratumTag::stable_bundle: return "stable";
    case StratumTag::type1: return "type1";
    case StratumTag::type2: return "type2";
    case StratumTag::type3: return "type3";
    case StratumTag::type4: return "type4";
    case StratumTag::unstable: return "unstable";
    case StratumTag::unstable_total: return "unstable_total";
    }
    throw std::invalid_argument("invalid stratum tag value");
}

FactoredRational e_stable_moduli(int g)
{
    require_genus(g);
    BivariatePolynomial u = var_u(), v = var_v();
    BivariatePolynomial num =
        poly_pow(kOne - BivariatePolynomial::monomial(2, 1), g) *
            poly_pow(kOne - BivariatePolynomial::monomial(1, 2), g) -
        q(g + 1) * jminus(g);
    FactoredRational first = frac(num, {kOne - q(1), kOne - q(2)});
    FactoredRational half = frac(Rational(1, 2) * jminus(g), {kOne - q(1)}) +
                            frac(Rational(1, 2) * jplus(g), {kOne + q(1)});
    return first - half;
}

FactoredRational e_stable_locus(int g)
{
    require_genus(g);
    return FactoredRational(q(3 * g - 3)) * e_stable_moduli(g);
}

BivariatePolynomial e_jacobian_invariant(int g)
{
    return Rational(1, 2) * (jminus(g) + jplus(g));
}

BivariatePolynomial e_jacobian_anti_invariant(int g)
{
    return Rational(1, 2) * (jminus(g) - jplus(g));
}

FactoredRational e_proj_pair_invariant(int g)
{
    // ((uv)^g - 1)((uv)^(g-1) - 1) / ((uv-1)((uv)^2 - 1))
    return frac((q(g) - kOne) * (q(g - 1) - kOne), {-(kOne - q(1)), -(kOne - q(2))});
}

FactoredRational e_proj_pair_anti_invariant(int g)
{
    return frac(q(1) * (q(g - 1) - kOne) * (q(g - 2) - kOne), {-(kOne - q(1)), -(kOne - q(2))});
}

FactoredRational e_type1(int g)
{
    require_genus(g);
    BivariatePolynomial invariant_part = e_jacobian_invariant(g) - BivariatePolynomial(two_pow(2 * g));
    FactoredRational bracket = FactoredRational(invariant_part) * e_proj_pair_invariant(g) +
                               FactoredRational(e_jacobian_anti_invariant(g)) * e_proj_pair_anti_invariant(g);
    return FactoredRational(q(g) * -(kOne - q(1))) * bracket;
}

FactoredRational e_type2(int g)
{
    require_genus(g);
    BivariatePolynomial pre = q(3 * g - 3) - q(2 * g - 1);
    FactoredRational lambda = frac((q(g - 1) - kOne) * (jminus(g) - BivariatePolynomial(two_pow(2 * g))),
                                   {-(kOne - q(1))});
    return FactoredRational(pre) * lambda;
}

KirwanPipeline kirwan_type3_pipeline(int g)
{
    require_genus(g);
    KirwanPipeline p;
    p.start = frac(kOne - q(3 * g), {kOne - q(2), kOne - q(1)});
    p.unstable = frac(q(2 * g - 1) * geom_sum(g), {kOne - q(1)});
    // 1 + uv + ... + (uv)^(g-1) over 1-(uv)^2, times uv + ... + (uv)^(2g-3),
    // minus (uv)^(g-1) (1 + ... + (uv)^(g-2))(1 + ... + (uv)^(g-1)) / (1-uv)
    BivariatePolynomial middle = q(1) * geom_sum(2 * g - 3);
    p.correction = frac(geom_sum(g) * middle, {kOne - q(2)}) -
                   frac(q(g - 1) * geom_sum(g - 1) * geom_sum(g), {kOne - q(1)});
    p.partial = FactoredRational((kOne - q(g - 1)) * (kOne - q(g)) * (kOne - q(g + 1)),
                                 {{kOne - q(1), 2}, {kOne - q(2), 1}});
    p.exceptional = frac(Rational(1, 2) * ((kOne - q(g)) * ((kOne - q(g - 1)) * (kOne - q(g - 1)))),
                         {kOne - q(1), kOne - q(1), kOne - q(1)}) +
                    frac(Rational(1, 2) * ((kOne - q(g)) * (kOne - q(2 * g - 2))),
                         {kOne - q(1), kOne - q(2)});
    return p;
}

FactoredRational kirwan_projective_quotient(int g)
{
    require_genus(g);
    return frac(q(g) * (kOne - q(g - 1)) * (kOne - q(g)), {kOne - q(1), kOne - q(2)});
}

FactoredRational e_type3(int g)
{
    require_genus(g);
    return frac(two_pow(2 * g) * (q(g) * (q(g - 1) - kOne) * (q(g) - kOne)), {-(kOne - q(2))});
}

FactoredRational e_type4(int g)
{
    require_genus(g);
    return frac(two_pow(2 * g) * (q(2 * g - 2) * (q(g - 1) - kOne) * (q(g) - kOne)),
                {-(kOne - q(1))});
}

FactoredRational e_unstable_stratum(int g, int d)
{
    SymProdParams params = sym_prod_params(g, d);
    return FactoredRational(q(3 * g - 3) * tilde_sym_prod_E(params.n, g));
}

UnstableTotal e_unstable_total(int g)
{
    require_genus(g);
    UnstableTotal t;

    FactoredRational summed;
    for (int d = 1; d <= g - 1; ++d)
        summed = summed + e_unstable_stratum(g, d);
    t.summed = summed;

    BivariatePolynomial am1 = jminus(g - 1), bm1 = jplus(g - 1);
    BivariatePolynomial even_part = am1 + bm1 - Rational(2) * q(g - 1);
    FactoredRational first(two_pow(2 * g - 1) * (q(3 * g - 3) * even_part));
    // bracket of the five residue-derived terms
    FactoredRational bracket =
        frac(-(Rational(1, 4) * bm1), {kOne + q(1)}) +
        FactoredRational(q(g - 1) * am1, {{kOne - q(1), 2}, {kOne + q(1), 1}}) +
        frac(Rational(g - 1, 2) * ((var_u() + var_v() - Rational(2) * q(1)) * jminus(g - 2)),
             {kOne - q(1)}) +
        frac(Rational(4 * g - 7, 4) * am1, {kOne - q(1)}) +
        frac_pow(-(Rational(1, 2) * (q(1) * am1)), kOne - q(1), 2);
    FactoredRational second =
        FactoredRational(q(3 * g - 3) * ((kOne - var_u()) * (kOne - var_v()))) * bracket;
    t.closed = first + second;
    return t;
}

FactoredRational e_ms(int g)
{
    require_genus(g);
    return e_stable_locus(g) + e_type1(g) + e_type2(g) + e_type3(g) + e_type4(g) +
           e_unstable_total(g).summed;
}

FactoredRational theorem_delta_type1(int g)
{
    // the -2^(2g) omitted from the type-1 invariant part
    return frac(two_pow(2 * g) * (q(g) * (q(g) - kOne) * (q(g - 1) - kOne)), {-(kOne - q(2))});
}

FactoredRational theorem_delta_type4(int g)
{
    // the extra ((uv)^(g-1) - 1) factor on the type-4 line
    return frac(two_pow(2 * g) * (q(2 * g - 2) * (q(g) - kOne) * (q(g - 1) - kOne) *
                                  (q(g - 1) - BivariatePolynomial(2))),
                {-(kOne - q(1))});
}

FactoredRational e_ms_theorem_transcription(int g)
{
    require_genus(g);
    // stable lines, as in the canonical sum
    FactoredRational total = e_stable_locus(g);
    // type-1 lines as displayed: no -2^(2g) on the invariant part
    FactoredRational line3 = frac(q(g) * e_jacobian_invariant(g) * ((q(g) - kOne) * (q(g - 1) - kOne)),
                                  {-(kOne - q(2))});
    FactoredRational line4 =
        frac(q(g + 1) * e_jacobian_anti_invariant(g) * ((q(g - 1) - kOne) * (q(g - 2) - kOne)),
             {-(kOne - q(2))});
    // type-2 line (identical to the canonical formula)
    FactoredRational line5 =
        frac(q(2 * g - 1) * ((q(g - 2) - kOne) * (q(g - 1) - kOne)) *
                 (jminus(g) - BivariatePolynomial(two_pow(2 * g))),
             {-(kOne - q(1))});
    // type-3 line and type-4 line as displayed (extra ((uv)^(g-1)-1) factor)
    FactoredRational line6 = e_type3(g);
    FactoredRational line7 =
        frac(two_pow(2 * g) * (q(2 * g - 2) * (q(g - 1) - kOne) * ((q(g - 1) - kOne) * (q(g) - kOne))),
             {-(kOne - q(1))});
    return total + line3 + line4 + line5 + line6 + line7 + e_unstable_total(g).closed;
}

int stratum_dimension(const StratumId& id, int g)
{
    require_genus(g);
    switch (id.tag) {
    case StratumTag::stable_bundle: return 6 * g - 6;
    case StratumTag::type1: return 4 * g - 3;
    case StratumTag::type2: return 5 * g - 5;
    case StratumTag::type3: return 3 * g - 3;
    case StratumTag::type4: return 4 * g - 4;
    case StratumTag::unstable: {
        sym_prod_params(g, id.d);
        return 5 * g - 5 - 2 * id.d;
    }
    case StratumTag::unstable_total: return 5 * g - 7;  // top stratum d = 1
    }
    throw std::invalid_argument("invalid stratum tag value");
}

StratumReport stratum_report(const StratumId& id, int g)
{
    StratumReport r;
    r.id = id;
    r.genus = g;
    switch (id.tag) {
    case StratumTag::stable_bundle: r.e_poly = e_stable_locus(g); break;
    case StratumTag::type1: r.e_poly = e_type1(g); break;
    case StratumTag::type2: r.e_poly = e_type2(g); break;
    case StratumTag::type3: r.e_poly = e_type3(g); break;
    case StratumTag::type4: r.e_poly = e_type4(g); break;
    case StratumTag::unstable: r.e_poly = e_unstable_stratum(g, id.d); break;
    case StratumTag::unstable_total: r.e_poly = e_unstable_total(g).summed; break;
    }
    r.expected_dim = stratum_dimension(id, g);
    r.empty = r.e_poly.is_zero();
    r.dim_check = r.empty ? true : uv_degree(r.e_poly) == r.expected_dim;
    r.symmetric = r.empty ? true : uv_symmetric(r.e_poly);
    return r;
}

std::vector<StratumReport> all_stratum_reports(int g)
{
    std::vector<StratumReport> out;
    for (StratumTag tag : {StratumTag::stable_bundle, StratumTag::type1, StratumTag::type2,
                           StratumTag::type3, StratumTag::type4})
        out.push_back(stratum_report({tag, 0}, g));
    for (int d = 1; d <= g - 1; ++d)
        out.push_back(stratum_report({StratumTag::unstable, d}, g));
    out.push_back(stratum_report({StratumTag::unstable_total, 0}, g));
    return out;
}

}  // namespace higgse
