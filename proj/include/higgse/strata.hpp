#ifndef HIGGSE_STRATA_HPP
#define HIGGSE_STRATA_HPP

#include <string>
#include <vector>

#include "higgse/rational_function.hpp"

namespace higgse {

// Locally closed strata of the stable locus, indexed by the shape of the
// underlying rank-2 bundle.
enum class StratumTag {
    stable_bundle,   // V stable: cotangent bundle of the bundle moduli
    type1,           // V = L + L^{-1}, L not self-inverse
    type2,           // nontrivial extension, L not self-inverse
    type3,           // V = L + L^{-1}, L self-inverse
    type4,           // nontrivial extension, L self-inverse
    unstable,        // V unstable with destabilizing degree d
    unstable_total,  // all unstable strata together
};

struct StratumId {
    StratumTag tag = StratumTag::stable_bundle;
    int d = 0;  // only meaningful for unstable

    std::string str() const;
};

StratumTag stratum_tag_from_string(const std::string& name);
std::string stratum_tag_name(StratumTag tag);

struct StratumReport {
    StratumId id;
    int genus = 0;
    FactoredRational e_poly;
    int expected_dim = 0;
    bool dim_check = false;  // uv_degree(e_poly) == expected_dim
    bool symmetric = false;  // invariant under u <-> v
    bool empty = false;      // identically zero stratum (type2 at g = 2)
};

// E-polynomial of the moduli of rank-2 stable bundles with trivial
// determinant (dimension 3g-3).
FactoredRational e_stable_moduli(int g);

// Its cotangent locus inside the Higgs moduli: (uv)^(3g-3) times the above.
FactoredRational e_stable_locus(int g);

FactoredRational e_type1(int g);
FactoredRational e_type2(int g);
FactoredRational e_type3(int g);
FactoredRational e_type4(int g);

// Intermediate stages of the equivariant blow-up computation behind type 3.
// Identities: start - unstable + correction = partial, and
// partial - exceptional = the projective quotient (uv)^g ((uv)^(g-1)-1)((uv)^g-1) / ((1-uv)(1-(uv)^2))-normalized form.
struct KirwanPipeline {
    FactoredRational start;        // equivariant series of the ambient space
    FactoredRational unstable;     // series of the unstable part
    FactoredRational correction;   // blow-up correction
    FactoredRational partial;      // partial desingularization
    FactoredRational exceptional;  // quotient of the exceptional divisor
};
KirwanPipeline kirwan_type3_pipeline(int g);

// Projective quotient appearing after the exceptional divisor is removed.
FactoredRational kirwan_projective_quotient(int g);

// E of the stratum of pairs with unstable bundle of destabilizing degree d:
// (uv)^(3g-3) * tilde_sym_prod_E(2g-2-2d, g). Throws DegreeOutOfRange.
FactoredRational e_unstable_stratum(int g, int d);

struct UnstableTotal {
    FactoredRational closed;  // residue-derived closed form
    FactoredRational summed;  // direct sum over d
};
UnstableTotal e_unstable_total(int g);

// Canonical total: the sum of the six per-stratum formulas.
FactoredRational e_ms(int g);

// The theorem-display version of the total, kept verbatim as a comparator:
// its type-1 line omits the -2^(2g) correction and its type-4 line carries
// an extra ((uv)^(g-1)-1) factor. Never used downstream.
FactoredRational e_ms_theorem_transcription(int g);

// The two deltas by which the transcription differs from the canonical sum.
FactoredRational theorem_delta_type1(int g);
FactoredRational theorem_delta_type4(int g);

// Expected complex dimension of a stratum (the degree oracle).
int stratum_dimension(const StratumId& id, int g);

StratumReport stratum_report(const StratumId& id, int g);
std::vector<StratumReport> all_stratum_reports(int g);

// Isotypic helper pieces, exposed for unit tests.
BivariatePolynomial e_jacobian_invariant(int g);       // (A+B)/2
BivariatePolynomial e_jacobian_anti_invariant(int g);  // (A-B)/2
FactoredRational e_proj_pair_invariant(int g);         // P^{g-2} x P^{g-2}, invariant part
FactoredRational e_proj_pair_anti_invariant(int g);

}  // namespace higgse

#endif
