#pragma once

#include <string>

#include "pwcalc/catalog.hpp"
#include "pwcalc/fixed_locus.hpp"
#include "pwcalc/intersection.hpp"
#include "pwcalc/report.hpp"
#include "pwcalc/resolution.hpp"

namespace pwcalc {

// Execute the named verifications of a case against its catalog data.
// check_filter, when nonempty, keeps the checks whose name contains it as a
// substring. Checks run deterministically and are reported sorted by name.
// Throws UnknownCase for a case name without a registered runner.
Report run_case(const CaseCatalog& catalog, const std::string& check_filter = "");

// Convenience: load <catalog_dir>/<case_name>.json and run it.
Report run_case_from_dir(const std::string& catalog_dir, const std::string& case_name,
                         const std::string& check_filter = "");

// Weight-table linear system of the og6 case: cells (degree, weight) with
// the standard vanishing (w >= d, w even, w <= 2d), row sums from the
// intersection Poincare polynomial and column sums from the intersection
// E-polynomial. Rows and columns with a zero sum are forced to vanish
// cellwise, as nonnegativity dictates.
LinearConstraintSystem og6_weight_system(const LaurentPoly& ie, const LaurentPoly& ip);

// Same cell grid constrained only by row sums; used for the variant
// channel, where the top-weight diagonal and every cell vanishing in the
// full solution are forced to zero.
LinearConstraintSystem og6_variant_weight_system(const LaurentPoly& ip_var,
                                                 const FiltTable& full_solution);

// The whole filtration-side computation for the og6 case, evaluated eagerly
// from the catalog inputs.
struct Og6Pipeline {
    explicit Og6Pipeline(const CaseCatalog& catalog);

    std::vector<FixedComponent> fixed_M, fixed_Mtilde;
    FixedComponent sigma, omega;
    LaurentPoly p_M, p_Mtilde;
    GammaSplit split_Mtilde;
    LaurentPoly sigma_inv, sigma_var, omega_inv, omega_var;
    LaurentPoly ip, ip_inv, ip_var;
    LaurentPoly e_MB, e_SigmaB, e_OmegaB, e_P1, e_quadric3fold;
    Int num_quadrics;
    LaurentPoly e_MB_smooth, e_Mtilde_B, ie;
    FiltTable weight_full{FiltKind::weight}, weight_var{FiltKind::weight},
        weight_inv{FiltKind::weight};
    FiltTable ih_perverse{FiltKind::perverse}, sigma_perverse{FiltKind::perverse},
        omega_perverse{FiltKind::perverse}, diamond{FiltKind::perverse};
    FiltTable sigma_weight{FiltKind::weight}, omega_weight{FiltKind::weight},
        weight_diamond{FiltKind::weight};
    FiltTable ih_inv_perverse{FiltKind::perverse}, sigma_inv_perverse{FiltKind::perverse},
        omega_inv_perverse{FiltKind::perverse}, invariant_diamond{FiltKind::perverse};
};

// The intersection-number computation for the og6 case.
struct ChowPipeline {
    explicit ChowPipeline(const CaseCatalog& catalog);

    const RingSpec& ring;
    Int num_components, transverse_points;
    Int n_self, omega_j_self, omega_self, n_omega, omega_j_k, omega_k, n_k;
    ChernVector cotangent, normal_twisted, normal;
    Int khat_self, per_center, k_self;
    IntersectionMatrix matrix;
};

// The rebuilt perverse diamond of the resolution for the og6 case.
FiltTable og6_assembled_diamond(const CaseCatalog& catalog);

// Strata tables concentrated on one level: H^d at level step*d, or at zero.
FiltTable top_level_table(const LaurentPoly& poincare, FiltKind kind);
FiltTable level_zero_table(const LaurentPoly& poincare, FiltKind kind);

} // namespace pwcalc
