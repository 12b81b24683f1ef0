#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwcalc/laurent.hpp"
#include "pwcalc/tables.hpp"

namespace pwcalc {

// Multiset of integer weights of the torus action along a fixed component.
struct WeightVector {
    std::vector<int> weights;

    int count_positive() const;
    int count_negative() const;
    int count_zero() const;

    bool operator==(const WeightVector& rhs) const;
};

struct AttrRepellDims {
    int dim_attr;    // weights > 0
    int dim_repell;  // weights < 0
    int dim_fixed;   // weights = 0
};

// Zero weights count toward the attracting set, so its codimension is the
// number of strictly negative weights.
AttrRepellDims attr_repell_dims(const WeightVector& w);
inline int codim_attr(const WeightVector& w) { return attr_repell_dims(w).dim_repell; }

// Weights of a Lagrangian subspace of the tangent space at a fixed point,
// completed to the full symplectic tangent space: the form is rescaled with
// weight one, so each weight a contributes the complementary weight 1 - a.
WeightVector symplectic_completion(const WeightVector& lagrangian_weights);

enum class GammaCharacterKind { trivial, regular, custom };

// How the finite group of torsion line bundles acts on the cohomology of a
// fixed component: trivially, as the regular representation on a single
// m-dimensional graded piece, or by an explicit invariant/variant split.
struct GammaCharacter {
    GammaCharacterKind kind = GammaCharacterKind::trivial;
    Int dim = 0;     // trivial
    Int order = 0;   // regular
    LaurentPoly invariant_part, variant_part;  // custom

    static GammaCharacter trivial(Int dim);
    static GammaCharacter regular(Int order);
    static GammaCharacter custom(LaurentPoly invariant, LaurentPoly variant);

    // Split the component's Poincare polynomial; throws InconsistentCharacter
    // if the dimension accounting does not match.
    std::pair<LaurentPoly, LaurentPoly> split(const LaurentPoly& poincare) const;
};

// One connected fixed-locus component, as shipped by the catalog.
struct FixedComponent {
    std::string name;
    LaurentPoly poincare;
    int codim_attr = 0;
    std::optional<WeightVector> weights;
    GammaCharacter character;

    // Throws CatalogValidationError naming the failing invariant.
    void validate() const;
};

// P_t(X) = sum_i P_t(F_i) t^{2 c_i}.
LaurentPoly bb_poincare(const std::vector<FixedComponent>& components);

struct GammaSplit {
    LaurentPoly invariant;
    LaurentPoly variant;
};

// The two attracting-set sums computed separately on the invariant and
// variant parts of each component; their sum equals bb_poincare.
GammaSplit gamma_split(const std::vector<FixedComponent>& components);

// Invariant part of an exterior algebra on n degree-one generators, where
// the involution negates generator i iff signs[i] == -1. A subset of
// generators survives iff its sign product is +1; a surviving class in
// degree d carries weight 2d.
GradedVS invariant_exterior(int n, const std::vector<int>& signs);

} // namespace pwcalc
