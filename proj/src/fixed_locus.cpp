#include "pwcalc/fixed_locus.hpp"

#include <algorithm>

#include "pwcalc/errors.hpp"

namespace pwcalc {

int WeightVector::count_positive() const {
    return static_cast<int>(std::count_if(weights.begin(), weights.end(),
                                          [](int m) { return m > 0; }));
}

int WeightVector::count_negative() const {
    return static_cast<int>(std::count_if(weights.begin(), weights.end(),
                                          [](int m) { return m < 0; }));
}

int WeightVector::count_zero() const {
    return static_cast<int>(std::count(weights.begin(), weights.end(), 0));
}

bool WeightVector::operator==(const WeightVector& rhs) const {
    auto a = weights;
    auto b = rhs.weights;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

AttrRepellDims attr_repell_dims(const WeightVector& w) {
    return {w.count_positive(), w.count_negative(), w.count_zero()};
}

WeightVector symplectic_completion(const WeightVector& lagrangian_weights) {
    WeightVector out = lagrangian_weights;
    for (int a : lagrangian_weights.weights) out.weights.push_back(1 - a);
    return out;
}

GammaCharacter GammaCharacter::trivial(Int dim) {
    GammaCharacter c;
    c.kind = GammaCharacterKind::trivial;
    c.dim = std::move(dim);
    return c;
}

GammaCharacter GammaCharacter::regular(Int order) {
    GammaCharacter c;
    c.kind = GammaCharacterKind::regular;
    c.order = std::move(order);
    return c;
}

GammaCharacter GammaCharacter::custom(LaurentPoly invariant, LaurentPoly variant) {
    GammaCharacter c;
    c.kind = GammaCharacterKind::custom;
    c.invariant_part = std::move(invariant);
    c.variant_part = std::move(variant);
    return c;
}

std::pair<LaurentPoly, LaurentPoly> GammaCharacter::split(const LaurentPoly& poincare) const {
    switch (kind) {
        case GammaCharacterKind::trivial:
            if (poincare.evaluate(1) != dim)
                throw InconsistentCharacter("trivial character of dimension " + dim.str() +
                                            " on cohomology of total dimension " +
                                            poincare.evaluate(1).str());
            return {poincare, LaurentPoly()};
        case GammaCharacterKind::regular: {
            // The regular representation of order m on a single m-dimensional
            // graded piece: one invariant class, m - 1 variant ones.
            if (poincare.is_zero() || poincare.min_exp() != poincare.max_exp() ||
                poincare.coeff(poincare.min_exp()) != order)
                throw InconsistentCharacter(
                    "regular character of order " + order.str() +
                    " needs a single graded piece of that dimension, got " +
                    poincare.to_string());
            const int deg = poincare.min_exp();
            return {LaurentPoly::monomial(deg, 1), LaurentPoly::monomial(deg, order - 1)};
        }
        case GammaCharacterKind::custom:
            if (invariant_part + variant_part != poincare)
                throw InconsistentCharacter("custom character split (" +
                                            invariant_part.to_string() + ", " +
                                            variant_part.to_string() +
                                            ") does not add up to " + poincare.to_string());
            return {invariant_part, variant_part};
    }
    throw Error("unreachable");
}

void FixedComponent::validate() const {
    if (!poincare.all_coeffs_nonneg())
        throw CatalogValidationError("component " + name +
                                     ": Poincare polynomial has a negative coefficient");
    if (codim_attr < 0)
        throw CatalogValidationError("component " + name + ": negative attracting codimension");
    if (weights) {
        const int neg = weights->count_negative();
        if (neg != codim_attr)
            throw CatalogValidationError(
                "component " + name + ": codim_attr " + std::to_string(codim_attr) +
                " disagrees with the " + std::to_string(neg) +
                " strictly negative weights");
    }
    try {
        character.split(poincare);
    } catch (const InconsistentCharacter& e) {
        throw CatalogValidationError("component " + name + ": " + e.what());
    }
}

LaurentPoly bb_poincare(const std::vector<FixedComponent>& components) {
    LaurentPoly total;
    for (const auto& c : components) total += c.poincare.shifted(2 * c.codim_attr);
    return total;
}

GammaSplit gamma_split(const std::vector<FixedComponent>& components) {
    GammaSplit out;
    for (const auto& c : components) {
        auto [inv, var] = c.character.split(c.poincare);
        out.invariant += inv.shifted(2 * c.codim_attr);
        out.variant += var.shifted(2 * c.codim_attr);
    }
    return out;
}

GradedVS invariant_exterior(int n, const std::vector<int>& signs) {
    if (n < 0) throw Error("invariant_exterior: negative rank");
    if (static_cast<int>(signs.size()) != n)
        throw Error("invariant_exterior: expected one sign per generator");
    for (int s : signs)
        if (s != 1 && s != -1) throw Error("invariant_exterior: signs must be +-1");

    // plus[d] / minus[d] = number of d-subsets with sign product +1 / -1.
    std::vector<Int> plus(n + 1, 0), minus(n + 1, 0);
    plus[0] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> np(n + 1, 0), nm(n + 1, 0);
        for (int d = 0; d <= i; ++d) {
            np[d] += plus[d];
            nm[d] += minus[d];
            if (signs[i] == 1) {
                np[d + 1] += plus[d];
                nm[d + 1] += minus[d];
            } else {
                np[d + 1] += minus[d];
                nm[d + 1] += plus[d];
            }
        }
        plus = std::move(np);
        minus = std::move(nm);
    }

    GradedVS out;
    for (int d = 0; d <= n; ++d) out.add(d, 2 * d, plus[d]);
    return out;
}

} // namespace pwcalc
