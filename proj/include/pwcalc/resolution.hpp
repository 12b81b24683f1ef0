#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pwcalc/laurent.hpp"
#include "pwcalc/tables.hpp"

namespace pwcalc {

// The three cohomological pieces of a semismall resolution with a
// 4-dimensional singular stratum and a finite deepest stratum: the total
// space, the stratum shifted by (2, 1), and the deepest stratum shifted by
// (6, 3) in (degree, level). The weight-side level shifts are doubled.
struct ResolutionData {
    LaurentPoly total;
    LaurentPoly sigma;
    LaurentPoly omega;
};

// IP = total - sigma t^2 - omega t^6; throws NegativeCoefficient if the
// subtraction goes negative.
LaurentPoly ih_poincare_from_resolution(const ResolutionData& d);

// IE = total - sigma q - omega q^3, with the same nonnegativity check.
LaurentPoly ie_from_resolution(const ResolutionData& d);

// Sum of E-polynomial pieces times polynomial multipliers; no sign checks,
// strata may contribute negatively.
LaurentPoly e_stratified_sum(const std::vector<std::pair<LaurentPoly, LaurentPoly>>& strata);

// Integer linear system over table cells: row/column sums and forced zeros.
// Solvable with a unique nonnegative integer solution, else an error.
struct LinearConstraintSystem {
    struct Equation {
        std::vector<std::pair<int, int>> cells;
        Int rhs;
        std::string label;
    };

    std::vector<std::pair<int, int>> unknowns;
    std::vector<Equation> equations;
    std::vector<std::pair<int, int>> forced_zero;
};

// Exact rational elimination. Throws NoSolution when the equations are
// contradictory or the unique solution is not a nonnegative integer one,
// NonUniqueSolution when the system is rank-deficient.
FiltTable solve_weight_table(const LinearConstraintSystem& sys);

// Entry (d, k) = ih(d, k) + sigma(d-2, k-s) + omega(d-6, k-3s), where the
// level step s is 1 for perverse tables and 2 for weight tables.
FiltTable assemble_resolution_diamond(const FiltTable& ih, const FiltTable& sigma,
                                      const FiltTable& omega);

// Inverse of the assembly: strip the shifted strata contributions off a
// resolution table, with a nonnegativity check on every cell.
FiltTable strip_resolution_strata(const FiltTable& resolution, const FiltTable& sigma,
                                  const FiltTable& omega);

// Entry (d, k) = sum_j sl(d - j, k - shift(j)) dim aux_j, where the
// auxiliary grade of aux carries shift(j) directly (perversity j on the
// perverse side, weight 2j on the weight side).
FiltTable convolve_sl_to_gl(const FiltTable& sl, const GradedVS& aux);

} // namespace pwcalc
