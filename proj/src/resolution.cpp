#include "pwcalc/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pwcalc/errors.hpp"

namespace pwcalc {

namespace {

LaurentPoly checked_nonneg(LaurentPoly p, const char* what) {
    if (!p.all_coeffs_nonneg())
        throw NegativeCoefficient(std::string(what) + ": " + p.to_string());
    return p;
}

} // namespace

LaurentPoly ih_poincare_from_resolution(const ResolutionData& d) {
    return checked_nonneg(d.total - d.sigma.shifted(2) - d.omega.shifted(6),
                          "ih_poincare_from_resolution");
}

LaurentPoly ie_from_resolution(const ResolutionData& d) {
    return checked_nonneg(d.total - d.sigma.shifted(1) - d.omega.shifted(3),
                          "ie_from_resolution");
}

LaurentPoly e_stratified_sum(const std::vector<std::pair<LaurentPoly, LaurentPoly>>& strata) {
    LaurentPoly total;
    for (const auto& [e, mult] : strata) total += e * mult;
    return total;
}

FiltTable solve_weight_table(const LinearConstraintSystem& sys) {
    std::map<std::pair<int, int>, int> column;
    std::vector<std::pair<int, int>> cells;
    for (const auto& cell : sys.unknowns) {
        if (column.count(cell)) continue;
        column[cell] = static_cast<int>(cells.size());
        cells.push_back(cell);
    }
    const int ncols = static_cast<int>(cells.size());

    // Augmented matrix over exact rationals.
    std::vector<std::vector<Rational>> rows;
    std::vector<std::string> labels;
    auto add_row = [&](const std::vector<std::pair<int, int>>& eq_cells, const Int& rhs,
                       const std::string& label) {
        std::vector<Rational> row(ncols + 1, 0);
        for (const auto& cell : eq_cells) {
            auto it = column.find(cell);
            if (it == column.end())
                throw NoSolution("equation '" + label + "' references cell (" +
                                 std::to_string(cell.first) + "," + std::to_string(cell.second) +
                                 ") outside the unknowns");
            row[it->second] += 1;
        }
        row[ncols] = rhs;
        rows.push_back(std::move(row));
        labels.push_back(label);
    };
    for (const auto& eq : sys.equations) add_row(eq.cells, eq.rhs, eq.label);
    for (const auto& cell : sys.forced_zero) {
        if (!column.count(cell)) continue;  // vanishing outside the unknowns is vacuous
        add_row({cell}, 0,
                "vanishing at (" + std::to_string(cell.first) + "," +
                    std::to_string(cell.second) + ")");
    }

    // Gaussian elimination to reduced row echelon form.
    std::vector<int> pivot_of_col(ncols, -1);
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational lead = rows[rank][col];
        for (int c = col; c <= ncols; ++c) rows[rank][c] /= lead;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (int c = col; c <= ncols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }

    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][ncols] != 0)
            throw NoSolution("contradictory constraints: 0 = " +
                             Rational(rows[r][ncols]).str());

    if (rank < ncols) {
        std::ostringstream os;
        os << "underdetermined system: " << ncols - rank << " free cell(s):";
        for (int c = 0; c < ncols; ++c)
            if (pivot_of_col[c] < 0)
                os << " (" << cells[c].first << "," << cells[c].second << ")";
        throw NonUniqueSolution(os.str());
    }

    FiltTable out(FiltKind::weight);
    for (int c = 0; c < ncols; ++c) {
        const Rational v = rows[pivot_of_col[c]][ncols];
        if (denominator(v) != 1)
            throw NoSolution("non-integer solution " + v.str() + " at cell (" +
                             std::to_string(cells[c].first) + "," +
                             std::to_string(cells[c].second) + ")");
        const Int value = numerator(v);
        if (value < 0)
            throw NoSolution("negative solution " + value.str() + " at cell (" +
                             std::to_string(cells[c].first) + "," +
                             std::to_string(cells[c].second) + ")");
        out.add(cells[c].first, cells[c].second, value);
    }
    return out;
}

namespace {

int level_step(const FiltTable& t) {
    return t.kind() == FiltKind::perverse ? 1 : 2;
}

void require_same_kind(const FiltTable& a, const FiltTable& b, const FiltTable& c) {
    if (a.kind() != b.kind() || a.kind() != c.kind())
        throw Error("resolution tables must share one filtration kind");
}

} // namespace

FiltTable assemble_resolution_diamond(const FiltTable& ih, const FiltTable& sigma,
                                      const FiltTable& omega) {
    require_same_kind(ih, sigma, omega);
    const int s = level_step(ih);
    FiltTable out(ih.kind());
    for (const auto& [cell, dim] : ih.entries()) out.add(cell.first, cell.second, dim);
    for (const auto& [cell, dim] : sigma.entries())
        out.add(cell.first + 2, cell.second + s, dim);
    for (const auto& [cell, dim] : omega.entries())
        out.add(cell.first + 6, cell.second + 3 * s, dim);
    return out;
}

FiltTable strip_resolution_strata(const FiltTable& resolution, const FiltTable& sigma,
                                  const FiltTable& omega) {
    require_same_kind(resolution, sigma, omega);
    const int s = level_step(resolution);
    std::map<std::pair<int, int>, Int> cells;
    for (const auto& [cell, dim] : resolution.entries()) cells[cell] += dim;
    for (const auto& [cell, dim] : sigma.entries())
        cells[{cell.first + 2, cell.second + s}] -= dim;
    for (const auto& [cell, dim] : omega.entries())
        cells[{cell.first + 6, cell.second + 3 * s}] -= dim;
    FiltTable out(resolution.kind());
    for (const auto& [cell, dim] : cells) {
        if (dim < 0)
            throw NegativeCoefficient("strip_resolution_strata at (" +
                                      std::to_string(cell.first) + "," +
                                      std::to_string(cell.second) + "): " + dim.str());
        out.add(cell.first, cell.second, dim);
    }
    return out;
}

FiltTable convolve_sl_to_gl(const FiltTable& sl, const GradedVS& aux) {
    FiltTable out(sl.kind());
    for (const auto& [bidegree, mult] : aux.dims()) {
        const auto [j, shift] = bidegree;
        for (const auto& [cell, dim] : sl.entries())
            out.add(cell.first + j, cell.second + shift, dim * mult);
    }
    return out;
}

} // namespace pwcalc
