#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "pwcalc/cases.hpp"
#include "pwcalc/errors.hpp"
#include "pwcalc/resolution.hpp"

using namespace pwcalc;

namespace {

LaurentPoly poly(int lowest, std::vector<Int> coeffs) {
    return LaurentPoly::from_coeffs(lowest, coeffs);
}

} // namespace

TEST_CASE("intersection Poincare polynomial from resolution data") {
    const LaurentPoly ip = ih_poincare_from_resolution(
        {poly(0, {1, 0, 2, 0, 23, 0, 34}), poly(0, {1, 0, 6, 0, 1}), poly(0, {16})});
    CHECK(ip == poly(0, {1, 0, 1, 0, 17, 0, 17}));

    const LaurentPoly p = poly(0, {1, 2, 3});
    CHECK(ih_poincare_from_resolution({p, {}, {}}) == p);

    // Variant channel.
    CHECK(ih_poincare_from_resolution({poly(4, {15, 0, 30}), {}, poly(0, {15})}) ==
          poly(4, {15, 0, 15}));

    CHECK_THROWS_AS(ih_poincare_from_resolution({poly(0, {1}), poly(0, {1}), {}}),
                    NegativeCoefficient);
}

TEST_CASE("intersection E-polynomial from resolution data") {
    const LaurentPoly ie = ie_from_resolution(
        {poly(0, {1, 1, 17, 22, 17, 1, 1}), poly(0, {1, 0, 6, 0, 1}), poly(0, {16})});
    CHECK(ie == poly(0, {1, 0, 17, 0, 17, 0, 1}));
    CHECK(ie.is_palindromic(3));

    const LaurentPoly e = poly(0, {1, 4, 4});
    CHECK(ie_from_resolution({e, {}, {}}) == e);
}

TEST_CASE("stratified E-polynomial sums") {
    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly e_mb_smooth =
        e_stratified_sum({{poly(0, {1, 0, 1, 0, 17, 0, 1}), one},
                          {poly(0, {1, 0, 6, 0, 1}), -one}});
    CHECK(e_mb_smooth == poly(2, {-5, 0, 16, 0, 1}));

    const LaurentPoly e_sigma_part = e_stratified_sum(
        {{e_stratified_sum({{poly(0, {1, 0, 6, 0, 1}), one}, {poly(0, {16}), -one}}),
          poly(0, {1, 1})}});
    CHECK(e_sigma_part == poly(0, {1, 1}) * poly(0, {-15, 0, 6, 0, 1}));

    const LaurentPoly total = e_stratified_sum(
        {{e_mb_smooth, one}, {e_sigma_part, one}, {poly(0, {1, 1, 1, 1}), poly(0, {16})}});
    CHECK(total == poly(0, {1, 1, 17, 22, 17, 1, 1}));
}

TEST_CASE("weight-table system for the og6 case") {
    const LaurentPoly ie = poly(0, {1, 0, 17, 0, 17, 0, 1});
    const LaurentPoly ip = poly(0, {1, 0, 1, 0, 17, 0, 17});
    const FiltTable sol = solve_weight_table(og6_weight_system(ie, ip));

    FiltTable expected(FiltKind::weight);
    expected.add(0, 0, 1);
    expected.add(2, 4, 1);
    expected.add(4, 4, 16);
    expected.add(4, 8, 1);
    expected.add(6, 8, 16);
    expected.add(6, 12, 1);
    CHECK(sol == expected);

    const FiltTable var = solve_weight_table(og6_variant_weight_system(poly(4, {15, 0, 15}), sol));
    FiltTable expected_var(FiltKind::weight);
    expected_var.add(4, 4, 15);
    expected_var.add(6, 8, 15);
    CHECK(var == expected_var);
}

namespace {

// Independent oracle: exhaustive search over nonnegative integer assignments
// of a system whose equations all have unit coefficients, pruning by the
// remaining budget of every equation.
std::vector<std::map<std::pair<int, int>, Int>> enumerate_solutions(
    const LinearConstraintSystem& sys) {
    std::set<std::pair<int, int>> zero(sys.forced_zero.begin(), sys.forced_zero.end());
    std::vector<std::pair<int, int>> cells;
    for (const auto& c : sys.unknowns)
        if (!zero.count(c) && std::find(cells.begin(), cells.end(), c) == cells.end())
            cells.push_back(c);

    std::vector<Int> remaining;
    std::vector<std::vector<std::size_t>> eqs_of_cell(cells.size());
    for (const auto& eq : sys.equations) remaining.push_back(eq.rhs);
    for (std::size_t e = 0; e < sys.equations.size(); ++e)
        for (const auto& c : sys.equations[e].cells)
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (cells[i] == c) eqs_of_cell[i].push_back(e);

    std::vector<std::map<std::pair<int, int>, Int>> solutions;
    std::map<std::pair<int, int>, Int> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            for (const Int& r : remaining)
                if (r != 0) return;
            solutions.push_back(current);
            return;
        }
        Int bound = -1;
        for (std::size_t e : eqs_of_cell[i])
            if (bound < 0 || remaining[e] < bound) bound = remaining[e];
        if (bound < 0) bound = 0;  // cell in no equation: only 0 keeps things finite
        for (Int v = 0; v <= bound; ++v) {
            for (std::size_t e : eqs_of_cell[i]) remaining[e] -= v;
            if (v != 0) current[cells[i]] = v;
            rec(i + 1);
            current.erase(cells[i]);
            for (std::size_t e : eqs_of_cell[i]) remaining[e] += v;
        }
    };
    rec(0);
    return solutions;
}

} // namespace

TEST_CASE("the og6 weight systems have exactly one nonnegative integer solution") {
    const LaurentPoly ie = poly(0, {1, 0, 17, 0, 17, 0, 1});
    const LaurentPoly ip = poly(0, {1, 0, 1, 0, 17, 0, 17});
    const LinearConstraintSystem full = og6_weight_system(ie, ip);
    const auto all = enumerate_solutions(full);
    REQUIRE(all.size() == 1);
    const FiltTable solved = solve_weight_table(full);
    for (const auto& [cell, v] : all[0]) CHECK(solved.entry(cell.first, cell.second) == v);
    CHECK(solved.betti().evaluate(1) == ip.evaluate(1));

    const LinearConstraintSystem variant =
        og6_variant_weight_system(poly(4, {15, 0, 15}), solved);
    const auto all_var = enumerate_solutions(variant);
    REQUIRE(all_var.size() == 1);
    const FiltTable solved_var = solve_weight_table(variant);
    for (const auto& [cell, v] : all_var[0])
        CHECK(solved_var.entry(cell.first, cell.second) == v);
}

TEST_CASE("degenerate and contradictory systems") {
    LinearConstraintSystem one_cell;
    one_cell.unknowns = {{0, 0}};
    one_cell.equations.push_back({{{0, 0}}, 1, "sum"});
    const FiltTable sol = solve_weight_table(one_cell);
    CHECK(sol.entry(0, 0) == 1);

    LinearConstraintSystem contradictory;
    contradictory.unknowns = {{0, 0}, {2, 2}};
    contradictory.equations.push_back({{{0, 0}, {2, 2}}, 3, "degree total"});
    contradictory.equations.push_back({{{0, 0}}, 1, "col 0"});
    contradictory.equations.push_back({{{2, 2}}, 1, "col 2"});
    CHECK_THROWS_AS(solve_weight_table(contradictory), NoSolution);

    LinearConstraintSystem underdetermined;
    underdetermined.unknowns = {{0, 0}, {2, 2}};
    underdetermined.equations.push_back({{{0, 0}, {2, 2}}, 3, "only one sum"});
    CHECK_THROWS_AS(solve_weight_table(underdetermined), NonUniqueSolution);

    LinearConstraintSystem negative;
    negative.unknowns = {{0, 0}, {2, 2}};
    negative.equations.push_back({{{0, 0}}, 2, "a"});
    negative.equations.push_back({{{0, 0}, {2, 2}}, 1, "a+b"});
    CHECK_THROWS_AS(solve_weight_table(negative), NoSolution);
}

TEST_CASE("diamond assembly") {
    FiltTable ih(FiltKind::perverse);
    ih.add(0, 0, 1);
    ih.add(2, 2, 1);
    ih.add(4, 2, 16);
    ih.add(4, 4, 1);
    ih.add(6, 4, 16);
    ih.add(6, 6, 1);

    FiltTable sigma(FiltKind::perverse);
    sigma.add(0, 0, 1);
    sigma.add(2, 2, 6);
    sigma.add(4, 4, 1);

    FiltTable omega(FiltKind::perverse);
    omega.add(0, 0, 16);

    const FiltTable diamond = assemble_resolution_diamond(ih, sigma, omega);

    FiltTable expected(FiltKind::perverse);
    expected.add(0, 0, 1);
    expected.add(2, 1, 1);
    expected.add(2, 2, 1);
    expected.add(4, 2, 16);
    expected.add(4, 3, 6);
    expected.add(4, 4, 1);
    expected.add(6, 3, 16);
    expected.add(6, 4, 16);
    expected.add(6, 5, 1);
    expected.add(6, 6, 1);
    CHECK(diamond == expected);
    CHECK(check_relative_hard_lefschetz(diamond, 3).ok);

    CHECK(assemble_resolution_diamond(ih, FiltTable(FiltKind::perverse),
                                      FiltTable(FiltKind::perverse)) == ih);

    // Stripping the strata back off recovers the intersection table.
    CHECK(strip_resolution_strata(diamond, sigma, omega) == ih);
    CHECK_THROWS_AS(strip_resolution_strata(ih, sigma, omega), NegativeCoefficient);
}

TEST_CASE("hard Lefschetz holds on the intersection table alone") {
    FiltTable ih(FiltKind::perverse);
    ih.add(0, 0, 1);
    ih.add(2, 2, 1);
    ih.add(4, 2, 16);
    ih.add(4, 4, 1);
    ih.add(6, 4, 16);
    ih.add(6, 6, 1);
    CHECK(check_relative_hard_lefschetz(ih, 3).ok);

    // The intersection Poincare polynomial is not palindromic (the space is
    // not compact); duality shows up on the E-polynomial side instead.
    const LaurentPoly ip = LaurentPoly::from_coeffs(0, {1, 0, 1, 0, 17, 0, 17});
    CHECK_FALSE(ip.is_palindromic(3));
    CHECK(LaurentPoly::from_coeffs(0, {1, 0, 17, 0, 17, 0, 1}).is_palindromic(3));
}

TEST_CASE("weight-side assembly uses doubled shifts") {
    FiltTable ihw(FiltKind::weight);
    ihw.add(0, 0, 1);
    FiltTable sigw(FiltKind::weight);
    sigw.add(0, 0, 2);
    FiltTable omw(FiltKind::weight);
    omw.add(0, 0, 3);
    const FiltTable d = assemble_resolution_diamond(ihw, sigw, omw);
    CHECK(d.entry(0, 0) == 1);
    CHECK(d.entry(2, 2) == 2);
    CHECK(d.entry(6, 6) == 3);
}

TEST_CASE("convolution against an auxiliary torus") {
    FiltTable point(FiltKind::perverse);
    point.add(0, 0, 1);
    GradedVS pic;
    for (int j = 0; j <= 4; ++j) pic.add(j, j, binomial(4, j));
    const FiltTable gl = convolve_sl_to_gl(point, pic);
    for (int j = 0; j <= 4; ++j) CHECK(gl.entry(j, j) == binomial(4, j));

    FiltTable point_w(FiltKind::weight);
    point_w.add(0, 0, 1);
    GradedVS torus;
    for (int j = 0; j <= 4; ++j) torus.add(j, 2 * j, binomial(4, j));
    const FiltTable glw = convolve_sl_to_gl(point_w, torus);
    for (int j = 0; j <= 4; ++j) CHECK(glw.entry(j, 2 * j) == binomial(4, j));

    CHECK(check_pw_exchange(gl, glw).ok);

    GradedVS unit;
    unit.add(0, 0, 1);
    FiltTable arbitrary(FiltKind::perverse);
    arbitrary.add(3, 2, 7);
    arbitrary.add(1, 0, 2);
    CHECK(convolve_sl_to_gl(arbitrary, unit) == arbitrary);
}

TEST_CASE("assembly and sums commute on random inputs") {
    std::mt19937 rng(50505);
    std::uniform_int_distribution<int> cells(0, 6);
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<int> lvl(0, 6);
    std::uniform_int_distribution<int> dim(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        FiltTable ih(FiltKind::perverse), sigma(FiltKind::perverse), omega(FiltKind::perverse);
        for (FiltTable* t : {&ih, &sigma, &omega}) {
            const int n = cells(rng);
            for (int i = 0; i < n; ++i) t->add(deg(rng), lvl(rng), dim(rng));
        }
        const FiltTable diamond = assemble_resolution_diamond(ih, sigma, omega);
        const LaurentPoly betti_direct = diamond.betti();
        const LaurentPoly betti_expected =
            ih.betti() + sigma.betti().shifted(2) + omega.betti().shifted(6);
        CHECK(betti_direct == betti_expected);
        CHECK(strip_resolution_strata(diamond, sigma, omega) == ih);
    }
}
