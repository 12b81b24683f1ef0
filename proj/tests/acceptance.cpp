// Acceptance suite: recomputes every published number of the og6 and
// genus-1 cases from the catalog inputs and compares exactly against values
// frozen in this file. One line per criterion; exit status 0 iff all pass.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pwcalc/cases.hpp"
#include "pwcalc/catalog.hpp"
#include "pwcalc/errors.hpp"
#include "pwcalc/kummer.hpp"

using namespace pwcalc;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << description
              << detail << "\n";
    if (!ok) ++failures;
}

LaurentPoly poly(int lowest, std::vector<Int> coeffs) {
    return LaurentPoly::from_coeffs(lowest, coeffs);
}

FiltTable table(FiltKind kind, std::vector<FiltTable::Record> records) {
    return FiltTable::from_records(kind, records);
}

bool expect(bool condition, const std::string& what) {
    if (!condition) std::cout << "       mismatch: " << what << "\n";
    return condition;
}

} // namespace

int main() {
    const std::string catalog_path = std::string(PWCALC_CATALOG_DIR) + "/og6-genus2-sl2.json";
    const CaseCatalog catalog = CaseCatalog::load_file(catalog_path);
    const Og6Pipeline og6(catalog);

    criterion(1, "Poincare polynomials of both moduli spaces from the fixed-locus catalog",
              [&] {
                  return expect(og6.p_M == poly(0, {1, 0, 1, 0, 1, 0, 17}), "P_t(M)") &
                         expect(og6.p_Mtilde == poly(0, {1, 0, 2, 0, 23, 0, 34}), "P_t(M~)");
              });

    criterion(2, "intersection Poincare polynomials, total and per character channel", [&] {
        return expect(og6.ip == poly(0, {1, 0, 1, 0, 17, 0, 17}), "IP") &
               expect(og6.ip_inv == poly(0, {1, 0, 1, 0, 2, 0, 2}), "IP invariant") &
               expect(og6.ip_var == poly(4, {15, 0, 15}), "IP variant");
    });

    criterion(3, "E-polynomial of the resolved character variety and the intersection "
                 "E-polynomial with its palindromy",
              [&] {
                  return expect(og6.e_Mtilde_B == poly(0, {1, 1, 17, 22, 17, 1, 1}),
                                "E(M~_B)") &
                         expect(og6.ie == poly(0, {1, 0, 17, 0, 17, 0, 1}), "IE(M_B)") &
                         expect(og6.ie.is_palindromic(3), "palindromy about q^3");
              });

    criterion(4, "weight-table solution and the invariant/variant E-polynomial channels", [&] {
        const FiltTable expected_weights =
            table(FiltKind::weight,
                  {{0, 0, 1}, {2, 4, 1}, {4, 4, 16}, {4, 8, 1}, {6, 8, 16}, {6, 12, 1}});
        return expect(og6.weight_full == expected_weights, "weight table") &
               expect(og6.weight_inv.level_sums().exponents_scaled(1, 2) ==
                          poly(0, {1, 0, 2, 0, 2, 0, 1}),
                      "IE invariant") &
               expect(og6.weight_var.level_sums().exponents_scaled(1, 2) ==
                          poly(2, {15, 0, 15}),
                      "IE variant");
    });

    criterion(5, "diamond assembly cell by cell, its two marginal sums, and relative hard "
                 "Lefschetz at middle perversity 3",
              [&] {
                  const FiltTable expected_diamond =
                      table(FiltKind::perverse,
                            {{0, 0, 1}, {2, 1, 1}, {2, 2, 1}, {4, 2, 16}, {4, 3, 6},
                             {4, 4, 1}, {6, 3, 16}, {6, 4, 16}, {6, 5, 1}, {6, 6, 1}});
                  return expect(og6.diamond == expected_diamond, "diamond cells") &
                         expect(og6.diamond.betti() == og6.p_Mtilde, "diagonal sums") &
                         expect(og6.diamond.level_sums() == og6.e_Mtilde_B, "row sums") &
                         expect(check_relative_hard_lefschetz(og6.diamond, 3).ok,
                                "relative hard Lefschetz");
              });

    criterion(6, "both hard-Lefschetz symmetries fail on the singular cohomology tables, "
                 "with the violating cells named",
              [&] {
                  const auto chl = check_curious_hard_lefschetz(
                      catalog.table("/negative_tables/weight_H_MB"), 6);
                  const auto rhl = check_relative_hard_lefschetz(
                      catalog.table("/negative_tables/perverse_H_M"), 3);
                  bool ok = expect(!chl.ok && chl.violations.size() == 1, "curious HL fails");
                  if (ok) {
                      const auto& v = chl.violations[0];
                      ok &= expect(v.d_left == 2 && v.k_left == 4 && v.dim_left == 1 &&
                                       v.d_right == 4 && v.k_right == 8 && v.dim_right == 17,
                                   "curious HL violating cells");
                  }
                  bool ok2 = expect(!rhl.ok && rhl.violations.size() == 1,
                                    "relative HL fails");
                  if (ok2) {
                      const auto& v = rhl.violations[0];
                      ok2 &= expect(v.d_left == 4 && v.k_left == 2 && v.dim_left == 0 &&
                                        v.d_right == 6 && v.k_right == 4 && v.dim_right == 16,
                                    "relative HL violating cells");
                  }
                  return ok && ok2;
              });

    criterion(7, "perverse/weight exchange on the intersection tables, total and per channel",
              [&] {
                  const FiltTable ih_independent = strip_resolution_strata(
                      og6.diamond, og6.sigma_perverse, og6.omega_perverse);
                  return expect(check_pw_exchange(ih_independent, og6.weight_full).ok,
                                "total channel") &
                         expect(check_pw_exchange(og6.ih_inv_perverse, og6.weight_inv).ok,
                                "invariant channel") &
                         expect(check_pw_exchange(
                                    og6.weight_var.rescaled_levels(1, 2, FiltKind::perverse),
                                    og6.weight_var)
                                    .ok,
                                "variant channel");
              });

    criterion(8, "genus 1: level exchange for n = 1..6, the n = 2 fibre polynomial, and "
                 "exact divisibility for n <= 8",
              [&] {
                  bool ok = true;
                  for (int n = 1; n <= 6; ++n)
                      ok &= expect(check_pw_genus1(n), "exchange at n=" + std::to_string(n));
                  ok &= expect(gs_poincare(2, SurfaceGroupModel::multiplicative_torus()) ==
                                   poly(0, {1, 0, 5}),
                               "P_t of the n=2 fibre");
                  for (int n = 1; n <= 8; ++n) {
                      try {
                          gs_poincare(n, SurfaceGroupModel::multiplicative_torus());
                          gs_poincare(n, SurfaceGroupModel::elliptic_times_line());
                      } catch (const InexactDivision&) {
                          ok &= expect(false, "divisibility at n=" + std::to_string(n));
                      }
                  }
                  return ok;
              });

    criterion(9, "intersection numbers of the nilpotent-cone components, the matrix, and "
                 "its rank",
              [&] {
                  const ChowPipeline chow(catalog);
                  const IntersectionMatrix expected_matrix =
                      assemble_intersection_matrix(-4, 16, -8, -64, 32, -16);
                  return expect(chow.n_self == -4, "[N~]^2") &
                         expect(chow.omega_self == -64, "[Omega~]^2") &
                         expect(chow.n_omega == 16, "[N~].[Omega~]") &
                         expect(chow.omega_j_k == 2, "[Omega~_j].[K]") &
                         expect(chow.n_k == -8, "[N~].[K]") &
                         expect(chow.khat_self == 16, "[K^]^2") &
                         expect(chow.k_self == -16, "[K]^2") &
                         expect(chow.matrix.m == expected_matrix.m, "matrix") &
                         expect(chow.matrix.rank == 1, "rank");
              });

    criterion(10, "SL-to-GL convolution of the point table passes the exchange", [&] {
        FiltTable sl_p(FiltKind::perverse), sl_w(FiltKind::weight);
        sl_p.add(0, 0, 1);
        sl_w.add(0, 0, 1);
        GradedVS aux_p, aux_w;
        for (int j = 0; j <= 4; ++j) {
            aux_p.add(j, j, binomial(4, j));
            aux_w.add(j, 2 * j, binomial(4, j));
        }
        const FiltTable gl_p = convolve_sl_to_gl(sl_p, aux_p);
        const FiltTable gl_w = convolve_sl_to_gl(sl_w, aux_w);
        bool ok = expect(check_pw_exchange(gl_p, gl_w).ok, "exchange");
        for (int j = 0; j <= 4; ++j)
            ok &= expect(gl_p.entry(j, j) == binomial(4, j) &&
                             gl_w.entry(j, 2 * j) == binomial(4, j),
                         "convolved entries at j=" + std::to_string(j));
        return ok;
    });

    criterion(11, "randomized property suites, 1000 cases each", [&] {
        std::mt19937 rng(987654321);
        std::uniform_int_distribution<int> exp_d(-4, 6);
        std::uniform_int_distribution<int> coeff_d(-20, 20);
        std::uniform_int_distribution<int> nterms_d(0, 5);
        auto random_poly = [&] {
            LaurentPoly p;
            const int n = nterms_d(rng);
            for (int i = 0; i < n; ++i) p.set_coeff(exp_d(rng), coeff_d(rng));
            return p;
        };

        bool ok = true;

        // Ring axioms and exact division.
        for (int i = 0; i < 1000 && ok; ++i) {
            const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
            ok &= (a * b == b * a) && ((a * b) * c == a * (b * c)) &&
                  (a * (b + c) == a * b + a * c);
        }
        ok = expect(ok, "ring axioms");
        bool div_ok = true;
        for (int i = 0; i < 1000 && div_ok; ++i) {
            const LaurentPoly a = random_poly();
            LaurentPoly b = random_poly();
            if (b.is_zero()) b = LaurentPoly::monomial(2, 5);
            div_ok &= poly_divide_exact(a * b, b) == a;
        }
        ok &= expect(div_ok, "division inverts multiplication");

        // Symmetric-power dimensions against explicit monomial enumeration.
        std::uniform_int_distribution<int> deg_d(0, 3), aux_d(0, 4), ncls_d(0, 4), pow_d(0, 5);
        bool sym_ok = true;
        for (int i = 0; i < 1000 && sym_ok; ++i) {
            GradedVS v;
            const int n = ncls_d(rng);
            for (int j = 0; j < n; ++j) v.add(deg_d(rng), aux_d(rng), 1);
            const int p = pow_d(rng);
            std::vector<std::pair<int, int>> basis;
            for (const auto& [bid, dim] : v.dims())
                for (Int m = 0; m < dim; ++m) basis.push_back(bid);
            GradedVS brute;
            std::function<void(std::size_t, int, int, int)> rec =
                [&](std::size_t start, int count, int d, int a) {
                    if (count == p) {
                        brute.add(d, a, 1);
                        return;
                    }
                    for (std::size_t bi = start; bi < basis.size(); ++bi)
                        rec(basis[bi].first % 2 == 1 ? bi + 1 : bi, count + 1,
                            d + basis[bi].first, a + basis[bi].second);
                };
            rec(0, 0, 0, 0);
            sym_ok &= v.sym_power(p) == brute;
        }
        ok &= expect(sym_ok, "symmetric-power dimension oracle");

        // Chern-twist involution and Whitney reconstruction.
        const RingSpec& ring = catalog.ring();
        auto random_d2 = [&] {
            return RingElement::generator(ring, "zeta") * Int(coeff_d(rng)) +
                   RingElement::generator(ring, "E") * Int(coeff_d(rng));
        };
        auto random_d4 = [&] {
            return random_d2() * random_d2() +
                   RingElement::generator(ring, "f") * Int(coeff_d(rng));
        };
        bool twist_ok = true, whitney_ok = true;
        std::uniform_int_distribution<int> rank_d(1, 2);
        for (int i = 0; i < 1000 && (twist_ok || whitney_ok); ++i) {
            ChernVector cv = ChernVector::trivial(ring, 3);
            cv.c[0] = random_d2();
            cv.c[1] = random_d4();
            cv.c[2] = random_d2() * random_d4();
            const RingElement l = random_d2();
            const ChernVector back = chern_twist(chern_twist(cv, l), -l);
            for (int j = 1; j <= 3; ++j) twist_ok &= back.at(j) == cv.at(j);

            ChernVector sub = ChernVector::trivial(ring, rank_d(rng));
            sub.c[0] = random_d2();
            if (sub.rank == 2) sub.c[1] = random_d4();
            ChernVector total = ChernVector::trivial(ring, sub.rank + rank_d(rng));
            total.c[0] = random_d2();
            if (total.rank >= 2) total.c[1] = random_d4();
            if (total.rank >= 3) total.c[2] = random_d2() * random_d4();
            if (total.rank >= 4) total.c[3] = RingElement::zero(ring);
            const ChernVector q = whitney_quotient(total, sub);
            const ChernVector re = whitney_product(sub, q);
            for (int j = 1; j <= q.rank; ++j) whitney_ok &= re.at(j) == total.at(j);
        }
        ok &= expect(twist_ok, "twist involution");
        ok &= expect(whitney_ok, "Whitney quotient reconstruction");

        // Character-split conservation.
        bool gamma_ok = true;
        std::uniform_int_distribution<int> order_d(1, 20), codim_d(0, 3);
        for (int i = 0; i < 1000 && gamma_ok; ++i) {
            std::vector<FixedComponent> comps;
            const int n = 1 + (i % 4);
            for (int j = 0; j < n; ++j) {
                FixedComponent c;
                c.name = "c";
                c.codim_attr = codim_d(rng);
                const int m = order_d(rng);
                c.poincare = LaurentPoly::monomial(2 * codim_d(rng), m);
                c.character = GammaCharacter::regular(m);
                comps.push_back(std::move(c));
            }
            const GammaSplit split = gamma_split(comps);
            gamma_ok &= split.invariant + split.variant == bb_poincare(comps);
        }
        ok &= expect(gamma_ok, "character-split conservation");

        // Symplectic completion closure under a -> 1 - a.
        bool sympl_ok = true;
        std::uniform_int_distribution<int> w_d(-5, 6), len_d(0, 6);
        for (int i = 0; i < 1000 && sympl_ok; ++i) {
            WeightVector lag;
            const int n = len_d(rng);
            for (int j = 0; j < n; ++j) lag.weights.push_back(w_d(rng));
            const WeightVector full = symplectic_completion(lag);
            WeightVector reflected;
            for (int a : full.weights) reflected.weights.push_back(1 - a);
            sympl_ok &= full == reflected;
        }
        ok &= expect(sympl_ok, "symplectic completion closure");

        return ok;
    });

    if (failures > 0) {
        std::cout << failures << " criterion/criteria FAILED\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
