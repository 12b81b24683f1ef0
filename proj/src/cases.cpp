#include "pwcalc/cases.hpp"

#include <fstream>
#include <functional>

#include "pwcalc/errors.hpp"
#include "pwcalc/kummer.hpp"

namespace pwcalc {

using nlohmann::json;

namespace {

// Collects one check record per named verification; expected values and
// provenance come from the catalog.
class CheckRunner {
public:
    CheckRunner(const CaseCatalog& catalog, Report& report, const std::string& filter)
        : catalog_(catalog), report_(report), filter_(filter) {}

    void add(const std::string& name, const json& inputs,
             const std::function<json()>& compute) {
        if (!filter_.empty() && name.find(filter_) == std::string::npos) return;
        CheckRecord rec;
        rec.name = name;
        rec.inputs_digest =
            fnv1a_digest(catalog_.name() + "\n" + name + "\n" + inputs.dump());
        const auto expected = catalog_.expected(name);
        rec.expected = expected.value;
        rec.provenance = expected.provenance;
        try {
            rec.computed = compute();
            rec.pass = rec.computed == rec.expected;
        } catch (const Error& e) {
            rec.computed = json{{"error", e.what()}};
            rec.pass = false;
        }
        report_.add(std::move(rec));
    }

private:
    const CaseCatalog& catalog_;
    Report& report_;
    std::string filter_;
};

} // namespace

// Strata tables concentrated on the top filtration level: H^d sits at level
// d on the perverse side and 2d on the weight side.
FiltTable top_level_table(const LaurentPoly& poincare, FiltKind kind) {
    FiltTable t(kind);
    const int step = kind == FiltKind::perverse ? 1 : 2;
    for (const auto& [d, dim] : poincare.coeffs()) {
        if (dim < 0) throw Error("top_level_table: negative dimension");
        t.add(d, step * d, dim);
    }
    return t;
}

// Everything concentrated on level zero (classes of points).
FiltTable level_zero_table(const LaurentPoly& poincare, FiltKind kind) {
    FiltTable t(kind);
    for (const auto& [d, dim] : poincare.coeffs()) {
        if (dim < 0) throw Error("level_zero_table: negative dimension");
        t.add(d, 0, dim);
    }
    return t;
}

namespace {

GradedVS picard_torus_aux(int rank, int shift_per_degree) {
    GradedVS v;
    for (int j = 0; j <= rank; ++j) v.add(j, shift_per_degree * j, binomial(rank, j));
    return v;
}

json json_of_weights(const WeightVector& w) {
    auto sorted = w.weights;
    std::sort(sorted.begin(), sorted.end());
    json out = json::array();
    for (int m : sorted) out.push_back(m);
    return out;
}

} // namespace

LinearConstraintSystem og6_weight_system(const LaurentPoly& ie, const LaurentPoly& ip) {
    LinearConstraintSystem sys;
    const int max_d = ip.is_zero() ? 0 : ip.max_exp();
    for (int d = 0; d <= max_d; ++d)
        for (int w = 0; w <= 2 * max_d; ++w) sys.unknowns.push_back({d, w});

    for (int d = 0; d <= max_d; ++d)
        for (int w = 0; w <= 2 * max_d; ++w) {
            const bool vanishes = w < d || w % 2 != 0 || w > 2 * d ||
                                  ip.coeff(d) == 0 || ie.coeff(w / 2) == 0;
            if (vanishes) sys.forced_zero.push_back({d, w});
        }

    for (int d = 0; d <= max_d; ++d) {
        LinearConstraintSystem::Equation eq;
        for (int w = 0; w <= 2 * max_d; ++w) eq.cells.push_back({d, w});
        eq.rhs = ip.coeff(d);
        eq.label = "degree sum d=" + std::to_string(d);
        sys.equations.push_back(std::move(eq));
    }
    for (int k = 0; k <= max_d; ++k) {
        LinearConstraintSystem::Equation eq;
        for (int d = 0; d <= max_d; ++d) eq.cells.push_back({d, 2 * k});
        eq.rhs = ie.coeff(k);
        eq.label = "level sum w=" + std::to_string(2 * k);
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

LinearConstraintSystem og6_variant_weight_system(const LaurentPoly& ip_var,
                                                 const FiltTable& full_solution) {
    LinearConstraintSystem sys;
    const int max_d = ip_var.is_zero() ? 0 : ip_var.max_exp();
    for (int d = 0; d <= max_d; ++d)
        for (int w = 0; w <= 2 * max_d; ++w) sys.unknowns.push_back({d, w});

    for (int d = 0; d <= max_d; ++d)
        for (int w = 0; w <= 2 * max_d; ++w) {
            const bool vanishes = w < d || w % 2 != 0 || w > 2 * d || ip_var.coeff(d) == 0 ||
                                  w == 2 * d ||  // the top-weight diagonal is invariant
                                  full_solution.entry(d, w) == 0;
            if (vanishes) sys.forced_zero.push_back({d, w});
        }

    for (int d = 0; d <= max_d; ++d) {
        LinearConstraintSystem::Equation eq;
        for (int w = 0; w <= 2 * max_d; ++w) eq.cells.push_back({d, w});
        eq.rhs = ip_var.coeff(d);
        eq.label = "variant degree sum d=" + std::to_string(d);
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

Og6Pipeline::Og6Pipeline(const CaseCatalog& cat)
        : fixed_M(cat.components("/fixed_loci/M")),
          fixed_Mtilde(cat.components("/fixed_loci/Mtilde")),
          sigma(component_from_json(cat.at("/strata/sigma"))),
          omega(component_from_json(cat.at("/strata/omega"))) {
    p_M = bb_poincare(fixed_M);
    p_Mtilde = bb_poincare(fixed_Mtilde);
    split_Mtilde = gamma_split(fixed_Mtilde);
    std::tie(sigma_inv, sigma_var) = sigma.character.split(sigma.poincare);
    std::tie(omega_inv, omega_var) = omega.character.split(omega.poincare);

    ip = ih_poincare_from_resolution({p_Mtilde, sigma.poincare, omega.poincare});
    ip_inv = ih_poincare_from_resolution({split_Mtilde.invariant, sigma_inv, omega_inv});
    ip_var = ih_poincare_from_resolution({split_Mtilde.variant, sigma_var, omega_var});

    e_MB = cat.poly("/betti_side/E_MB");
    e_SigmaB = cat.poly("/betti_side/E_SigmaB");
    e_OmegaB = cat.poly("/betti_side/E_OmegaB");
    e_P1 = cat.poly("/betti_side/E_P1");
    e_quadric3fold = cat.poly("/betti_side/E_exceptional_quadric");
    num_quadrics = cat.constant("/betti_side/num_exceptional_quadrics");

    const LaurentPoly one = LaurentPoly::constant(1);
    e_MB_smooth = e_stratified_sum({{e_MB, one}, {e_SigmaB, -one}});
    const LaurentPoly e_sigma_minus_omega =
        e_stratified_sum({{e_SigmaB, one}, {e_OmegaB, -one}});
    e_Mtilde_B = e_stratified_sum({{e_MB_smooth, one},
                                   {e_sigma_minus_omega, e_P1},
                                   {e_quadric3fold, LaurentPoly::constant(num_quadrics)}});
    ie = ie_from_resolution({e_Mtilde_B, e_SigmaB, e_OmegaB});

    weight_full = solve_weight_table(og6_weight_system(ie, ip));
    weight_var = solve_weight_table(og6_variant_weight_system(ip_var, weight_full));
    weight_inv = table_difference(weight_full, weight_var);

    ih_perverse = weight_full.rescaled_levels(1, 2, FiltKind::perverse);
    sigma_perverse = top_level_table(sigma.poincare, FiltKind::perverse);
    omega_perverse = level_zero_table(omega.poincare, FiltKind::perverse);
    diamond = assemble_resolution_diamond(ih_perverse, sigma_perverse, omega_perverse);

    sigma_weight = top_level_table(e_SigmaB, FiltKind::weight);
    omega_weight = level_zero_table(e_OmegaB, FiltKind::weight);
    weight_diamond = assemble_resolution_diamond(weight_full, sigma_weight, omega_weight);

    ih_inv_perverse = weight_inv.rescaled_levels(1, 2, FiltKind::perverse);
    sigma_inv_perverse = top_level_table(sigma_inv, FiltKind::perverse);
    omega_inv_perverse = level_zero_table(omega_inv, FiltKind::perverse);
    invariant_diamond = assemble_resolution_diamond(ih_inv_perverse, sigma_inv_perverse,
                                                    omega_inv_perverse);
}

ChowPipeline::ChowPipeline(const CaseCatalog& cat) : ring(cat.ring()) {
    const Int e_p3 = cat.constant("/constants/euler_P3");
    const Int e_quadric = cat.constant("/constants/euler_smooth_quadric_surface");
    const Int e_quartic = cat.constant("/constants/euler_smooth_quartic_surface");
    const Int quadric_nodes = cat.constant("/constants/nodes_quadric_pencil");
    const Int quartic_nodes = cat.constant("/constants/nodes_quartic_pencil");
    const int lagrangian_dim = cat.small_constant("/constants/lagrangian_dim");
    num_components = cat.constant("/constants/num_exceptional_quadrics");
    transverse_points = cat.constant("/constants/transverse_points");

    n_self = lagrangian_self_intersection(e_p3, lagrangian_dim);
    omega_j_self = lagrangian_self_intersection(e_quadric, lagrangian_dim);
    omega_self = num_components * omega_j_self;
    n_omega = transverse_points;
    omega_j_k = lefschetz_pencil_correction(e_quadric, quadric_nodes, lagrangian_dim);
    omega_k = num_components * omega_j_k;
    n_k = lefschetz_pencil_correction(e_quartic, quartic_nodes, lagrangian_dim);

    const RingElement base_c2 =
        RingElement::from_terms(ring, ring_terms_from_json(ring, cat.at("/chern/base_c2")));
    const RingElement rel_c1 = RingElement::from_terms(
        ring, ring_terms_from_json(ring, cat.at("/chern/relative_cotangent_c1")));
    const RingElement exceptional = RingElement::from_terms(
        ring, ring_terms_from_json(ring, cat.at("/chern/exceptional_divisor")));

    ChernVector base = ChernVector::trivial(ring, 2);
    base.c[1] = base_c2;
    base.validate();
    ChernVector relative = ChernVector::trivial(ring, 1);
    relative.c[0] = rel_c1;
    relative.validate();
    cotangent = whitney_product(base, relative);

    ChernVector padded = whitney_product(cotangent, ChernVector::trivial(ring, 1));
    ChernVector line = ChernVector::trivial(ring, 1);
    line.c[0] = -exceptional;
    normal_twisted = whitney_quotient(padded, line);
    normal = chern_twist(normal_twisted, -exceptional);
    khat_self = ring_degree(normal.at(3));

    const Int khat_dot_h2 = cat.constant("/constants/khat_dot_plucker_squared");
    const Int khat_dot_hl = cat.constant("/constants/khat_dot_plucker_times_hyperplane");
    per_center = Int(-2) * khat_dot_h2 + khat_dot_hl;
    k_self = blowup_selfintersection_correction(khat_self, per_center, num_components);

    matrix = assemble_intersection_matrix(n_self, n_omega, n_k, omega_self, omega_k, k_self);
}

namespace {

void run_og6(const CaseCatalog& cat, CheckRunner& run) {
    const Og6Pipeline p(cat);

    const json bb_inputs = cat.at("/fixed_loci");
    run.add("bb.poincare.M", cat.at("/fixed_loci/M"), [&] { return json_of(p.p_M); });
    run.add("bb.poincare.Mtilde", cat.at("/fixed_loci/Mtilde"),
            [&] { return json_of(p.p_Mtilde); });

    // Symplectic completion of the Lagrangian weights reproduces the shipped
    // component weights.
    for (const std::string tag : {"N", "S+", "Theta"}) {
        run.add("bb.completion." + tag, cat.at("/lagrangian_weights"), [&, tag] {
            const WeightVector lag = cat.weight_vector("/lagrangian_weights/" + tag);
            return json_of_weights(symplectic_completion(lag));
        });
    }

    run.add("bb.gamma.Mtilde.invariant", bb_inputs,
            [&] { return json_of(p.split_Mtilde.invariant); });
    run.add("bb.gamma.Mtilde.variant", bb_inputs,
            [&] { return json_of(p.split_Mtilde.variant); });

    run.add("bb.invariant_exterior.sigma_b", json{{"rank", 4}}, [&] {
        const GradedVS inv = invariant_exterior(4, {-1, -1, -1, -1});
        LaurentPoly e;  // E-polynomial in q = (weight)/2
        for (const auto& [bidegree, dim] : inv.dims())
            e.set_coeff(bidegree.second / 2, e.coeff(bidegree.second / 2) + dim);
        return json_of(e);
    });

    const json strata_inputs = cat.at("/strata");
    run.add("decomp.ip.total", strata_inputs, [&] { return json_of(p.ip); });
    run.add("decomp.ip.invariant", strata_inputs, [&] { return json_of(p.ip_inv); });
    run.add("decomp.ip.variant", strata_inputs, [&] { return json_of(p.ip_var); });

    const json betti_inputs = cat.at("/betti_side");
    run.add("decomp.e.MB_smooth", betti_inputs, [&] { return json_of(p.e_MB_smooth); });
    run.add("decomp.e.Mtilde_B", betti_inputs, [&] { return json_of(p.e_Mtilde_B); });
    run.add("decomp.ie.total", betti_inputs, [&] { return json_of(p.ie); });
    run.add("decomp.ie.palindromic", betti_inputs,
            [&] { return json(p.ie.is_palindromic(3)); });

    run.add("decomp.weight_table.solution", betti_inputs,
            [&] { return json_of(p.weight_full); });
    run.add("decomp.weight_table.variant", betti_inputs,
            [&] { return json_of(p.weight_var); });
    run.add("decomp.ie.invariant", betti_inputs,
            [&] { return json_of(p.weight_inv.level_sums().exponents_scaled(1, 2)); });
    run.add("decomp.ie.variant", betti_inputs, [&] {
        const LaurentPoly ie_var = p.weight_var.level_sums().exponents_scaled(1, 2);
        const LaurentPoly via_difference = e_stratified_sum(
            {{p.ie, LaurentPoly::constant(1)}, {ie_var, -LaurentPoly::constant(1)}});
        if (via_difference != p.weight_inv.level_sums().exponents_scaled(1, 2))
            throw Error("variant/invariant channels do not add up to the total");
        return json_of(ie_var);
    });

    run.add("decomp.diamond.assembled", strata_inputs, [&] { return json_of(p.diamond); });
    run.add("decomp.diamond.betti", strata_inputs,
            [&] { return json_of(table_sums(p.diamond).betti); });
    run.add("decomp.diamond.row_sums", strata_inputs,
            [&] { return json_of(table_sums(p.diamond).level_sums); });
    run.add("decomp.diamond.rhl", strata_inputs,
            [&] { return json_of(check_relative_hard_lefschetz(p.diamond, 3)); });
    run.add("decomp.diamond.weight_side", betti_inputs, [&] {
        return json_of(p.weight_diamond.level_sums().exponents_scaled(1, 2));
    });

    // The perverse side recovered independently: strip the strata off the
    // catalog diamond and compare levels against the solved weight table.
    run.add("decomp.pw.ih", cat.at("/expected/decomp.diamond.assembled/value"), [&] {
        const FiltTable reference =
            table_from_json(cat.at("/expected/decomp.diamond.assembled/value"));
        const FiltTable ih_independent =
            strip_resolution_strata(reference, p.sigma_perverse, p.omega_perverse);
        return json_of(check_pw_exchange(ih_independent, p.weight_full));
    });
    run.add("decomp.pw.invariant", betti_inputs, [&] {
        CheckResult res = check_pw_exchange(p.ih_inv_perverse, p.weight_inv);
        if (p.ih_inv_perverse.betti() != p.ip_inv)
            throw Error("invariant perverse table does not match the invariant "
                        "intersection Poincare polynomial");
        return json_of(res);
    });
    run.add("decomp.pw.variant", betti_inputs, [&] {
        const FiltTable ih_var = p.weight_var.rescaled_levels(1, 2, FiltKind::perverse);
        CheckResult res = check_pw_exchange(ih_var, p.weight_var);
        if (ih_var.betti() != p.ip_var)
            throw Error("variant perverse table does not match the variant "
                        "intersection Poincare polynomial");
        return json_of(res);
    });

    run.add("negative.chl.h_mb", cat.at("/negative_tables/weight_H_MB"), [&] {
        const FiltTable t = cat.table("/negative_tables/weight_H_MB");
        return json_of(check_curious_hard_lefschetz(t, 6));
    });
    run.add("negative.rhl.h_m", cat.at("/negative_tables/perverse_H_M"), [&] {
        const FiltTable t = cat.table("/negative_tables/perverse_H_M");
        return json_of(check_relative_hard_lefschetz(t, 3));
    });

    const ChowPipeline chow(cat);
    const json chow_inputs = cat.at("/constants");
    run.add("chow.n_self", chow_inputs, [&] { return json_of(chow.n_self); });
    run.add("chow.omega_self", chow_inputs, [&] { return json_of(chow.omega_self); });
    run.add("chow.n_omega", chow_inputs, [&] { return json_of(chow.n_omega); });
    run.add("chow.omega_j_k", chow_inputs, [&] { return json_of(chow.omega_j_k); });
    run.add("chow.n_k", chow_inputs, [&] { return json_of(chow.n_k); });

    run.add("chow.ring.relations", cat.at("/ring"), [&] {
        const RingElement zeta = RingElement::generator(chow.ring, "zeta");
        const RingElement e = RingElement::generator(chow.ring, "E");
        const RingElement f = RingElement::generator(chow.ring, "f");
        json out;
        out["E_squared_is_minus_32f"] = (e * e == f * Int(-32));
        out["E_cubed_is_zero"] = (e * e * e).is_zero();
        out["section_meets_fibre_once"] = json_of(ring_degree(zeta * f));
        out["fibre_misses_exceptional"] = json_of(ring_degree(f * e));
        return out;
    });
    run.add("chow.khat_self", cat.at("/chern"), [&] { return json_of(chow.khat_self); });
    run.add("chow.k_self", chow_inputs, [&] { return json_of(chow.k_self); });
    run.add("chow.matrix", chow_inputs, [&] { return json_of(chow.matrix); });
    run.add("chow.rank", chow_inputs, [&] { return json(chow.matrix.rank); });

    // The middle-degree bound: the part of H^6 of the resolution with level
    // <= middle cannot exceed the rank of the intersection form, and the
    // intersection-cohomology part must be empty there.
    run.add("decomp.rank_bound", chow_inputs, [&] {
        Int p3_h6_invariant = 0;
        Int p3_ih6_invariant = 0;
        for (int k = 0; k <= 3; ++k) {
            p3_h6_invariant += p.invariant_diamond.entry(6, k);
            p3_ih6_invariant += p.ih_inv_perverse.entry(6, k);
        }
        return json{{"p3_h6_invariant", json_of(p3_h6_invariant)},
                    {"p3_ih6_invariant", json_of(p3_ih6_invariant)},
                    {"bounded_by_rank", p3_h6_invariant <= Int(chow.matrix.rank)}};
    });

    const int aux_rank = cat.small_constant("/slgl/aux_rank");
    run.add("slgl.exchange", cat.at("/slgl"), [&] {
        FiltTable sl_perverse(FiltKind::perverse), sl_weight(FiltKind::weight);
        sl_perverse.add(0, 0, 1);
        sl_weight.add(0, 0, 1);
        const FiltTable gl_perverse =
            convolve_sl_to_gl(sl_perverse, picard_torus_aux(aux_rank, 1));
        const FiltTable gl_weight = convolve_sl_to_gl(sl_weight, picard_torus_aux(aux_rank, 2));
        return json{{"perverse", json_of(gl_perverse)},
                    {"weight", json_of(gl_weight)},
                    {"exchange", json_of(check_pw_exchange(gl_perverse, gl_weight))}};
    });
}

void run_genus1(const CaseCatalog& cat, CheckRunner& run) {
    const int pw_max_n = cat.small_constant("/pw_max_n");
    const int div_max_n = cat.small_constant("/divisibility_max_n");

    for (int n = 1; n <= pw_max_n; ++n)
        run.add("pw.n" + std::to_string(n), json{{"n", n}},
                [n] { return json(check_pw_genus1(n)); });

    run.add("poincare.n2", json{{"n", 2}}, [] {
        return json_of(gs_poincare(2, SurfaceGroupModel::multiplicative_torus()));
    });

    run.add("divisibility", json{{"max_n", div_max_n}}, [div_max_n] {
        for (int n = 1; n <= div_max_n; ++n) {
            gs_poincare(n, SurfaceGroupModel::multiplicative_torus());
            gs_poincare(n, SurfaceGroupModel::elliptic_times_line());
        }
        return json(true);  // no InexactDivision raised
    });

    run.add("euler.consistency", json{{"max_n", pw_max_n}}, [pw_max_n] {
        for (int n = 1; n <= pw_max_n; ++n) {
            const Int a =
                gs_poincare(n, SurfaceGroupModel::multiplicative_torus()).evaluate(-1);
            const Int b =
                gs_poincare(n, SurfaceGroupModel::elliptic_times_line()).evaluate(-1);
            if (a != b) return json(false);
        }
        return json(true);
    });

    run.add("partitions.counts", json{{"max_n", 6}}, [] {
        json counts = json::array();
        for (int n = 1; n <= 6; ++n) counts.push_back(partitions(n).size());
        return counts;
    });
}

} // namespace

Report run_case(const CaseCatalog& catalog, const std::string& check_filter) {
    Report report;
    report.case_name = catalog.name();
    CheckRunner runner(catalog, report, check_filter);
    if (catalog.name() == "og6-genus2-sl2")
        run_og6(catalog, runner);
    else if (catalog.name() == "genus1")
        run_genus1(catalog, runner);
    else
        throw UnknownCase("no runner registered for case '" + catalog.name() + "'");
    return report;
}

Report run_case_from_dir(const std::string& catalog_dir, const std::string& case_name,
                         const std::string& check_filter) {
    const std::string path = catalog_dir + "/" + case_name + ".json";
    std::ifstream probe(path);
    if (!probe) throw UnknownCase("no catalog file for case '" + case_name + "' at " + path);
    return run_case(CaseCatalog::load_file(path), check_filter);
}

FiltTable og6_assembled_diamond(const CaseCatalog& catalog) {
    return Og6Pipeline(catalog).diamond;
}

} // namespace pwcalc
