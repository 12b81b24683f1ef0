#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pwcalc/cases.hpp"
#include "pwcalc/catalog.hpp"
#include "pwcalc/errors.hpp"
#include "pwcalc/kummer.hpp"
#include "pwcalc/report.hpp"

namespace {

constexpr int kExitAllPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsageOrCatalog = 2;

pwcalc::ReportFormat parse_format(const std::string& format) {
    return format == "json" ? pwcalc::ReportFormat::json : pwcalc::ReportFormat::markdown;
}

int emit_report(const pwcalc::Report& report, pwcalc::ReportFormat format) {
    std::cout << pwcalc::emit(report, format);
    return report.all_pass() ? kExitAllPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator and verification suite for perverse/weight "
                 "filtration tables of rank-2 Higgs-bundle and character-variety "
                 "moduli spaces"};
    app.require_subcommand(1);

    std::string format = "markdown";
    std::string catalog_dir = "catalog";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    app.add_option("--catalog", catalog_dir, "Directory with the case catalog files")
        ->capture_default_str();

    auto* case_cmd = app.add_subcommand("case", "Run the named verifications of a case");
    std::string case_name;
    std::string filter;
    case_cmd->add_option("name", case_name, "Case name, e.g. og6-genus2-sl2 or genus1")
        ->required();
    case_cmd->add_option("--filter", filter,
                         "Keep only checks whose name contains this substring");

    auto* kummer_cmd =
        app.add_subcommand("kummer", "Genus-1 Kummer-like fibre computations");
    int kummer_n = 1;
    bool kummer_check_pw = false;
    bool kummer_poincare = false;
    kummer_cmd->add_option("--n", kummer_n, "Number of points")->required();
    kummer_cmd->add_flag("--check-pw", kummer_check_pw,
                         "Verify the perverse/weight level exchange at this n");
    kummer_cmd->add_flag("--poincare", kummer_poincare,
                         "Print the Poincare polynomial of the fibre");

    auto* chow_cmd = app.add_subcommand("chow", "Intersection numbers of the nilpotent cone");
    std::string chow_case = "og6";
    chow_cmd->add_option("--case", chow_case, "Case selector")->capture_default_str();

    auto* diamond_cmd = app.add_subcommand("diamond", "The perverse diamond of the resolution");
    bool render = false;
    diamond_cmd->add_flag("--render", render, "Render the assembled diamond");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message or the help text
        return code == 0 ? kExitAllPass : kExitUsageOrCatalog;
    }
    const pwcalc::ReportFormat out_format = parse_format(format);

    try {
        if (case_cmd->parsed())
            return emit_report(pwcalc::run_case_from_dir(catalog_dir, case_name, filter),
                               out_format);

        if (kummer_cmd->parsed()) {
            if (kummer_n < 1) {
                std::cerr << "kummer: --n must be positive\n";
                return kExitUsageOrCatalog;
            }
            bool ok = true;
            nlohmann::json out;
            out["n"] = kummer_n;
            if (kummer_poincare || !kummer_check_pw) {
                const auto p =
                    pwcalc::gs_poincare(kummer_n, pwcalc::SurfaceGroupModel::multiplicative_torus());
                out["poincare"] = pwcalc::json_of(p);
                if (out_format == pwcalc::ReportFormat::markdown)
                    std::cout << "P_t(K^[" << kummer_n << "]) = " << p.to_string() << "\n";
            }
            if (kummer_check_pw) {
                ok = pwcalc::check_pw_genus1(kummer_n);
                out["pw_exchange"] = ok;
                if (out_format == pwcalc::ReportFormat::markdown)
                    std::cout << "perverse/weight exchange at n = " << kummer_n << ": "
                              << (ok ? "PASS" : "FAIL") << "\n";
            }
            if (out_format == pwcalc::ReportFormat::json) std::cout << out.dump(2) << "\n";
            return ok ? kExitAllPass : kExitCheckFailed;
        }

        if (chow_cmd->parsed()) {
            if (chow_case != "og6" && chow_case != "og6-genus2-sl2") {
                std::cerr << "chow: unknown case '" << chow_case << "'\n";
                return kExitUsageOrCatalog;
            }
            return emit_report(
                pwcalc::run_case_from_dir(catalog_dir, "og6-genus2-sl2", "chow."), out_format);
        }

        if (diamond_cmd->parsed()) {
            const auto catalog =
                pwcalc::CaseCatalog::load_file(catalog_dir + "/og6-genus2-sl2.json");
            const pwcalc::FiltTable diamond = pwcalc::og6_assembled_diamond(catalog);
            if (!render || out_format == pwcalc::ReportFormat::json)
                std::cout << pwcalc::json_of(diamond).dump(2) << "\n";
            else
                std::cout << pwcalc::render_diamond_markdown(diamond);
            return kExitAllPass;
        }
    } catch (const pwcalc::UnknownCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageOrCatalog;
    } catch (const pwcalc::CatalogValidationError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return kExitUsageOrCatalog;
    } catch (const pwcalc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsageOrCatalog;
}
