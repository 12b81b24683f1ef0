#include "pwcalc/report.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>

#include "pwcalc/errors.hpp"

namespace pwcalc {

using nlohmann::json;

json json_of(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("expected an integer, got " + j.dump());
}

json json_of(const LaurentPoly& p) {
    json coeffs = json::array();
    int lowest = 0;
    if (!p.is_zero()) {
        lowest = p.min_exp();
        for (int e = lowest; e <= p.max_exp(); ++e) coeffs.push_back(json_of(p.coeff(e)));
    }
    return json{{"lowest", lowest}, {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lowest") || !j.contains("coeffs"))
        throw Error("expected a polynomial {lowest, coeffs}, got " + j.dump());
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
    return LaurentPoly::from_coeffs(j.at("lowest").get<int>(), coeffs);
}

json json_of(const FiltTable& t) {
    json records = json::array();
    for (const auto& r : t.records()) records.push_back(json::array({r.d, r.k, json_of(r.dim)}));
    return json{{"kind", to_string(t.kind())}, {"records", records}};
}

FiltTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("records"))
        throw Error("expected a table {kind, records}, got " + j.dump());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "perverse" && kind != "weight")
        throw Error("unknown table kind '" + kind + "'");
    std::vector<FiltTable::Record> records;
    for (const auto& r : j.at("records")) {
        if (!r.is_array() || r.size() != 3) throw Error("table record must be [d, k, dim]");
        records.push_back({r[0].get<int>(), r[1].get<int>(), int_from_json(r[2])});
    }
    return FiltTable::from_records(kind == "perverse" ? FiltKind::perverse : FiltKind::weight,
                                   records);
}

json json_of(const CheckResult& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json::array({v.d_left, v.k_left, json_of(v.dim_left), v.d_right,
                                          v.k_right, json_of(v.dim_right)}));
    return json{{"ok", r.ok}, {"violations", violations}};
}

json json_of(const IntersectionMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(json_of(m.m[i][j]));
        rows.push_back(row);
    }
    return json{{"matrix", rows}, {"rank", m.rank}};
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

void Report::add(CheckRecord record) {
    auto pos = std::lower_bound(checks.begin(), checks.end(), record,
                                [](const CheckRecord& a, const CheckRecord& b) {
                                    return a.name < b.name;
                                });
    checks.insert(pos, std::move(record));
}

int Report::passed() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; }));
}

json Report::to_json() const {
    json out;
    out["case"] = case_name;
    json checks_json = json::array();
    for (const auto& c : checks)
        checks_json.push_back(json{{"name", c.name},
                                   {"inputs_digest", c.inputs_digest},
                                   {"computed", c.computed},
                                   {"expected", c.expected},
                                   {"provenance", c.provenance},
                                   {"pass", c.pass}});
    out["checks"] = checks_json;
    out["summary"] = json{{"total", total()}, {"passed", passed()}, {"failed", failed()}};
    return out;
}

Report Report::from_json(const json& j) {
    Report r;
    r.case_name = j.at("case").get<std::string>();
    for (const auto& c : j.at("checks")) {
        CheckRecord rec;
        rec.name = c.at("name").get<std::string>();
        rec.inputs_digest = c.at("inputs_digest").get<std::string>();
        rec.computed = c.at("computed");
        rec.expected = c.at("expected");
        rec.provenance = c.at("provenance").get<std::string>();
        rec.pass = c.at("pass").get<bool>();
        r.checks.push_back(std::move(rec));
    }
    return r;
}

bool Report::operator==(const Report& rhs) const {
    return to_json() == rhs.to_json();
}

namespace {

bool looks_like_table(const json& j) {
    return j.is_object() && j.contains("kind") && j.contains("records");
}

std::string render_value_markdown(const json& value) {
    if (looks_like_table(value)) return "\n" + render_diamond_markdown(table_from_json(value));
    if (value.is_object() && value.contains("lowest") && value.contains("coeffs"))
        return "`" + poly_from_json(value).to_string() + "`";
    return "`" + value.dump() + "`";
}

} // namespace

std::string Report::to_markdown() const {
    std::ostringstream os;
    os << "# Case " << case_name << "\n\n";
    for (const auto& c : checks) {
        os << "## " << c.name << " - " << (c.pass ? "PASS" : "FAIL") << "\n\n";
        os << "- provenance: " << c.provenance << "\n";
        os << "- inputs digest: `" << c.inputs_digest << "`\n";
        os << "- computed: " << render_value_markdown(c.computed) << "\n";
        if (!c.pass) os << "- expected: " << render_value_markdown(c.expected) << "\n";
        os << "\n";
    }
    os << "Summary: " << passed() << "/" << total() << " checks passed";
    if (failed() > 0) os << ", " << failed() << " FAILED";
    os << ".\n";
    return os.str();
}

std::string emit(const Report& report, ReportFormat format) {
    if (format == ReportFormat::json) return report.to_json().dump(2) + "\n";
    return report.to_markdown();
}

std::string render_diamond_markdown(const FiltTable& t) {
    if (t.empty()) return "(empty table)\n";
    int kmin = 0, kmax = 0, omin = 0, omax = 0;
    bool first = true;
    for (const auto& [cell, dim] : t.entries()) {
        const int k = cell.second;
        const int offset = cell.first - cell.second;
        if (first) {
            kmin = kmax = k;
            omin = omax = offset;
            first = false;
        } else {
            kmin = std::min(kmin, k);
            kmax = std::max(kmax, k);
            omin = std::min(omin, offset);
            omax = std::max(omax, offset);
        }
    }
    std::ostringstream os;
    const std::string level = t.kind() == FiltKind::perverse ? "p" : "w";
    os << "| " << level << " \\ d-" << level << " |";
    for (int o = omin; o <= omax; ++o) os << " " << o << " |";
    os << "\n|---|";
    for (int o = omin; o <= omax; ++o) os << "---|";
    os << "\n";
    for (int k = kmax; k >= kmin; --k) {
        os << "| " << k << " |";
        for (int o = omin; o <= omax; ++o) {
            const Int dim = t.entry(k + o, k);
            os << " " << (dim == 0 ? std::string() : dim.str()) << " |";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace pwcalc
