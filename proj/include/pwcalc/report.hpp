#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pwcalc/bigint.hpp"
#include "pwcalc/intersection.hpp"
#include "pwcalc/laurent.hpp"
#include "pwcalc/tables.hpp"

namespace pwcalc {

// Canonical JSON forms used for exact computed-vs-expected comparison.
// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; parsing accepts both.
nlohmann::json json_of(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json json_of(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json json_of(const FiltTable& t);
FiltTable table_from_json(const nlohmann::json& j);

nlohmann::json json_of(const CheckResult& r);
nlohmann::json json_of(const IntersectionMatrix& m);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_digest(const std::string& data);

struct CheckRecord {
    std::string name;
    std::string inputs_digest;
    nlohmann::json computed;
    nlohmann::json expected;
    std::string provenance;
    bool pass = false;
};

// Deterministic per-case verification report; checks are kept sorted by name
// and a verdict passes iff computed equals expected exactly.
struct Report {
    std::string case_name;
    std::vector<CheckRecord> checks;

    void add(CheckRecord record);
    int total() const { return static_cast<int>(checks.size()); }
    int passed() const;
    int failed() const { return total() - passed(); }
    bool all_pass() const { return failed() == 0; }

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);

    std::string to_markdown() const;

    bool operator==(const Report& rhs) const;
};

enum class ReportFormat { json, markdown };

std::string emit(const Report& report, ReportFormat format);

// Markdown grid in the diamond layout: rows are the filtration level
// descending, columns the offset d - k.
std::string render_diamond_markdown(const FiltTable& t);

} // namespace pwcalc
