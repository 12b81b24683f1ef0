#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "pwcalc/fixed_locus.hpp"
#include "pwcalc/intersection.hpp"
#include "pwcalc/laurent.hpp"
#include "pwcalc/tables.hpp"

namespace pwcalc {

// One case worth of input data, transcribed into a human-readable JSON file:
// fixed-locus components, strata polynomials, E-polynomials, a ring
// presentation, integer constants, negative-test tables, and the expected
// outputs for regression, each with a provenance string.
//
// All component-level invariants are validated at load; violations raise
// CatalogValidationError naming the failing invariant.
class CaseCatalog {
public:
    static CaseCatalog load_file(const std::string& path);
    static CaseCatalog parse(const nlohmann::json& raw);

    const std::string& name() const { return name_; }
    const nlohmann::json& raw() const { return raw_; }

    bool has(const std::string& pointer) const;
    const nlohmann::json& at(const std::string& pointer) const;

    // Typed accessors over the raw document.
    LaurentPoly poly(const std::string& pointer) const;
    Int constant(const std::string& pointer) const;
    int small_constant(const std::string& pointer) const;
    FiltTable table(const std::string& pointer) const;
    std::vector<FixedComponent> components(const std::string& pointer) const;
    WeightVector weight_vector(const std::string& pointer) const;

    // Lazily built from /ring; owned by the catalog so elements stay valid.
    const RingSpec& ring() const;

    struct ExpectedValue {
        nlohmann::json value;
        std::string provenance;
    };
    // Expected output for a named check; every entry carries provenance.
    ExpectedValue expected(const std::string& check_name) const;
    bool has_expected(const std::string& check_name) const;

private:
    std::string name_;
    nlohmann::json raw_;
    mutable std::unique_ptr<RingSpec> ring_;
};

FixedComponent component_from_json(const nlohmann::json& j);
GammaCharacter character_from_json(const nlohmann::json& j);
RingSpec ring_from_json(const nlohmann::json& j);
RingSpec::Element ring_terms_from_json(const RingSpec& ring, const nlohmann::json& j);

} // namespace pwcalc
