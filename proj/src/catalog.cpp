#include "pwcalc/catalog.hpp"

#include <fstream>

#include "pwcalc/errors.hpp"
#include "pwcalc/report.hpp"

namespace pwcalc {

using nlohmann::json;

namespace {

const json& resolve(const json& raw, const std::string& pointer) {
    try {
        return raw.at(json::json_pointer(pointer));
    } catch (const json::exception&) {
        throw CatalogValidationError("missing catalog entry " + pointer);
    }
}

} // namespace

CaseCatalog CaseCatalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogValidationError("cannot open catalog file " + path);
    json raw;
    try {
        in >> raw;
    } catch (const json::exception& e) {
        throw CatalogValidationError("catalog file " + path + " is not valid JSON: " + e.what());
    }
    return parse(raw);
}

CaseCatalog CaseCatalog::parse(const json& raw) {
    CaseCatalog c;
    c.raw_ = raw;
    if (!raw.is_object() || !raw.contains("name"))
        throw CatalogValidationError("catalog case needs a name");
    c.name_ = raw.at("name").get<std::string>();

    // Validate every component list shipped with the case.
    if (raw.contains("fixed_loci"))
        for (const auto& [space, list] : raw.at("fixed_loci").items())
            for (const auto& item : list) component_from_json(item).validate();
    if (raw.contains("strata"))
        for (const auto& [name, item] : raw.at("strata").items())
            component_from_json(item).validate();
    if (raw.contains("ring")) c.ring();  // construction validates the presentation
    if (raw.contains("expected"))
        for (const auto& [name, item] : raw.at("expected").items())
            if (!item.contains("provenance"))
                throw CatalogValidationError("expected value '" + name +
                                             "' carries no provenance");
    return c;
}

bool CaseCatalog::has(const std::string& pointer) const {
    return raw_.contains(json::json_pointer(pointer));
}

const json& CaseCatalog::at(const std::string& pointer) const {
    return resolve(raw_, pointer);
}

LaurentPoly CaseCatalog::poly(const std::string& pointer) const {
    return poly_from_json(at(pointer));
}

Int CaseCatalog::constant(const std::string& pointer) const {
    return int_from_json(at(pointer));
}

int CaseCatalog::small_constant(const std::string& pointer) const {
    return at(pointer).get<int>();
}

FiltTable CaseCatalog::table(const std::string& pointer) const {
    return table_from_json(at(pointer));
}

std::vector<FixedComponent> CaseCatalog::components(const std::string& pointer) const {
    std::vector<FixedComponent> out;
    for (const auto& item : at(pointer)) out.push_back(component_from_json(item));
    return out;
}

WeightVector CaseCatalog::weight_vector(const std::string& pointer) const {
    WeightVector w;
    for (const auto& v : at(pointer)) w.weights.push_back(v.get<int>());
    return w;
}

const RingSpec& CaseCatalog::ring() const {
    if (!ring_) {
        try {
            ring_ = std::make_unique<RingSpec>(ring_from_json(resolve(raw_, "/ring")));
        } catch (const Error& e) {
            throw CatalogValidationError(std::string("ring presentation: ") + e.what());
        }
    }
    return *ring_;
}

CaseCatalog::ExpectedValue CaseCatalog::expected(const std::string& check_name) const {
    const json& j = resolve(raw_, "/expected/" + check_name);
    ExpectedValue out;
    out.provenance = j.at("provenance").get<std::string>();
    out.value = j.at("value");
    return out;
}

bool CaseCatalog::has_expected(const std::string& check_name) const {
    return raw_.contains("expected") && raw_.at("expected").contains(check_name);
}

GammaCharacter character_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "trivial") return GammaCharacter::trivial(int_from_json(j.at("dim")));
    if (kind == "regular") return GammaCharacter::regular(int_from_json(j.at("order")));
    if (kind == "custom")
        return GammaCharacter::custom(poly_from_json(j.at("invariant")),
                                      poly_from_json(j.at("variant")));
    throw CatalogValidationError("unknown character kind '" + kind + "'");
}

FixedComponent component_from_json(const json& j) {
    FixedComponent c;
    c.name = j.at("name").get<std::string>();
    c.poincare = poly_from_json(j.at("poincare"));
    c.codim_attr = j.at("codim").get<int>();
    if (j.contains("weights")) {
        WeightVector w;
        for (const auto& v : j.at("weights")) w.weights.push_back(v.get<int>());
        c.weights = std::move(w);
    }
    c.character = character_from_json(j.at("character"));
    return c;
}

RingSpec ring_from_json(const json& j) {
    std::vector<RingSpec::Generator> generators;
    for (const auto& g : j.at("generators"))
        generators.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});

    auto monomial_of = [&](const json& m) {
        RingSpec::Monomial mono(generators.size(), 0);
        for (const auto& [name, exp] : m.items()) {
            bool found = false;
            for (std::size_t i = 0; i < generators.size(); ++i)
                if (generators[i].name == name) {
                    mono[i] = exp.get<int>();
                    found = true;
                }
            if (!found) throw CatalogValidationError("unknown generator '" + name + "'");
        }
        return mono;
    };

    std::vector<RingSpec::Relation> relations;
    for (const auto& r : j.at("relations")) {
        RingSpec::Relation rel;
        rel.lhs = monomial_of(r.at("lhs"));
        for (const auto& term : r.at("rhs"))
            rel.rhs[monomial_of(term.at("monomial"))] += int_from_json(term.at("coeff"));
        relations.push_back(std::move(rel));
    }

    std::map<RingSpec::Monomial, Int> degree_map;
    for (const auto& d : j.at("degree_map"))
        degree_map[monomial_of(d.at("monomial"))] = int_from_json(d.at("value"));

    return RingSpec(std::move(generators), std::move(relations), j.at("top_degree").get<int>(),
                    std::move(degree_map));
}

RingSpec::Element ring_terms_from_json(const RingSpec& ring, const json& j) {
    RingSpec::Element terms;
    for (const auto& term : j) {
        RingSpec::Monomial mono(ring.generators().size(), 0);
        for (const auto& [name, exp] : term.at("monomial").items())
            mono[ring.generator_index(name)] = exp.get<int>();
        terms[mono] += int_from_json(term.at("coeff"));
    }
    return terms;
}

} // namespace pwcalc
