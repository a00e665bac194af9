#include "linclo/json_io.hpp"

namespace linclo {

using nlohmann::json;

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (const auto& b : s.basis()) basis.push_back(b);
    return json{{"ambient", s.ambient()}, {"basis", basis}};
}

Subspace subspace_from_json(const json& j, const FieldPtr& field) {
    int ambient = j.at("ambient").get<int>();
    std::vector<Vec> rows;
    for (const auto& r : j.at("basis")) rows.push_back(r.get<Vec>());
    for (const auto& r : rows)
        for (int v : r)
            if (v < 0 || v >= field->order())
                throw DomainError("BadEncoding", "basis entry out of field range");
    return Subspace::span(field, ambient, rows);
}

json fn_to_json(const FnTable& f) {
    return json{{"p", f.p_field->order()},
                {"q", f.q_field->order()},
                {"arity", f.arity},
                {"values", f.values}};
}

FnTable fn_from_json(const json& j) {
    FnTable f;
    f.p_field = Field::make(j.at("p").get<int>());
    f.q_field = Field::make(j.at("q").get<int>());
    f.arity = j.at("arity").get<int>();
    f.values = j.at("values").get<std::vector<int>>();
    size_t expected = 1;
    for (int i = 0; i < f.arity; ++i) expected *= static_cast<size_t>(f.q_field->order());
    if (f.values.size() != expected)
        throw DomainError("BadEncoding",
                          "values length " + std::to_string(f.values.size()) +
                              " does not match q^arity = " + std::to_string(expected));
    for (int v : f.values)
        if (v < 0 || v >= f.p_field->order())
            throw DomainError("BadEncoding", "table value out of field range");
    return f;
}

json clonoid_id_to_json(const Clonoid& c) {
    return json{{"constants", c.constants}, {"exponents", c.exponents}};
}

const Clonoid& clonoid_by_id(const std::vector<Clonoid>& all, const json& id) {
    bool constants = id.at("constants").get<bool>();
    auto exponents = id.at("exponents").get<std::vector<int>>();
    for (const auto& c : all)
        if (c.constants == constants && c.exponents == exponents) return c;
    throw DomainError("UnknownClonoid", "no enumerated clonoid matches the identifier");
}

json poly_to_json(const Poly& p) { return json(p.coeffs()); }

json factorization_to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& [p, k] : f.factors)
        factors.push_back(json{{"poly", p.coeffs()}, {"multiplicity", k}});
    return json{{"unit", f.unit}, {"factors", factors}};
}

json lattice_to_json(const FiniteLattice& l, const std::vector<Clonoid>& clonoids) {
    json nodes = json::array();
    for (int a = 0; a < l.n; ++a)
        nodes.push_back(json{{"id", a},
                             {"label", clonoid_label(clonoids[a])},
                             {"constants", clonoids[a].constants},
                             {"exponents", clonoids[a].exponents},
                             {"dim", clonoids[a].unary_part.dim()}});
    json edges = json::array();
    for (const auto& [a, b] : l.covers()) edges.push_back(json::array({a, b}));
    return json{{"nodes", nodes}, {"edges", edges}};
}

} // namespace linclo
