#pragma once

#include <json.hpp>

#include "linclo/clonoid.hpp"
#include "linclo/lattice.hpp"

namespace linclo {

// JSON schemas used across the CLI:
//   Subspace  {"ambient": d, "basis": [[...], ...]}
//   FnTable   {"p": int, "q": int, "arity": n, "values": [int, ...]}
//   Clonoid   {"constants": bool, "exponents": [j1, ...]}
//   Poly      [c0, c1, ..., ck]

nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j, const FieldPtr& field);

nlohmann::json fn_to_json(const FnTable& f);
FnTable fn_from_json(const nlohmann::json& j);

nlohmann::json clonoid_id_to_json(const Clonoid& c);
/// Resolves an identifier against the enumerated lattice; throws
/// DomainError(UnknownClonoid) when the exponent tuple is out of range.
const Clonoid& clonoid_by_id(const std::vector<Clonoid>& all, const nlohmann::json& id);

nlohmann::json poly_to_json(const Poly& p);
nlohmann::json factorization_to_json(const Factorization& f);

nlohmann::json lattice_to_json(const FiniteLattice& l, const std::vector<Clonoid>& clonoids);

} // namespace linclo
