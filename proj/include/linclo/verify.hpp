#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linclo/gf.hpp"

namespace linclo {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Runs every structure-theorem check that applies to the pair (p, q):
/// minimal polynomial, clonoid count against the brute-force oracle, lattice
/// shape and distributivity, single unary generators, action closure,
/// unary determination, generation by the unary part, the f_1 closure,
/// star-function membership, and the constructive line-transport and
/// line-lift witnesses. Sampled checks draw from the given seed.
VerifyReport run_verification(const FieldPtr& p_field, const FieldPtr& q_field,
                              bool force, std::uint64_t seed);

} // namespace linclo
