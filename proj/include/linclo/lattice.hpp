#pragma once

#include <string>
#include <vector>

#include "linclo/clonoid.hpp"

namespace linclo {

/// A finite lattice over opaque element indices, with precomputed order,
/// join and meet tables.
struct FiniteLattice {
    int n = 0;
    std::vector<std::vector<char>> leq;
    std::vector<std::vector<int>> joins;
    std::vector<std::vector<int>> meets;

    bool less(int a, int b) const { return a != b && leq[a][b]; }
    /// Covering pairs (a, b) with a < b and nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;
    int bottom() const;
    int top() const;
};

/// Order by containment of unary parts; meet = intersection, join = the
/// smallest enumerated clonoid containing the subspace sum.
/// Throws DomainError(DuplicateElements) on repeated unary parts.
FiniteLattice build_lattice(const std::vector<Clonoid>& clonoids);

/// Builds join/meet tables from a bare partial order; used for synthetic
/// lattices in tests. Throws if some pair has no least upper bound or
/// greatest lower bound.
FiniteLattice lattice_from_leq(const std::vector<std::vector<char>>& leq);

/// Order-isomorphism with the product of chains of the given lengths,
/// decided through the join-irreducible poset of a distributive lattice.
bool iso_product_of_chains(const FiniteLattice& l, const std::vector<int>& lengths);

/// Exhaustive check of x /\ (y \/ z) = (x /\ y) \/ (x /\ z).
bool is_distributive(const FiniteLattice& l);

/// Node labels follow `c{constants}-e{j1...js}-d{dim}`.
std::string lattice_to_dot(const FiniteLattice& l, const std::vector<Clonoid>& clonoids);
std::string clonoid_label(const Clonoid& c);

} // namespace linclo
