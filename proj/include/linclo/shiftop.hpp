#pragma once

#include <utility>
#include <vector>

#include "linclo/linalg.hpp"
#include "linclo/poly.hpp"

namespace linclo {

/// The scaling operator f |-> (x |-> f(alpha x)) on F_p^{F_q \ {0}},
/// with alpha the deterministic primitive element of F_q. Coordinates are
/// ordered as alpha^0, alpha^1, ..., alpha^{q-2}, which makes the matrix a
/// single (q-1)-cycle permutation.
struct ShiftOperator {
    FieldPtr p_field;
    FieldPtr q_field;
    int alpha;
    int dim; // q - 1
    std::vector<int> coord_order; // slot t -> encoding of alpha^t in F_q
    std::vector<int> slot_of;     // encoding -> slot; slot_of[0] = -1
    Mat matrix;                   // over p_field
};

/// Throws DomainError(SameCharacteristic) unless the characteristics differ.
ShiftOperator shift_matrix(const FieldPtr& p_field, const FieldPtr& q_field);

/// Monic minimal polynomial, from the Krylov iterates of e_1.
Poly minimal_polynomial(const ShiftOperator& op);

struct PrimaryComponent {
    Poly factor;
    int multiplicity;
    Subspace space;               // ker(factor(M)^multiplicity)
    std::vector<Subspace> chain;  // ker(factor(M)^j) for j = 0..multiplicity
};

struct PrimaryData {
    Factorization factorization; // of x^{q-1} - 1 over F_p
    std::vector<PrimaryComponent> components;
};

PrimaryData primary_data(const ShiftOperator& op);

/// All invariant subspaces, as direct sums of per-component chain members
/// over all exponent tuples; count = product of (k_i + 1).
std::vector<Subspace> invariant_lattice(const ShiftOperator& op);

/// Independent oracle: filters every subspace of F_p^{q-1} for invariance.
/// Throws GuardError(TooLarge) when the enumeration exceeds the desk bound,
/// unless force is set.
std::vector<Subspace> brute_force_invariant_subspaces(const ShiftOperator& op,
                                                      bool force = false);

/// For an invariant subspace w, returns (v*, d) with v* = d(M) e_1 and d the
/// monic gcd of the Krylov-coordinate polynomials of w's basis (joined with
/// the minimal polynomial, so the zero subspace yields (0, minpoly)).
/// The orbit span of v* equals w. Throws DomainError(NotInvariant).
std::pair<Vec, Poly> cyclic_vector(const ShiftOperator& op, const Subspace& w);

/// p(M) by Horner evaluation.
Mat poly_at_matrix(const Poly& p, const Mat& m);

} // namespace linclo
