#pragma once

#include <map>
#include <vector>

#include "linclo/shiftop.hpp"

namespace linclo {

/// A finitary function F_q^n -> F_p as a dense value table. Entry order is
/// row-major with x_1 most significant, arguments in natural encoding order
/// 0..q-1; |values| = q^n.
struct FnTable {
    FieldPtr p_field;
    FieldPtr q_field;
    int arity = 0;
    std::vector<int> values;

    int operator()(const std::vector<int>& args) const;
    bool operator==(const FnTable& o) const {
        return arity == o.arity && values == o.values &&
               p_field->order() == o.p_field->order() && q_field->order() == o.q_field->order();
    }
};

std::size_t fn_index(const FnTable& f, const std::vector<int>& args);
std::vector<int> fn_args_at(const FnTable& f, std::size_t index);

FnTable fn_zero(const FieldPtr& p_field, const FieldPtr& q_field, int arity);

/// Indicator of one point, valued in {0,1} of F_p.
FnTable lagrange_fn(const std::vector<int>& point, const FieldPtr& p_field,
                    const FieldPtr& q_field);

/// Element of the monoid ring F_p[F_q^x]: F_q element -> F_p coefficient.
using MonoidRingElem = std::map<int, int>;

/// (sigma * f)(x) = sum_a z_a f(a x); f must be unary.
FnTable monoid_act(const MonoidRingElem& sigma, const FnTable& f);

/// Smallest scaling-closed subspace of F_p^q containing the given unary
/// tables: the span of all x |-> f(ax) for a in F_q.
Subspace unary_submodule_closure(const FieldPtr& p_field, const FieldPtr& q_field,
                                 const std::vector<FnTable>& fns);

/// The n-ary part of the clonoid generated by fns: the span of all tables
/// x |-> f(A x) over right-composition matrices A (a single pass suffices,
/// since such matrices compose by matrix product).
Subspace clonoid_closure_at_arity(const std::vector<FnTable>& fns, int n,
                                  bool force = false);

/// All n-ary tables whose scalar-line specializations x |-> f(c_1 x,...,c_n x)
/// lie in the scaling-closed unary-part subspace v (ambient q).
/// Throws DomainError(NotActionClosed) if v is not scaling-closed.
Subspace pol_at_arity(const Subspace& v, const FieldPtr& q_field, int n,
                      bool force = false);

/// A linearly closed clonoid, identified by the constants flag and the
/// per-primary-component chain exponents; carries its unary-part subspace
/// of F_p^q (natural coordinate order, coordinate 0 = value at 0).
struct Clonoid {
    FieldPtr p_field;
    FieldPtr q_field;
    bool constants = false;
    std::vector<int> exponents;
    Subspace unary_part;
};

/// The full lattice: 2 * prod(k_i + 1) clonoids, ordered with exponents
/// lexicographic (first component most significant) and the constants flag
/// varying fastest.
std::vector<Clonoid> enumerate_clonoids(const FieldPtr& p_field, const FieldPtr& q_field,
                                        bool force = false);

/// 2 * prod(k_i + 1) straight from the factorization of x^{q-1} - 1.
long long count_clonoids(const FieldPtr& p_field, const FieldPtr& q_field);

/// True iff every scalar-line specialization of f lies in c's unary part.
bool membership(const FnTable& f, const Clonoid& c);

/// The single unary generator: the cyclic vector of the 0-preserving part,
/// written back to natural coordinates, plus the all-ones table when the
/// clonoid contains the constants.
FnTable unary_generator(const Clonoid& c);

/// True iff f is constant on every punctured line {lambda w : lambda != 0}.
bool is_star(const FnTable& f);

/// Moves a function supported on the line through (1,0,...,0) to the line
/// through b. Throws DomainError(ZeroDirection) for b = 0 and
/// DomainError(NotLineSupported) if g does not vanish off its line.
FnTable line_transport(const FnTable& g, const Vec& b);

/// Lifts a 0-preserving unary g to the n-ary table supported on the first
/// axis, via the averaging recursion with division by q in F_p.
/// Throws DomainError(NotZeroPreserving) if g(0) != 0.
FnTable lift_line_function(const FnTable& g, int n);

/// The unary tables of a clonoid's unary part as FnTables (basis rows).
std::vector<FnTable> unary_basis_tables(const Clonoid& c);

} // namespace linclo
