#include "linclo/shiftop.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace linclo {

namespace {
constexpr unsigned long long kMaxBruteForceSubspaces = 100000;
}

ShiftOperator shift_matrix(const FieldPtr& p_field, const FieldPtr& q_field) {
    if (p_field->characteristic() == q_field->characteristic())
        throw DomainError("SameCharacteristic",
                          "p and q must be powers of different primes");
    int q = q_field->order();
    int dim = q - 1;
    ShiftOperator op{p_field, q_field, q_field->primitive(), dim,
                     std::vector<int>(dim), std::vector<int>(q, -1),
                     Mat(p_field, dim, dim)};
    int pw = 1;
    for (int t = 0; t < dim; ++t) {
        op.coord_order[t] = pw;
        op.slot_of[pw] = t;
        pw = q_field->mul(pw, op.alpha);
    }
    // (M f)[slot of x] = f[slot of alpha x]: slot t reads slot t+1
    for (int t = 0; t < dim; ++t) op.matrix.at(t, (t + 1) % dim) = 1;
    return op;
}

Mat poly_at_matrix(const Poly& p, const Mat& m) {
    Mat acc(m.field(), m.rows(), m.cols());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        if (p.coeff(i) != 0)
            acc = acc + Mat::identity(m.field(), m.rows()).scaled(p.coeff(i));
    }
    return acc;
}

Poly minimal_polynomial(const ShiftOperator& op) {
    const auto& f = op.p_field;
    Vec v(op.dim, 0);
    v[0] = 1;
    std::vector<Vec> krylov{v};
    for (int k = 1; k <= op.dim; ++k) {
        Vec next = op.matrix.apply(krylov.back());
        auto coeffs = express_in_span(krylov, next, f);
        if (coeffs) {
            // x^k - sum coeffs_t x^t
            std::vector<int> c(k + 1, 0);
            for (int t = 0; t < k; ++t) c[t] = f->neg((*coeffs)[t]);
            c[k] = 1;
            return Poly(f, std::move(c));
        }
        krylov.push_back(std::move(next));
    }
    throw std::logic_error("no Krylov dependence found below the ambient dimension bound");
}

PrimaryData primary_data(const ShiftOperator& op) {
    PrimaryData out{factor(target_poly(op.p_field, op.q_field)), {}};
    for (const auto& [p, k] : out.factorization.factors) {
        PrimaryComponent comp{p, k, Subspace(op.p_field, op.dim), {}};
        Mat pm = poly_at_matrix(p, op.matrix);
        Mat power = Mat::identity(op.p_field, op.dim);
        comp.chain.emplace_back(op.p_field, op.dim); // ker(p(M)^0) = 0
        for (int j = 1; j <= k; ++j) {
            power = power * pm;
            comp.chain.push_back(kernel(power));
        }
        comp.space = comp.chain.back();
        out.components.push_back(std::move(comp));
    }
    return out;
}

std::vector<Subspace> invariant_lattice(const ShiftOperator& op) {
    PrimaryData pd = primary_data(op);
    std::vector<Subspace> out;
    std::vector<int> exps(pd.components.size(), 0);
    while (true) {
        Subspace s(op.p_field, op.dim);
        for (size_t i = 0; i < pd.components.size(); ++i)
            s = subspace_sum(s, pd.components[i].chain[exps[i]]);
        out.push_back(std::move(s));
        // odometer, last component fastest
        int i = static_cast<int>(exps.size()) - 1;
        while (i >= 0 && exps[i] == pd.components[i].multiplicity) {
            exps[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++exps[i];
    }
    return out;
}

std::vector<Subspace> brute_force_invariant_subspaces(const ShiftOperator& op, bool force) {
    unsigned long long total = count_all_subspaces(op.p_field->order(), op.dim);
    if (!force && total > kMaxBruteForceSubspaces)
        throw GuardError("TooLarge",
                         std::to_string(total) + " subspaces of F_" +
                             std::to_string(op.p_field->order()) + "^" + std::to_string(op.dim) +
                             " exceed the enumeration bound " +
                             std::to_string(kMaxBruteForceSubspaces));
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(op.p_field, op.dim)) {
        bool invariant = true;
        for (const auto& b : s.basis())
            if (!s.contains(op.matrix.apply(b))) {
                invariant = false;
                break;
            }
        if (invariant) out.push_back(std::move(s));
    }
    return out;
}

std::pair<Vec, Poly> cyclic_vector(const ShiftOperator& op, const Subspace& w) {
    const auto& f = op.p_field;
    for (const auto& b : w.basis())
        if (!w.contains(op.matrix.apply(b)))
            throw DomainError("NotInvariant", "subspace is not invariant under the shift operator");

    // Krylov basis e1, M e1, ..., M^{q-2} e1 (a full basis: e1 is cyclic)
    std::vector<Vec> krylov;
    Vec v(op.dim, 0);
    v[0] = 1;
    for (int t = 0; t < op.dim; ++t) {
        krylov.push_back(v);
        v = op.matrix.apply(v);
    }

    Poly d = minimal_polynomial(op);
    for (const auto& b : w.basis()) {
        auto coeffs = express_in_span(krylov, b, f);
        if (!coeffs) throw std::logic_error("Krylov basis failed to express a vector");
        d = poly_gcd(d, Poly(f, *coeffs));
    }
    Vec vstar = poly_at_matrix(d, op.matrix).apply(krylov[0]);
    return {vstar, d};
}

} // namespace linclo
