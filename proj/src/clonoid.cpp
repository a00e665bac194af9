#include "linclo/clonoid.hpp"

#include <algorithm>
#include <string>

namespace linclo {

namespace {

constexpr long long kMaxCompositionMatrices = 15625; // 5^6
constexpr int kMaxShiftDim = 12;

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

std::size_t fn_index(const FnTable& f, const std::vector<int>& args) {
    int q = f.q_field->order();
    std::size_t idx = 0;
    for (int a : args) idx = idx * q + static_cast<std::size_t>(a);
    return idx;
}

std::vector<int> fn_args_at(const FnTable& f, std::size_t index) {
    int q = f.q_field->order();
    std::vector<int> args(f.arity, 0);
    for (int i = f.arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(index % q);
        index /= q;
    }
    return args;
}

int FnTable::operator()(const std::vector<int>& args) const {
    if (static_cast<int>(args.size()) != arity)
        throw DomainError("ArityMismatch", "wrong number of arguments");
    return values[fn_index(*this, args)];
}

FnTable fn_zero(const FieldPtr& p_field, const FieldPtr& q_field, int arity) {
    return FnTable{p_field, q_field, arity,
                   std::vector<int>(static_cast<size_t>(ipow(q_field->order(), arity)), 0)};
}

FnTable lagrange_fn(const std::vector<int>& point, const FieldPtr& p_field,
                    const FieldPtr& q_field) {
    FnTable f = fn_zero(p_field, q_field, static_cast<int>(point.size()));
    f.values[fn_index(f, point)] = 1;
    return f;
}

FnTable monoid_act(const MonoidRingElem& sigma, const FnTable& f) {
    if (f.arity != 1) throw DomainError("ArityMismatch", "monoid action is defined on unary tables");
    const auto& p = f.p_field;
    const auto& q = f.q_field;
    FnTable out = fn_zero(p, q, 1);
    for (int x = 0; x < q->order(); ++x) {
        int acc = 0;
        for (const auto& [a, z] : sigma)
            acc = p->add(acc, p->mul(z, f.values[q->mul(a, x)]));
        out.values[x] = acc;
    }
    return out;
}

Subspace unary_submodule_closure(const FieldPtr& p_field, const FieldPtr& q_field,
                                 const std::vector<FnTable>& fns) {
    std::vector<Vec> gens;
    for (const auto& f : fns) {
        if (f.arity != 1) throw DomainError("ArityMismatch", "generators must be unary");
        require_same_field(f.p_field, p_field);
        require_same_field(f.q_field, q_field);
        for (int a = 0; a < q_field->order(); ++a) {
            Vec g(q_field->order(), 0);
            for (int x = 0; x < q_field->order(); ++x) g[x] = f.values[q_field->mul(a, x)];
            gens.push_back(std::move(g));
        }
    }
    return Subspace::span(p_field, q_field->order(), gens);
}

Subspace clonoid_closure_at_arity(const std::vector<FnTable>& fns, int n, bool force) {
    if (fns.empty())
        throw DomainError("FieldMismatch", "empty generator set carries no field information");
    const auto& p = fns[0].p_field;
    const auto& q = fns[0].q_field;
    long long ambient = ipow(q->order(), n);
    std::vector<Vec> gens;
    for (const auto& f : fns) {
        require_same_field(f.p_field, p);
        require_same_field(f.q_field, q);
        int k = f.arity;
        long long mats = ipow(q->order(), k * n);
        if (!force && mats > kMaxCompositionMatrices)
            throw GuardError("TooLarge",
                             "q^(k*n) = " + std::to_string(mats) +
                                 " composition matrices exceed the bound " +
                                 std::to_string(kMaxCompositionMatrices));
        // all k x n matrices A over F_q, encoded as base-q digit strings
        for (long long m = 0; m < mats; ++m) {
            std::vector<int> entries(static_cast<size_t>(k) * n);
            long long t = m;
            for (auto& e : entries) {
                e = static_cast<int>(t % q->order());
                t /= q->order();
            }
            Vec table(static_cast<size_t>(ambient), 0);
            std::vector<int> args(n, 0), mapped(k, 0);
            for (long long idx = 0; idx < ambient; ++idx) {
                long long rest = idx;
                for (int i = n - 1; i >= 0; --i) {
                    args[i] = static_cast<int>(rest % q->order());
                    rest /= q->order();
                }
                for (int i = 0; i < k; ++i) {
                    int acc = 0;
                    for (int j = 0; j < n; ++j)
                        acc = q->add(acc, q->mul(entries[static_cast<size_t>(i) * n + j], args[j]));
                    mapped[i] = acc;
                }
                table[static_cast<size_t>(idx)] = f.values[fn_index(f, mapped)];
            }
            gens.push_back(std::move(table));
        }
    }
    return Subspace::span(p, static_cast<int>(ambient), gens);
}

Subspace pol_at_arity(const Subspace& v, const FieldPtr& q_field, int n, bool force) {
    const auto& p = v.field();
    int q = q_field->order();
    if (v.ambient() != q)
        throw DomainError("DimensionMismatch", "unary part must live in F_p^q");
    // scaling closure check
    for (const auto& b : v.basis()) {
        for (int a = 0; a < q; ++a) {
            Vec g(q, 0);
            for (int x = 0; x < q; ++x) g[x] = b[q_field->mul(a, x)];
            if (!v.contains(g))
                throw DomainError("NotActionClosed",
                                  "subspace is not closed under the scaling action");
        }
    }
    long long ambient = ipow(q, n);
    if (!force && ambient > kMaxCompositionMatrices)
        throw GuardError("TooLarge", "q^n = " + std::to_string(ambient) +
                                         " exceeds the bound " +
                                         std::to_string(kMaxCompositionMatrices));
    Mat ann = annihilator(v);
    std::vector<Vec> constraints;
    std::vector<int> c(n, 0);
    long long tuples = ipow(q, n);
    for (long long m = 0; m < tuples; ++m) {
        long long t = m;
        for (int i = 0; i < n; ++i) {
            c[i] = static_cast<int>(t % q);
            t /= q;
        }
        for (int r = 0; r < ann.rows(); ++r) {
            Vec row(static_cast<size_t>(ambient), 0);
            for (int x = 0; x < q; ++x) {
                int w = ann.at(r, x);
                if (w == 0) continue;
                std::size_t idx = 0;
                for (int i = 0; i < n; ++i) idx = idx * q + static_cast<std::size_t>(q_field->mul(c[i], x));
                row[idx] = p->add(row[idx], w);
            }
            constraints.push_back(std::move(row));
        }
    }
    if (constraints.empty()) return Subspace::full(p, static_cast<int>(ambient));
    return kernel(Mat(p, constraints));
}

std::vector<Clonoid> enumerate_clonoids(const FieldPtr& p_field, const FieldPtr& q_field,
                                        bool force) {
    ShiftOperator op = shift_matrix(p_field, q_field);
    if (!force && op.dim > kMaxShiftDim)
        throw GuardError("TooLarge", "q-1 = " + std::to_string(op.dim) +
                                         " exceeds the dimension bound " +
                                         std::to_string(kMaxShiftDim));
    PrimaryData pd = primary_data(op);
    int q = q_field->order();
    Vec ones(q, 1);

    std::vector<Clonoid> out;
    std::vector<int> exps(pd.components.size(), 0);
    while (true) {
        Subspace w(p_field, op.dim);
        for (size_t i = 0; i < pd.components.size(); ++i)
            w = subspace_sum(w, pd.components[i].chain[exps[i]]);
        // lift from alpha-power coordinates back to natural order with a
        // leading zero coordinate (the inverse of the coordinate-dropping map)
        std::vector<Vec> lifted;
        for (const auto& b : w.basis()) {
            Vec u(q, 0);
            for (int t = 0; t < op.dim; ++t) u[op.coord_order[t]] = b[t];
            lifted.push_back(std::move(u));
        }
        for (bool constants : {false, true}) {
            std::vector<Vec> rows = lifted;
            if (constants) rows.push_back(ones);
            out.push_back(Clonoid{p_field, q_field, constants, exps,
                                  Subspace::span(p_field, q, rows)});
        }
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

long long count_clonoids(const FieldPtr& p_field, const FieldPtr& q_field) {
    Factorization f = factor(target_poly(p_field, q_field));
    long long n = 2;
    for (const auto& [poly, k] : f.factors) n *= k + 1;
    return n;
}

bool membership(const FnTable& f, const Clonoid& c) {
    require_same_field(f.p_field, c.p_field);
    require_same_field(f.q_field, c.q_field);
    int q = f.q_field->order();
    long long tuples = ipow(q, f.arity);
    std::vector<int> tuple(f.arity, 0), args(f.arity, 0);
    for (long long m = 0; m < tuples; ++m) {
        long long t = m;
        for (int i = 0; i < f.arity; ++i) {
            tuple[i] = static_cast<int>(t % q);
            t /= q;
        }
        Vec spec(q, 0);
        for (int x = 0; x < q; ++x) {
            for (int i = 0; i < f.arity; ++i) args[i] = f.q_field->mul(tuple[i], x);
            spec[x] = f.values[fn_index(f, args)];
        }
        if (!c.unary_part.contains(spec)) return false;
    }
    return true;
}

FnTable unary_generator(const Clonoid& c) {
    ShiftOperator op = shift_matrix(c.p_field, c.q_field);
    PrimaryData pd = primary_data(op);
    Subspace w(c.p_field, op.dim);
    for (size_t i = 0; i < pd.components.size(); ++i)
        w = subspace_sum(w, pd.components[i].chain[c.exponents[i]]);
    auto [vstar, d] = cyclic_vector(op, w);
    FnTable g = fn_zero(c.p_field, c.q_field, 1);
    for (int t = 0; t < op.dim; ++t) g.values[op.coord_order[t]] = vstar[t];
    if (c.constants)
        for (auto& v : g.values) v = c.p_field->add(v, 1);
    return g;
}

bool is_star(const FnTable& f) {
    int q = f.q_field->order();
    long long tuples = ipow(q, f.arity);
    std::vector<int> w(f.arity, 0), args(f.arity, 0);
    for (long long m = 0; m < tuples; ++m) {
        long long t = m;
        for (int i = 0; i < f.arity; ++i) {
            w[i] = static_cast<int>(t % q);
            t /= q;
        }
        int first = -1;
        for (int lam = 1; lam < q; ++lam) {
            for (int i = 0; i < f.arity; ++i) args[i] = f.q_field->mul(lam, w[i]);
            int val = f.values[fn_index(f, args)];
            if (first < 0)
                first = val;
            else if (val != first)
                return false;
        }
    }
    return true;
}

FnTable line_transport(const FnTable& g, const Vec& b) {
    const auto& q = g.q_field;
    int n = g.arity;
    if (static_cast<int>(b.size()) != n)
        throw DomainError("DimensionMismatch", "direction vector arity mismatch");
    if (std::all_of(b.begin(), b.end(), [](int x) { return x == 0; }))
        throw DomainError("ZeroDirection", "direction vector must be nonzero");
    // g must vanish off {lambda e_1}
    long long total = ipow(q->order(), n);
    for (long long idx = 0; idx < total; ++idx) {
        auto args = fn_args_at(g, static_cast<std::size_t>(idx));
        bool on_line = std::all_of(args.begin() + 1, args.end(), [](int x) { return x == 0; });
        if (!on_line && g.values[static_cast<std::size_t>(idx)] != 0)
            throw DomainError("NotLineSupported",
                              "generator does not vanish off the first coordinate line");
    }
    int i0 = 0;
    while (b[i0] == 0) ++i0;
    int bi_inv = q->inv(b[i0]);
    // functionals cutting out the line {lambda b}
    Mat ls = annihilator(Subspace::span(q, n, {b}));
    FnTable f = fn_zero(g.p_field, q, n);
    std::vector<int> gargs(n, 0);
    for (long long idx = 0; idx < total; ++idx) {
        auto x = fn_args_at(f, static_cast<std::size_t>(idx));
        gargs[0] = q->mul(bi_inv, x[i0]);
        for (int j = 0; j < n - 1; ++j) {
            int acc = 0;
            for (int t = 0; t < n; ++t) acc = q->add(acc, q->mul(ls.at(j, t), x[t]));
            gargs[j + 1] = acc;
        }
        f.values[static_cast<std::size_t>(idx)] = g.values[fn_index(g, gargs)];
    }
    return f;
}

FnTable lift_line_function(const FnTable& g, int n) {
    if (g.arity != 1) throw DomainError("ArityMismatch", "line lift starts from a unary table");
    if (g.values[0] != 0)
        throw DomainError("NotZeroPreserving", "g(0) must be 0");
    const auto& p = g.p_field;
    const auto& q = g.q_field;
    int q_scalar = p->from_int(q->order());
    if (q_scalar == 0)
        throw DomainError("SameCharacteristic", "q must be invertible in F_p");
    int q_inv = p->inv(q_scalar);

    FnTable t = g;
    for (int m = 2; m <= n; ++m) {
        FnTable next = fn_zero(p, q, m);
        long long total = ipow(q->order(), m);
        std::vector<int> sub(m - 1, 0);
        for (long long idx = 0; idx < total; ++idx) {
            auto x = fn_args_at(next, static_cast<std::size_t>(idx));
            int r = 0;
            for (int a = 0; a < q->order(); ++a) {
                sub[0] = q->sub(x[0], q->mul(a, x[1]));
                for (int i = 2; i < m; ++i) sub[i - 1] = x[i];
                r = p->add(r, t.values[fn_index(t, sub)]);
                if (a != 0) {
                    sub[0] = q->mul(a, x[1]);
                    r = p->sub(r, t.values[fn_index(t, sub)]);
                }
            }
            next.values[static_cast<std::size_t>(idx)] = p->mul(q_inv, r);
        }
        t = std::move(next);
    }
    return t;
}

std::vector<FnTable> unary_basis_tables(const Clonoid& c) {
    std::vector<FnTable> out;
    for (const auto& b : c.unary_part.basis())
        out.push_back(FnTable{c.p_field, c.q_field, 1, b});
    return out;
}

} // namespace linclo
