#include "linclo/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace linclo {

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            bool covering = true;
            for (int c = 0; c < n; ++c)
                if (less(a, c) && less(c, b)) {
                    covering = false;
                    break;
                }
            if (covering) out.emplace_back(a, b);
        }
    return out;
}

int FiniteLattice::bottom() const {
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n; ++b) ok = ok && leq[a][b];
        if (ok) return a;
    }
    throw std::logic_error("lattice has no bottom");
}

int FiniteLattice::top() const {
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n; ++b) ok = ok && leq[b][a];
        if (ok) return a;
    }
    throw std::logic_error("lattice has no top");
}

FiniteLattice build_lattice(const std::vector<Clonoid>& clonoids) {
    int n = static_cast<int>(clonoids.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (clonoids[i].unary_part == clonoids[j].unary_part)
                throw DomainError("DuplicateElements", "two clonoids share a unary part");

    FiniteLattice l;
    l.n = n;
    l.leq.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            l.leq[i][j] = subspace_leq(clonoids[i].unary_part, clonoids[j].unary_part) ? 1 : 0;

    l.meets.assign(n, std::vector<int>(n, -1));
    l.joins.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Subspace inter = subspace_intersect(clonoids[i].unary_part, clonoids[j].unary_part);
            for (int k = 0; k < n; ++k)
                if (clonoids[k].unary_part == inter) {
                    l.meets[i][j] = k;
                    break;
                }
            if (l.meets[i][j] < 0)
                throw std::logic_error("intersection of unary parts is not an enumerated clonoid");

            Subspace sum = subspace_sum(clonoids[i].unary_part, clonoids[j].unary_part);
            int best = -1;
            for (int k = 0; k < n; ++k) {
                if (!subspace_leq(sum, clonoids[k].unary_part)) continue;
                if (best < 0 || l.leq[k][best]) best = k;
            }
            if (best < 0) throw std::logic_error("subspace sum has no enumerated superelement");
            // smallest superelement must be below every other candidate
            for (int k = 0; k < n; ++k)
                if (subspace_leq(sum, clonoids[k].unary_part) && !l.leq[best][k])
                    throw std::logic_error("no least enumerated superelement for join");
            l.joins[i][j] = best;
        }
    return l;
}

FiniteLattice lattice_from_leq(const std::vector<std::vector<char>>& leq) {
    FiniteLattice l;
    l.n = static_cast<int>(leq.size());
    l.leq = leq;
    l.joins.assign(l.n, std::vector<int>(l.n, -1));
    l.meets.assign(l.n, std::vector<int>(l.n, -1));
    for (int a = 0; a < l.n; ++a)
        for (int b = 0; b < l.n; ++b) {
            int lub = -1, glb = -1;
            for (int c = 0; c < l.n; ++c) {
                if (leq[a][c] && leq[b][c] && (lub < 0 || leq[c][lub])) lub = c;
                if (leq[c][a] && leq[c][b] && (glb < 0 || leq[glb][c])) glb = c;
            }
            for (int c = 0; c < l.n; ++c) {
                if (leq[a][c] && leq[b][c] && !leq[lub][c])
                    throw std::logic_error("poset is not a lattice (no join)");
                if (leq[c][a] && leq[c][b] && !leq[c][glb])
                    throw std::logic_error("poset is not a lattice (no meet)");
            }
            l.joins[a][b] = lub;
            l.meets[a][b] = glb;
        }
    return l;
}

bool is_distributive(const FiniteLattice& l) {
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
            for (int z = 0; z < l.n; ++z)
                if (l.meets[x][l.joins[y][z]] != l.joins[l.meets[x][y]][l.meets[x][z]])
                    return false;
    return true;
}

bool iso_product_of_chains(const FiniteLattice& l, const std::vector<int>& lengths) {
    long long expected = 1;
    for (int len : lengths) {
        if (len < 1) return false;
        expected *= len;
    }
    if (expected != l.n) return false;
    if (!is_distributive(l)) return false;

    // join-irreducibles: exactly one lower cover
    auto covers = l.covers();
    std::vector<int> lower_covers(l.n, 0);
    for (const auto& [a, b] : covers) ++lower_covers[b];
    std::vector<int> ji;
    for (int a = 0; a < l.n; ++a)
        if (lower_covers[a] == 1) ji.push_back(a);

    // the JI poset of a product of chains is a disjoint union of chains of
    // sizes len_i - 1; split into comparability components and check each
    // component is totally ordered
    std::vector<int> comp(ji.size(), -1);
    int ncomp = 0;
    for (size_t i = 0; i < ji.size(); ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        std::vector<size_t> stack{i};
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t v = 0; v < ji.size(); ++v) {
                if (comp[v] >= 0) continue;
                if (l.leq[ji[u]][ji[v]] || l.leq[ji[v]][ji[u]]) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> groups(ncomp);
    for (size_t i = 0; i < ji.size(); ++i) groups[comp[i]].push_back(ji[i]);
    for (const auto& g : groups)
        for (size_t a = 0; a < g.size(); ++a)
            for (size_t b = a + 1; b < g.size(); ++b)
                if (!l.leq[g[a]][g[b]] && !l.leq[g[b]][g[a]]) return false;

    std::vector<int> sizes;
    for (const auto& g : groups) sizes.push_back(static_cast<int>(g.size()));
    std::vector<int> want;
    for (int len : lengths)
        if (len >= 2) want.push_back(len - 1);
    std::sort(sizes.begin(), sizes.end());
    std::sort(want.begin(), want.end());
    return sizes == want;
}

std::string clonoid_label(const Clonoid& c) {
    std::string e;
    for (int j : c.exponents) e += std::to_string(j);
    return "c" + std::to_string(c.constants ? 1 : 0) + "-e" + e + "-d" +
           std::to_string(c.unary_part.dim());
}

std::string lattice_to_dot(const FiniteLattice& l, const std::vector<Clonoid>& clonoids) {
    std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int a = 0; a < l.n; ++a)
        out += "  n" + std::to_string(a) + " [label=\"" + clonoid_label(clonoids[a]) + "\"];\n";
    for (const auto& [a, b] : l.covers())
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace linclo
