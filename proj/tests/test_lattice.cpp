#include <doctest.h>

#include "linclo/lattice.hpp"

using namespace linclo;

namespace {

// leq matrix of M3: bottom, three incomparable atoms, top
std::vector<std::vector<char>> m3_leq() {
    std::vector<std::vector<char>> leq(5, std::vector<char>(5, 0));
    for (int i = 0; i < 5; ++i) leq[i][i] = 1;
    for (int a : {1, 2, 3}) {
        leq[0][a] = 1;
        leq[a][4] = 1;
    }
    leq[0][4] = 1;
    return leq;
}

std::vector<std::vector<char>> chain_leq(int n) {
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) leq[i][j] = 1;
    return leq;
}

} // namespace

TEST_CASE("lattice of (2,3) clonoids") {
    auto cs = enumerate_clonoids(Field::make(2), Field::make(3));
    auto l = build_lattice(cs);
    CHECK(l.n == 6);
    CHECK(l.leq[l.bottom()][l.top()]);
    CHECK(cs[l.bottom()].unary_part.dim() == 0);
    CHECK(cs[l.top()].unary_part.dim() == 3);
    CHECK(is_distributive(l));
    CHECK(iso_product_of_chains(l, {2, 3}));
    CHECK(!iso_product_of_chains(l, {6}));
    CHECK(!iso_product_of_chains(l, {2, 2}));

    // covers form the expected 2x3 grid: 7 covering pairs
    CHECK(l.covers().size() == 7);

    // join and meet land on elements whose unary parts are the sum/intersection
    for (int a = 0; a < l.n; ++a)
        for (int b = 0; b < l.n; ++b) {
            CHECK(cs[l.meets[a][b]].unary_part ==
                  subspace_intersect(cs[a].unary_part, cs[b].unary_part));
            CHECK(subspace_leq(subspace_sum(cs[a].unary_part, cs[b].unary_part),
                               cs[l.joins[a][b]].unary_part));
        }
}

TEST_CASE("lattice shapes across pairs") {
    struct Case { int p, q; std::vector<int> lengths; };
    for (const auto& c : {Case{3, 2, {2, 2}}, Case{5, 3, {2, 2, 2}}, Case{2, 7, {2, 3, 3}},
                          Case{2, 5, {2, 5}}, Case{3, 4, {2, 4}}, Case{2, 9, {2, 9}}}) {
        CAPTURE(c.p);
        CAPTURE(c.q);
        auto cs = enumerate_clonoids(Field::make(c.p), Field::make(c.q));
        auto l = build_lattice(cs);
        CHECK(is_distributive(l));
        CHECK(iso_product_of_chains(l, c.lengths));
        size_t expect = 1;
        for (int len : c.lengths) expect *= static_cast<size_t>(len);
        CHECK(cs.size() == expect);
    }
}

TEST_CASE("synthetic lattices") {
    auto m3 = lattice_from_leq(m3_leq());
    CHECK(!is_distributive(m3));
    CHECK(!iso_product_of_chains(m3, {5}));

    auto c4 = lattice_from_leq(chain_leq(4));
    CHECK(is_distributive(c4));
    CHECK(iso_product_of_chains(c4, {4}));
    CHECK(!iso_product_of_chains(c4, {2, 2}));

    auto c1 = lattice_from_leq(chain_leq(1));
    CHECK(iso_product_of_chains(c1, {}));
}

TEST_CASE("duplicate elements are rejected") {
    auto cs = enumerate_clonoids(Field::make(2), Field::make(3));
    cs.push_back(cs[2]);
    CHECK_THROWS_AS(build_lattice(cs), DomainError);
}

TEST_CASE("labels and dot output") {
    auto cs = enumerate_clonoids(Field::make(2), Field::make(3));
    CHECK(clonoid_label(cs[0]) == "c0-e0-d0");
    CHECK(clonoid_label(cs.back()) == "c1-e2-d3");

    auto dot = lattice_to_dot(build_lattice(cs), cs);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("c0-e0-d0") != std::string::npos);
    CHECK(dot.find("c1-e2-d3") != std::string::npos);
}
