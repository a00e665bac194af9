#include <doctest.h>

#include <algorithm>
#include <set>

#include "linclo/shiftop.hpp"

using namespace linclo;

namespace {

std::set<Subspace> as_set(const std::vector<Subspace>& v) { return {v.begin(), v.end()}; }

Subspace orbit_span(const ShiftOperator& op, const Vec& v) {
    std::vector<Vec> gens;
    Vec cur = v;
    for (int i = 0; i < op.dim; ++i) {
        gens.push_back(cur);
        cur = op.matrix.apply(cur);
    }
    return Subspace::span(op.p_field, op.dim, gens);
}

} // namespace

TEST_CASE("shift matrix frozen examples") {
    auto op23 = shift_matrix(Field::make(2), Field::make(3));
    CHECK(op23.alpha == 2);
    CHECK(op23.dim == 2);
    CHECK(op23.coord_order == std::vector<int>{1, 2});
    CHECK(op23.matrix == Mat(Field::make(2), {{0, 1}, {1, 0}})); // the swap

    auto op32 = shift_matrix(Field::make(3), Field::make(2));
    CHECK(op32.dim == 1);
    CHECK(op32.matrix == Mat::identity(Field::make(3), 1));

    auto op25 = shift_matrix(Field::make(2), Field::make(5));
    CHECK(op25.coord_order == std::vector<int>{1, 2, 4, 3});
    // single 4-cycle permutation
    auto rr = rref(op25.matrix + Mat::identity(Field::make(2), 4));
    CHECK(rr.pivots.size() == 3); // rank of M - I for a full cycle is dim - 1
    CHECK(op25.matrix.pow(4) == Mat::identity(Field::make(2), 4));
    CHECK(op25.matrix.pow(2) != Mat::identity(Field::make(2), 4));

    CHECK_THROWS_AS(shift_matrix(Field::make(2), Field::make(4)), DomainError);
}

TEST_CASE("minimal polynomial") {
    auto f2 = Field::make(2);
    auto f3 = Field::make(3);
    CHECK(minimal_polynomial(shift_matrix(f2, f3)) == Poly(f2, {1, 0, 1}));
    CHECK(minimal_polynomial(shift_matrix(f3, Field::make(2))) == Poly(f3, {2, 1}));
    CHECK(minimal_polynomial(shift_matrix(f2, Field::make(7))) ==
          Poly(f2, {1, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("minimal polynomial equals x^(q-1)-1 across the desk range") {
    for (int p : {2, 3, 4, 5, 7, 8, 9})
        for (int q : {2, 3, 4, 5, 7, 8, 9}) {
            auto pf = Field::make(p);
            auto qf = Field::make(q);
            if (pf->characteristic() == qf->characteristic()) continue;
            CAPTURE(p);
            CAPTURE(q);
            auto op = shift_matrix(pf, qf);
            CHECK(minimal_polynomial(op) == target_poly(pf, qf));
            CHECK(op.matrix.pow(q - 1) == Mat::identity(pf, q - 1));
        }
}

TEST_CASE("primary decomposition frozen examples") {
    auto f2 = Field::make(2);
    auto f5 = Field::make(5);

    auto d23 = primary_data(shift_matrix(f2, Field::make(3)));
    REQUIRE(d23.components.size() == 1);
    CHECK(d23.components[0].factor == Poly(f2, {1, 1}));
    CHECK(d23.components[0].multiplicity == 2);
    REQUIRE(d23.components[0].chain.size() == 3);
    CHECK(d23.components[0].chain[0].dim() == 0);
    CHECK(d23.components[0].chain[1] == Subspace::span(f2, 2, {{1, 1}}));
    CHECK(d23.components[0].chain[2].dim() == 2);

    auto d53 = primary_data(shift_matrix(f5, Field::make(3)));
    REQUIRE(d53.components.size() == 2);
    CHECK(d53.components[0].factor == Poly(f5, {1, 1}));
    CHECK(d53.components[1].factor == Poly(f5, {4, 1}));
    CHECK(d53.components[0].space == Subspace::span(f5, 2, {{1, 4}}));
    CHECK(d53.components[1].space == Subspace::span(f5, 2, {{1, 1}}));

    auto d27 = primary_data(shift_matrix(f2, Field::make(7)));
    REQUIRE(d27.components.size() == 2);
    CHECK(d27.components[0].factor == Poly(f2, {1, 1}));
    CHECK(d27.components[1].factor == Poly(f2, {1, 1, 1}));
    std::vector<int> dims0, dims1;
    for (const auto& s : d27.components[0].chain) dims0.push_back(s.dim());
    for (const auto& s : d27.components[1].chain) dims1.push_back(s.dim());
    CHECK(dims0 == std::vector<int>{0, 1, 2});
    CHECK(dims1 == std::vector<int>{0, 2, 4});
}

TEST_CASE("primary components form a direct sum with totally ordered chains") {
    for (int p : {2, 3, 5, 7})
        for (int q : {2, 3, 4, 5, 7, 8, 9}) {
            if (Field::make(p)->characteristic() == Field::make(q)->characteristic()) continue;
            CAPTURE(p);
            CAPTURE(q);
            auto op = shift_matrix(Field::make(p), Field::make(q));
            auto data = primary_data(op);
            int total = 0;
            for (const auto& c : data.components) {
                total += c.space.dim();
                for (size_t j = 0; j + 1 < c.chain.size(); ++j) {
                    CHECK(subspace_leq(c.chain[j], c.chain[j + 1]));
                    CHECK(c.chain[j + 1].dim() - c.chain[j].dim() == c.factor.degree());
                }
                CHECK(c.chain.back() == c.space);
            }
            CHECK(total == q - 1);
            for (size_t i = 0; i < data.components.size(); ++i)
                for (size_t j = i + 1; j < data.components.size(); ++j)
                    CHECK(subspace_intersect(data.components[i].space,
                                             data.components[j].space).dim() == 0);
        }
}

TEST_CASE("invariant lattice matches the brute-force oracle") {
    struct Case { int p, q; size_t count; };
    for (auto [p, q, count] : {Case{2, 3, 3}, Case{5, 3, 4}, Case{2, 7, 9}, Case{3, 2, 2},
                               Case{2, 5, 5}, Case{3, 4, 4}, Case{5, 2, 2}}) {
        CAPTURE(p);
        CAPTURE(q);
        auto op = shift_matrix(Field::make(p), Field::make(q));
        auto lat = invariant_lattice(op);
        CHECK(lat.size() == count);
        auto brute = brute_force_invariant_subspaces(op);
        CHECK(as_set(lat) == as_set(brute));
        for (const auto& w : lat) {
            // invariance: M maps each basis vector back into w
            for (const auto& b : w.basis()) CHECK(w.contains(op.matrix.apply(b)));
        }
    }
}

TEST_CASE("invariant lattice frozen members") {
    auto f2 = Field::make(2);
    auto lat23 = invariant_lattice(shift_matrix(f2, Field::make(3)));
    REQUIRE(lat23.size() == 3);
    CHECK(as_set(lat23) ==
          std::set<Subspace>{Subspace(f2, 2), Subspace::span(f2, 2, {{1, 1}}),
                             Subspace::full(f2, 2)});

    auto f5 = Field::make(5);
    auto lat53 = invariant_lattice(shift_matrix(f5, Field::make(3)));
    CHECK(as_set(lat53) ==
          std::set<Subspace>{Subspace(f5, 2), Subspace::span(f5, 2, {{1, 1}}),
                             Subspace::span(f5, 2, {{1, 4}}), Subspace::full(f5, 2)});
}

TEST_CASE("brute-force oracle guard") {
    auto op = shift_matrix(Field::make(2), Field::make(9));
    CHECK_THROWS_AS(brute_force_invariant_subspaces(op), GuardError);
}

TEST_CASE("cyclic vectors") {
    auto f2 = Field::make(2);
    auto op = shift_matrix(f2, Field::make(3));

    auto [vfull, dfull] = cyclic_vector(op, Subspace::full(f2, 2));
    CHECK(vfull == Vec{1, 0});
    CHECK(dfull.is_one());

    auto [vzero, dzero] = cyclic_vector(op, Subspace(f2, 2));
    CHECK(vzero == Vec{0, 0});
    CHECK(dzero == Poly(f2, {1, 0, 1}));

    auto [vmid, dmid] = cyclic_vector(op, Subspace::span(f2, 2, {{1, 1}}));
    CHECK(dmid == Poly(f2, {1, 1}));
    CHECK(vmid == Vec{1, 1});

    // non-invariant input
    auto f3 = Field::make(3);
    auto op53 = shift_matrix(Field::make(5), f3);
    CHECK_THROWS_AS(cyclic_vector(op53, Subspace::span(Field::make(5), 2, {{1, 0}})),
                    DomainError);
}

TEST_CASE("every invariant subspace is the orbit span of its cyclic vector") {
    for (int p : {2, 3, 5})
        for (int q : {2, 3, 4, 5, 7}) {
            if (Field::make(p)->characteristic() == Field::make(q)->characteristic()) continue;
            CAPTURE(p);
            CAPTURE(q);
            auto op = shift_matrix(Field::make(p), Field::make(q));
            for (const auto& w : invariant_lattice(op)) {
                auto [v, d] = cyclic_vector(op, w);
                CHECK(orbit_span(op, v) == w);
                CHECK(poly_divides(d, minimal_polynomial(op)));
            }
        }
}
