#include <doctest.h>

#include "linclo/gf.hpp"

using namespace linclo;

TEST_CASE("field construction picks deterministic moduli") {
    auto f5 = Field::make(5);
    CHECK(f5->characteristic() == 5);
    CHECK(f5->degree() == 1);
    CHECK(f5->modulus() == std::vector<int>{0, 1}); // x

    auto f4 = Field::make(4);
    CHECK(f4->characteristic() == 2);
    CHECK(f4->degree() == 2);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1}); // x^2+x+1

    auto f9 = Field::make(9);
    CHECK(f9->characteristic() == 3);
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1}); // x^2+1

    CHECK_THROWS_AS(Field::make(6), DomainError);
    CHECK_THROWS_AS(Field::make(1), DomainError);
    CHECK_THROWS_AS(Field::make(0), DomainError);
}

TEST_CASE("field arithmetic") {
    auto f5 = Field::make(5);
    CHECK(f5->mul(2, 3) == 1);

    auto f4 = Field::make(4);
    CHECK(f4->mul(2, 2) == 3); // x*x = x+1

    auto f7 = Field::make(7);
    CHECK(f7->inv(3) == 5);
    CHECK_THROWS_AS(f7->inv(0), DomainError);
}

TEST_CASE("primitive elements") {
    CHECK(Field::make(2)->primitive() == 1);
    CHECK(Field::make(5)->primitive() == 2);
    CHECK(Field::make(4)->primitive() == 2); // the element x
}

TEST_CASE("field axioms exhaustively at desk scale") {
    for (int order : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49}) {
        CAPTURE(order);
        auto f = Field::make(order);
        for (int a = 0; a < order; ++a) {
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (int b = 0; b < order; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
            }
        }
        // primitive powers enumerate the nonzero elements exactly once
        std::vector<bool> seen(order, false);
        int x = 1;
        for (int k = 0; k < order - 1; ++k) {
            CHECK(!seen[x]);
            seen[x] = true;
            x = f->mul(x, f->primitive());
        }
        CHECK(x == 1);
    }
}

TEST_CASE("construction is deterministic") {
    for (int order : {4, 8, 9, 25, 27}) {
        auto a = Field::make(order);
        auto b = Field::make(order);
        CHECK(a->modulus() == b->modulus());
        CHECK(a->primitive() == b->primitive());
    }
}
