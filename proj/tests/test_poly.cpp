#include <doctest.h>

#include <map>

#include "linclo/poly.hpp"

using namespace linclo;

namespace {

// Independent factorization oracle: peel off monic divisors in ascending
// (degree, coefficient) order, like integer trial division.
std::vector<std::pair<Poly, int>> trial_division_factor(Poly f) {
    const auto& fld = f.field();
    int s = fld->order();
    std::vector<std::pair<Poly, int>> out;
    for (int d = 1; d <= f.degree(); ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= s;
        for (long long m = 0; m < count && f.degree() >= d; ++m) {
            std::vector<int> c(d + 1, 0);
            long long t = m;
            for (int i = 0; i < d; ++i) {
                c[i] = static_cast<int>(t % s);
                t /= s;
            }
            c[d] = 1;
            Poly cand(fld, c);
            int mult = 0;
            while (poly_divides(cand, f)) {
                f = poly_divmod(f, cand).first;
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
        }
    }
    return out;
}

// no monic divisor of degree 1..deg-1
bool oracle_irreducible(const Poly& p) {
    auto fs = trial_division_factor(p.monic());
    return fs.size() == 1 && fs[0].second == 1 && fs[0].first.degree() == p.degree();
}

Poly mk(const FieldPtr& f, std::vector<int> c) { return Poly(f, std::move(c)); }

} // namespace

TEST_CASE("gcd over F_2") {
    auto f2 = Field::make(2);
    // gcd(x^2+1, x+1) = x+1 since x^2+1 = (x+1)^2
    CHECK(poly_gcd(mk(f2, {1, 0, 1}), mk(f2, {1, 1})) == mk(f2, {1, 1}));
    // gcd(x^2+x, x^2+1) = x+1
    CHECK(poly_gcd(mk(f2, {0, 1, 1}), mk(f2, {1, 0, 1})) == mk(f2, {1, 1}));
    // gcd(f, 0) = monic scaling of f
    auto f5 = Field::make(5);
    CHECK(poly_gcd(mk(f5, {2, 4}), Poly::zero(f5)) == mk(f5, {3, 1}));
    CHECK(poly_gcd(Poly::zero(f5), Poly::zero(f5)).is_zero());
    CHECK_THROWS_AS(poly_gcd(mk(f5, {1}), mk(f2, {1})), DomainError);
}

TEST_CASE("factor matches frozen examples") {
    auto f2 = Field::make(2);
    auto f5 = Field::make(5);
    auto f3 = Field::make(3);

    auto r = factor(mk(f2, {1, 0, 1})); // x^2+1 = (x+1)^2
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first == mk(f2, {1, 1}));
    CHECK(r.factors[0].second == 2);

    r = factor(mk(f5, {4, 0, 1})); // x^2-1 = (x+1)(x+4)
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].first == mk(f5, {1, 1}));
    CHECK(r.factors[1].first == mk(f5, {4, 1}));
    CHECK(r.factors[0].second == 1);
    CHECK(r.factors[1].second == 1);

    r = factor(mk(f2, {1, 0, 0, 0, 0, 0, 1})); // x^6+1 = (x+1)^2 (x^2+x+1)^2
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].first == mk(f2, {1, 1}));
    CHECK(r.factors[0].second == 2);
    CHECK(r.factors[1].first == mk(f2, {1, 1, 1}));
    CHECK(r.factors[1].second == 2);

    r = factor(mk(f3, {2, 1})); // x-1 = (x+2)^1
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first == mk(f3, {2, 1}));
    CHECK(r.factors[0].second == 1);

    CHECK_THROWS_AS(factor(Poly::zero(f2)), DomainError);
}

TEST_CASE("factor agrees with the trial-division oracle") {
    for (int order : {2, 3, 4, 5}) {
        auto fld = Field::make(order);
        // every monic polynomial of degree <= 4 (degree <= 3 for order 5)
        int maxdeg = order <= 4 ? 4 : 3;
        for (int d = 1; d <= maxdeg; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= order;
            for (long long m = 0; m < count; ++m) {
                std::vector<int> c(d + 1, 0);
                long long t = m;
                for (int i = 0; i < d; ++i) {
                    c[i] = static_cast<int>(t % order);
                    t /= order;
                }
                c[d] = 1;
                Poly f(fld, c);
                CAPTURE(order);
                CAPTURE(poly_to_text(f));
                auto got = factor(f);
                CHECK(got.expand() == f);
                auto want = trial_division_factor(f);
                REQUIRE(got.factors.size() == want.size());
                for (size_t i = 0; i < want.size(); ++i) {
                    CHECK(got.factors[i].first == want[i].first);
                    CHECK(got.factors[i].second == want[i].second);
                    CHECK(oracle_irreducible(got.factors[i].first));
                }
            }
        }
    }
}

TEST_CASE("gcd divisibility properties") {
    auto f3 = Field::make(3);
    // a few fixed pairs plus a systematic sweep of low-degree pairs
    for (int ma = 1; ma < 81; ++ma)
        for (int mb = 1; mb < 81; mb += 7) {
            std::vector<int> ca(4), cb(4);
            int ta = ma, tb = mb;
            for (int i = 0; i < 4; ++i) {
                ca[i] = ta % 3;
                ta /= 3;
                cb[i] = tb % 3;
                tb /= 3;
            }
            Poly a(f3, ca), b(f3, cb);
            Poly g = poly_gcd(a, b);
            CHECK(poly_divides(g, a));
            CHECK(poly_divides(g, b));
            // every common divisor of degree <= 2 divides the gcd
            for (int md = 1; md < 27; ++md) {
                std::vector<int> cd(3);
                int td = md;
                for (int i = 0; i < 3; ++i) {
                    cd[i] = td % 3;
                    td /= 3;
                }
                Poly d(f3, cd);
                if (d.degree() < 1) continue;
                if (poly_divides(d, a) && poly_divides(d, b)) CHECK(poly_divides(d, g));
            }
        }
}

TEST_CASE("target polynomial") {
    auto f2 = Field::make(2);
    auto f3 = Field::make(3);
    auto f5 = Field::make(5);
    CHECK(target_poly(f2, f3) == mk(f2, {1, 0, 1}));  // x^2+1
    CHECK(target_poly(f5, f3) == mk(f5, {4, 0, 1}));  // x^2+4
    CHECK_THROWS_AS(target_poly(f2, f2), DomainError);
    CHECK_THROWS_AS(target_poly(f2, Field::make(4)), DomainError);
}

TEST_CASE("multiplicity structure of x^(q-1)-1") {
    // squarefree iff the characteristic does not divide q-1; otherwise every
    // multiplicity equals the characteristic power dividing q-1
    for (int p : {2, 3, 4, 5, 7, 8, 9})
        for (int q : {2, 3, 4, 5, 7, 8, 9}) {
            auto pf = Field::make(p);
            auto qf = Field::make(q);
            if (pf->characteristic() == qf->characteristic()) continue;
            CAPTURE(p);
            CAPTURE(q);
            auto fact = factor(target_poly(pf, qf));
            int r = pf->characteristic();
            int cp = 1;
            int rest = q - 1;
            while (rest % r == 0) {
                rest /= r;
                cp *= r;
            }
            for (const auto& [poly, k] : fact.factors) CHECK(k == cp);
            bool squarefree = true;
            for (const auto& [poly, k] : fact.factors) squarefree = squarefree && k == 1;
            CHECK(squarefree == ((q - 1) % r != 0));
        }
}

TEST_CASE("text rendering") {
    auto f2 = Field::make(2);
    CHECK(poly_to_text(mk(f2, {1, 1, 1})) == "1 + x + x^2");
    CHECK(poly_to_pretty(mk(f2, {1, 1, 1})) == "x^2+x+1");
    CHECK(poly_to_text(Poly::zero(f2)) == "0");
    auto r = factor(mk(f2, {1, 0, 0, 0, 0, 0, 1}));
    CHECK(factorization_to_text(r) == "(x+1)^2 * (x^2+x+1)^2");
}
