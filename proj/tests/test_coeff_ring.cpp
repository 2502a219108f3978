#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <vector>

#include "doctest.h"
#include "fmcob/rng.hpp"
#include "fmcob/tpoly.hpp"

using namespace fmcob;

TEST_CASE("monomial canonical representation and weight") {
    CHECK(Monomial().trivial());
    CHECK(Monomial().weight() == 0);
    CHECK(Monomial(std::vector<unsigned>{0, 0}).trivial());  // trailing zeros trimmed
    CHECK(Monomial::var(1).weight() == 1);
    CHECK(Monomial::var(3).weight() == 3);
    // weight of t1^2 * t3 is 1*2 + 3*1
    CHECK(Monomial(std::vector<unsigned>{2, 0, 1}).weight() == 5);
    CHECK(Monomial::var(2).to_string() == "t2");
    CHECK(Monomial(std::vector<unsigned>{1, 0, 2}).to_string() == "t1*t3^2");
    CHECK(Monomial().to_string() == "1");
}

TEST_CASE("monomial product adds exponents") {
    Monomial a(std::vector<unsigned>{1, 2});
    Monomial b(std::vector<unsigned>{0, 1, 4});
    CHECK(a * b == Monomial(std::vector<unsigned>{1, 3, 4}));
    CHECK(a * Monomial() == a);
}

TEST_CASE("monomial order is weight-major then lexicographic") {
    Monomial one;
    Monomial t1 = Monomial::var(1);
    Monomial t2 = Monomial::var(2);
    Monomial t1t1(std::vector<unsigned>{2});
    CHECK(one < t1);
    CHECK(t1 < t2);       // weight 1 < weight 2
    CHECK(t1 < t1t1);     // weight 1 < weight 2
    CHECK(!(t2 < t2));
    // same weight 2: t2 vs t1^2 ordered deterministically and consistently
    CHECK((t2 < t1t1) != (t1t1 < t2));
}

TEST_CASE("monomial enumeration counts match cumulative partition numbers") {
    // #monomials of weight <= w = p(0)+...+p(w)
    const int expected[] = {1, 2, 4, 7, 12, 19, 30, 45, 67};
    for (int w = 0; w <= 8; ++w) {
        auto all = Monomial::all_up_to_weight(w);
        CHECK(static_cast<int>(all.size()) == expected[w]);
        std::set<std::string> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].weight() <= w);
            CHECK(seen.insert(all[i].to_string()).second);  // no duplicates
            if (i > 0) CHECK(all[i - 1] < all[i]);          // sorted canonically
        }
    }
}

TEST_CASE("polynomial truncation drops heavy monomials silently") {
    TPoly p = TPoly::zero(3);
    p.add_term(Monomial::var(4), Rat(5));  // weight 4 > order 3
    CHECK(p.is_zero());
    TPoly q = TPoly::var(2, 3) * TPoly::var(2, 3);  // weight 4 product
    CHECK(q.is_zero());
    TPoly r = TPoly::var(1, 3) * TPoly::var(2, 3);  // weight 3 survives
    CHECK(r.coeff(Monomial(std::vector<unsigned>{1, 1})) == Rat(1));
}

TEST_CASE("polynomial ring axioms on random values") {
    Rng rng(42);
    for (int k = 0; k < 30; ++k) {
        TPoly a = rng.tpoly(6, 3), b = rng.tpoly(6, 3), c = rng.tpoly(6, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == TPoly::zero(6));
        CHECK(a * TPoly::one(6) == a);
        CHECK(-(-a) == a);
    }
}

TEST_CASE("homogeneity and weight range") {
    TPoly p = TPoly::var(2, 8);
    p.add_term(Monomial(std::vector<unsigned>{2}), Rat(3));  // t1^2, weight 2
    CHECK(p.is_homogeneous(2));
    CHECK(!p.is_homogeneous(1));
    CHECK(p.max_weight() == 2);
    CHECK(p.min_weight() == 2);
    p.add_term(Monomial::var(5), Rat(1));
    CHECK(!p.is_homogeneous(2));
    CHECK(p.max_weight() == 5);
    CHECK(p.min_weight() == 2);
    CHECK(TPoly::zero(8).is_homogeneous(3));  // vacuously
}

TEST_CASE("textual round trip is exact") {
    Rng rng(7);
    for (int k = 0; k < 40; ++k) {
        TPoly p = rng.tpoly(8, 4);
        CHECK(TPoly::parse(p.to_string(), 8) == p);
    }
    CHECK(TPoly::parse("0", 8) == TPoly::zero(8));
    CHECK(TPoly::parse("1 - 1/2*t1 + t2^3", 8).coeff(Monomial(std::vector<unsigned>{0, 3})) ==
          Rat(1));
    CHECK(TPoly::parse("-t1", 4) == -TPoly::var(1, 4));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(TPoly::parse("t1 +", 4), std::invalid_argument);
    CHECK_THROWS_AS(TPoly::parse("1/0", 4), std::invalid_argument);
    CHECK_THROWS_AS(TPoly::parse("x1", 4), std::invalid_argument);
}

TEST_CASE("mismatched truncation orders are rejected") {
    CHECK_THROWS_AS(TPoly::one(3) + TPoly::one(4), std::invalid_argument);
}
