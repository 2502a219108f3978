#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "fmcob/ext_oracle.hpp"
#include "fmcob/model.hpp"

using namespace fmcob;

namespace {
Rat binom(int n, int k) {
    Rat r(1);
    for (int i = 1; i <= k; ++i) r = Rat(r * Rat(n - k + i) / Rat(i));
    return r;
}
}  // namespace

TEST_CASE("every built-in model passes its structural audit") {
    for (const char* spec :
         {"taut:1", "taut:2", "taut:3", "ell-rk1", "ell-signed", "product:1,1", "product:1,2"}) {
        ModelPtr m = builtin_model(spec);
        Report r = m->validate();
        INFO(spec, "\n", r.text());
        CHECK(r.all_pass());
    }
}

TEST_CASE("divided-power models multiply with binomial coefficients") {
    for (int g = 1; g <= 3; ++g) {
        ModelPtr m = taut_model(g);
        CHECK(m->dim() == g + 1);
        CHECK(m->point_index() == g);
        for (int i = 0; i <= g; ++i) {
            CHECK(m->basis(i).p == i);
            CHECK(m->basis(i).s == 0);
            for (int j = 0; j <= g; ++j) {
                ModelElement expect =
                    (i + j <= g) ? m->e(i + j).scaled(binom(i + j, i)) : ModelElement();
                CHECK(m->mul(m->e(i), m->e(j)) == expect);
            }
        }
        CHECK(m->basis_degree(g) == Rat(1));
        for (int i = 0; i < g; ++i) CHECK(m->basis_degree(i) == Rat(0));
    }
    CHECK(taut_model(2)->index_of("theta2") == 2);
    CHECK(taut_model(2)->index_of("nope") == -1);
    CHECK_THROWS_AS(taut_model(0), std::invalid_argument);
    CHECK_THROWS_AS(taut_model(7), std::invalid_argument);
}

TEST_CASE("transform on divided powers carries the exterior-algebra signs") {
    for (int g = 1; g <= 3; ++g) {
        ModelPtr m = taut_model(g);
        ExtOracle oracle(g);
        std::vector<Rat> signs = oracle.taut_fourier_signs();
        REQUIRE(static_cast<int>(signs.size()) == g + 1);
        for (int p = 0; p <= g; ++p) {
            CHECK(signs[p] == Rat((g - p) % 2 == 0 ? 1 : -1));
            CHECK(m->basis_fourier(p) == m->e(g - p).scaled(signs[p]));
        }
        // the point class always maps to the unit with coefficient +1
        CHECK(m->fourier(m->e(m->point_index())) == m->unit());
        // double transform is (-1)^g sigma*
        Rat sg((g % 2 == 0) ? 1 : -1);
        for (int p = 0; p <= g; ++p)
            CHECK(m->fourier_hat(m->fourier(m->e(p))) == m->sigma_star(m->e(p)).scaled(sg));
    }
}

TEST_CASE("exterior-algebra reference realization") {
    for (int g = 1; g <= 3; ++g) {
        ExtOracle oracle(g);
        CHECK(oracle.generators() == 4 * g);
        CHECK(oracle.involution_identity_holds());
        // normalization: the g-fold polarization power integrates to 1
        CHECK(oracle.total_integral(
                  oracle.wedge(oracle.theta_power(g), oracle.theta_hat_power(g))) == Rat(1));
        CHECK(oracle.theta_hat_component(oracle.theta_hat_power(g), g) == Rat(1));
    }
    CHECK(ExtOracle(1).orientation_a() == Rat(1));
    CHECK(ExtOracle(2).orientation_a() == Rat(-1));
    CHECK(ExtOracle(3).orientation_a() == Rat(-1));

    // exp of the canonical line-bundle class projected onto divided powers
    std::vector<std::vector<Rat>> kp = ExtOracle(2).kernel_projection();
    REQUIRE(kp.size() == 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Rat expect(0);
            if (a == b) expect = (a == 1) ? Rat(-1, 2) : Rat(1);
            CHECK(kp[a][b] == expect);
        }
}

TEST_CASE("pairing matrix, rank, and dual basis") {
    ModelPtr t2 = taut_model(2);
    CHECK(t2->pairing_perfect());
    CHECK(t2->gram_rank() == 3);
    std::vector<std::vector<Rat>> expect = {{0, 0, 1}, {0, 2, 0}, {1, 0, 0}};
    CHECK(t2->gram() == expect);
    for (const char* spec : {"taut:1", "taut:3", "ell-signed", "product:1,1"}) {
        ModelPtr m = builtin_model(spec);
        REQUIRE(m->pairing_perfect());
        const auto& duals = m->left_duals();
        for (int i = 0; i < m->dim(); ++i)
            for (int j = 0; j < m->dim(); ++j)
                CHECK(m->pairing(m->e(j), duals[i]) == Rat(i == j ? 1 : 0));
    }
    ModelPtr rk1 = ell_rk1_model();
    CHECK_FALSE(rk1->pairing_perfect());
    CHECK(rk1->gram_rank() == 2);
    CHECK(rk1->dim() == 3);
    CHECK_THROWS_AS(rk1->left_duals(), std::logic_error);
    CHECK(rk1->kernel_carrier() != nullptr);
    CHECK(rk1->kernel_carrier()->name() == ell_signed_model()->name());
}

TEST_CASE("signed elliptic model is supercommutative with odd classes") {
    ModelPtr m = ell_signed_model();
    CHECK(m->parity(m->index_of("a")) == 1);
    CHECK(m->parity(m->index_of("ad")) == 1);
    CHECK(m->parity(m->index_of("one")) == 0);
    CHECK(m->mul(m->e("a"), m->e("ad")) == -m->mul(m->e("ad"), m->e("a")));
    CHECK(m->mul(m->e("a"), m->e("a")).is_zero());
    CHECK(m->mul(m->e("a"), m->e("ad")) == m->e("theta"));
    CHECK(m->sigma_star(m->e("a")) == -m->e("a"));
    CHECK(m->sigma_star(m->e("ad")) == -m->e("ad"));
    CHECK(m->sigma_star(m->e("theta")) == m->e("theta"));
}

TEST_CASE("multiplication maps scale by the graded weights") {
    ModelPtr m = ell_signed_model();
    const long n = 3;
    // pullback weight is n^(2p-s), pushforward weight n^(2g-2p+s)
    CHECK(m->mult_pullback(n, m->e("a")) == m->e("a").scaled(3));
    CHECK(m->mult_pullback(n, m->e("ad")) == m->e("ad").scaled(3));
    CHECK(m->mult_pullback(n, m->e("theta")) == m->e("theta").scaled(9));
    CHECK(m->mult_pushforward(n, m->e("one")) == m->e("one").scaled(9));
    CHECK(m->mult_pushforward(n, m->e("theta")) == m->e("theta"));
    for (const char* spec : {"taut:2", "ell-signed", "product:1,1"}) {
        ModelPtr mm = builtin_model(spec);
        for (long k : {2L, 3L, -2L}) {
            Rat total = integer_power(k, 2 * mm->g());
            for (int i = 0; i < mm->dim(); ++i)
                CHECK(mm->mult_pushforward(k, mm->mult_pullback(k, mm->e(i))) ==
                      mm->e(i).scaled(total));
        }
    }
}

TEST_CASE("the point class is the unit of the convolution product") {
    for (const char* spec : {"taut:1", "taut:2", "taut:3", "ell-signed"}) {
        ModelPtr m = builtin_model(spec);
        ModelElement pt = m->e(m->point_index());
        for (int i = 0; i < m->dim(); ++i) {
            CHECK(m->pontryagin(pt, m->e(i)) == m->e(i));
            CHECK(m->pontryagin(m->e(i), pt) == m->e(i));
        }
    }
    // units convolve to zero: their product lands below the bottom grade
    ModelPtr t1 = taut_model(1);
    CHECK(t1->pontryagin(t1->unit(), t1->unit()).is_zero());
}

TEST_CASE("tensor products add grades and multiply with crossing signs") {
    ModelPtr s = ell_signed_model();
    ModelPtr m = tensor_product(s, s);
    CHECK(m->dim() == 16);
    CHECK(m->g() == 2);
    CHECK(m->name() == "tensor(ell-signed,ell-signed)");
    int k = m->index_of("a.theta");
    REQUIRE(k >= 0);
    CHECK(m->basis(k).p == 2);
    CHECK(m->basis(k).s == 1);
    // crossing two odd classes flips the sign
    CHECK(m->mul(m->e("a.one"), m->e("one.a")) == m->e("a.a"));
    CHECK(m->mul(m->e("one.a"), m->e("a.one")) == -m->e("a.a"));
    // the transform acts factor by factor
    CHECK(m->basis_fourier(m->index_of("one.one")) == m->e("theta.theta"));
    // degrees multiply
    CHECK(m->basis_degree(m->index_of("theta.theta")) == Rat(1));
    CHECK(m->point_index() == m->index_of("theta.theta"));
    CHECK_THROWS_AS(tensor_product(nullptr, s), std::invalid_argument);
}

TEST_CASE("built-in model specs parse or are rejected") {
    CHECK(builtin_model("taut:3")->name() == taut_model(3)->name());
    CHECK(builtin_model("ell-rk1")->dim() == 3);
    CHECK(builtin_model("product:1,2")->g() == 3);
    CHECK(builtin_model("product:1,2")->dim() == 6);
    for (const char* bad : {"taut:0", "taut:x", "taut:", "product:1", "product:a,b", "bogus"})
        CHECK_THROWS_AS(builtin_model(bad), std::invalid_argument);
}

TEST_CASE("element formatting is canonical") {
    ModelPtr m = ell_signed_model();
    CHECK(m->format(ModelElement()) == "0");
    CHECK(m->format(m->e("theta")) == "theta");
    CHECK(m->format(-m->e("a")) == "-a");
    CHECK(m->format(m->e("ad").scaled(Rat(-3) / 7)) == "-3/7*ad");
    CHECK(m->format(m->e("theta").scaled(2) - m->unit().scaled(Rat(1) / 2)) ==
          "-1/2*one + 2*theta");
    CHECK_THROWS_AS(m->e("nonexistent"), std::invalid_argument);
}

TEST_CASE("constructor rejects malformed data, audit flags bad structure") {
    ModelPtr s = ell_signed_model();
    {
        BeauvilleAlgebra::Data d;
        d.name = "broken";
        d.g = 1;
        CHECK_THROWS_AS(BeauvilleAlgebra{d}, std::invalid_argument);  // empty basis
    }
    {
        BeauvilleAlgebra::Data d;
        d.name = "broken";
        d.g = 1;
        d.basis = {{"one", 0, 0}, {"x", 1, 0}};
        ModelElement bad;
        bad.add_coord(1, Rat(2));
        d.products[{0, 1}] = bad;  // unit row must reproduce the other factor
        CHECK_THROWS_AS(BeauvilleAlgebra{d}, std::invalid_argument);
    }
    {
        BeauvilleAlgebra::Data d;
        d.name = "offgrade";
        d.g = 2;
        d.basis = {{"one", 0, 0}, {"x", 1, 0}};
        ModelElement u;
        u.add_coord(0, Rat(1));
        d.products[{1, 1}] = u;  // x*x has bidegree (2,0), not (0,0)
        BeauvilleAlgebra m(d);
        CHECK_FALSE(m.validate().all_pass());
    }
}

TEST_CASE("identifier lexing") {
    CHECK(is_identifier("theta"));
    CHECK(is_identifier("a.theta"));
    CHECK(is_identifier("x_1"));
    CHECK_FALSE(is_identifier(""));
    CHECK_FALSE(is_identifier("1a"));
    CHECK_FALSE(is_identifier("has space"));
    CHECK_FALSE(is_identifier("-a"));
}
