#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "fmcob/omega.hpp"
#include "fmcob/rng.hpp"

using namespace fmcob;

namespace {
const int D = 8;

// t-variable index 0 means the trivial monomial
OmegaClass cls(const ModelPtr& m, const std::string& basis_name, int tvar = 0) {
    Monomial mm = tvar == 0 ? Monomial() : Monomial::var(tvar);
    return OmegaClass::from_element(m, D, m->e(basis_name), mm);
}
}  // namespace

TEST_CASE("class arithmetic is a module over the coefficient ring") {
    ModelPtr m = taut_model(2);
    Rng rng(21);
    for (int k = 0; k < 20; ++k) {
        OmegaClass x = rng.omega(m, D), y = rng.omega(m, D), z = rng.omega(m, D);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);  // all classes here are even
        CHECK((x * y) * z == x * (y * z));
        CHECK(x - x == OmegaClass(m, D));
        CHECK(x.scaled(Rat(3) / 2) + x.scaled(Rat(-3) / 2) == OmegaClass(m, D));
        TPoly f = rng.tpoly(D);
        CHECK((x + y).scaled(f) == x.scaled(f) + y.scaled(f));
    }
    OmegaClass u = OmegaClass::unit(m, D);
    OmegaClass x = rng.omega(m, D);
    CHECK(u * x == x);
}

TEST_CASE("classes over different models or orders do not mix") {
    OmegaClass a(taut_model(2), D);
    OmegaClass b(taut_model(3), D);
    OmegaClass c(taut_model(2), 4);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
    // equal content but distinct model instances: still incompatible
    OmegaClass d(taut_model(2), D);
    if (taut_model(2).get() != a.model().get()) CHECK_THROWS_AS(a + d, std::invalid_argument);
}

TEST_CASE("terms above the truncation order vanish") {
    ModelPtr m = taut_model(1);
    OmegaClass x(m, 3);
    x.add_term(Monomial::var(4), m->unit());  // weight 4 > order 3
    CHECK(x.is_zero());
    x.add_term(Monomial::var(3), m->unit());
    CHECK_FALSE(x.is_zero());
    // cancellation prunes the stored term list
    x.add_term(Monomial::var(3), -m->unit());
    CHECK(x.is_zero());
}

TEST_CASE("presentation change is the identity on stored data") {
    ModelPtr m = taut_model(2);
    Rng rng(22);
    for (int k = 0; k < 10; ++k) {
        OmegaClass x = rng.omega(m, D);
        CHECK(psi_inv(psi(x)) == x);
        CHECK(psi(x).terms() == x.terms());
    }
}

TEST_CASE("transform routes agree on every model that supports both") {
    Rng rng(23);
    for (const char* spec : {"taut:1", "taut:2", "taut:3", "ell-signed", "product:1,1", "ell-rk1"}) {
        ModelPtr m = builtin_model(spec);
        FourierKernel fk(m, D);
        for (int i = 0; i < m->dim(); ++i) {
            OmegaClass x = OmegaClass::from_element(m, D, m->e(i));
            CHECK(fk.apply(x) == fourier_via_psi(x));
        }
        for (int k = 0; k < 15; ++k) {
            OmegaClass x = rng.omega(m, D);
            INFO(spec, " on ", x.to_string());
            CHECK(fk.apply(x) == fourier_via_psi(x));
        }
    }
}

TEST_CASE("kernel datum: unit coefficient, nilpotent t-free log, exact twist") {
    for (const char* spec : {"taut:1", "taut:2", "ell-signed"}) {
        ModelPtr m = builtin_model(spec);
        FourierKernel fk(m, D);
        const OmegaClass& kappa = fk.chern_kernel();
        // kappa is t-free and its unit coordinate is 1
        REQUIRE(kappa.terms().size() == 1);
        REQUIRE(kappa.terms().begin()->first == Monomial());
        ModelElement k0 = kappa.terms().begin()->second;
        CHECK(k0.coeff(fk.square()->unit_index()) == Rat(1));
        // c1 = log(kappa) is t-free with zero unit part, and nilpotent
        const OmegaClass& c1 = fk.c1_class();
        for (const auto& [mono, c] : c1.terms()) {
            CHECK(mono == Monomial());
            CHECK(c.coeff(fk.square()->unit_index()) == Rat(0));
        }
        OmegaClass pw = c1;
        for (int i = 1; i <= 2 * m->g(); ++i) pw = pw * c1;
        CHECK(pw.is_zero());
        // the series twist collapses exactly back to kappa
        CHECK(fk.twisted_kernel() == kappa);
        // exp recovers kappa from c1
        CHECK(eval_series_at(exp_u_series(D, TPoly::zero(D)), c1) == kappa);
    }
}

TEST_CASE("kernel route needs enough truncation room") {
    // the kernel first Chern class on a divided-power model has nilpotency
    // index g+1, so the route works from order g upward and refuses below
    CHECK_THROWS_AS(FourierKernel(taut_model(2), 1), std::invalid_argument);
    CHECK_NOTHROW(FourierKernel(taut_model(2), 2));
    CHECK_THROWS_AS(FourierKernel(taut_model(3), 2), std::invalid_argument);
    CHECK_NOTHROW(FourierKernel(taut_model(3), 3));
}

TEST_CASE("degenerate model transforms through its declared carrier") {
    ModelPtr m = ell_rk1_model();
    FourierKernel fk(m, D);
    CHECK(fk.carrier()->name() == ell_signed_model()->name());
    OmegaClass p = cls(m, "piP");
    CHECK(fk.apply(p) == p);  // the numerically trivial class is fixed
    CHECK(fk.apply(cls(m, "one")) == -cls(m, "theta"));
}

TEST_CASE("pullback and pushforward scale t-dressed terms by induced grades") {
    ModelPtr m = taut_model(2);
    // theta has (p,s) = (1,0); dressing with t1 induces (0,-2), so the
    // pullback weight n^(2p-s) is invariant: 2*1-0 = 2*0-(-2) = 2.
    OmegaClass x = cls(m, "theta", 1);
    CHECK(omega_mult_pullback(3, x) == x.scaled(Rat(9)));
    CHECK(omega_mult_pushforward(3, x) == x.scaled(Rat(9)));  // 2g-2p+s = 2
    OmegaClass u = cls(m, "one", 2);
    CHECK(omega_mult_pullback(2, u) == u.scaled(Rat(1)));   // 2*0-0 = 0
    CHECK(omega_mult_pushforward(2, u) == u.scaled(Rat(16)));
    Rng rng(24);
    for (int k = 0; k < 10; ++k) {
        OmegaClass y = rng.omega(m, D);
        for (long n : {2L, 3L, -2L})
            CHECK(omega_mult_pushforward(n, omega_mult_pullback(n, y)) ==
                  y.scaled(integer_power(n, 2 * m->g())));
    }
    ModelPtr es = ell_signed_model();
    OmegaClass a = cls(es, "a");
    CHECK(omega_sigma_star(a) == -a);
    CHECK(omega_sigma_star(cls(es, "theta", 1)) == cls(es, "theta", 1));
}

TEST_CASE("convolution has the point class as unit") {
    ModelPtr m = taut_model(2);
    OmegaClass pt = cls(m, "theta2");
    Rng rng(25);
    for (int k = 0; k < 10; ++k) {
        OmegaClass x = rng.omega(m, D);
        CHECK(omega_pontryagin(pt, x) == x);
        CHECK(omega_pontryagin(x, pt) == x);
    }
}

TEST_CASE("degree functional and constant-term restriction") {
    ModelPtr m = taut_model(2);
    OmegaClass x = cls(m, "theta2", 1) + cls(m, "one").scaled(Rat(5));
    TPoly d = omega_degree(x);
    CHECK(d == TPoly::parse("t1", D));
    CHECK(t_zero(x) == cls(m, "one").scaled(Rat(5)));
    CHECK(t_zero(cls(m, "theta", 2)).is_zero());
}

TEST_CASE("induced component bookkeeping") {
    ModelPtr m = taut_model(2);
    auto [p, s] = induced_bidegree(*m, m->index_of("theta"), Monomial::var(1));
    CHECK(p == 0);
    CHECK(s == -2);
    auto [p2, s2] = induced_bidegree(*m, m->index_of("theta2"), Monomial());
    CHECK(p2 == 2);
    CHECK(s2 == 0);
    CHECK(component_bounds(2, 0) == std::make_pair(-4, 0));
    CHECK(component_bounds(2, 1) == std::make_pair(-2, 1));
    CHECK(component_bounds(2, 2) == std::make_pair(0, 2));
    CHECK(component_bounds(3, 1) == std::make_pair(-4, 1));
}

TEST_CASE("component split covers the class and respects bounds") {
    Rng rng(26);
    for (const char* spec : {"taut:2", "ell-signed", "product:1,1"}) {
        ModelPtr m = builtin_model(spec);
        for (int k = 0; k < 10; ++k) {
            OmegaClass x = rng.omega(m, D);
            auto parts = beauville_decompose(x);
            OmegaClass sum(m, D);
            for (const auto& [ps, comp] : parts) {
                sum = sum + comp;
                auto [lo, hi] = component_bounds(m->g(), ps.first);
                CHECK(ps.second >= lo);
                CHECK(ps.second <= hi);
            }
            CHECK(sum == x);
        }
    }
    // worked example: t1 * theta sits in component (0,-2)
    OmegaClass x = cls(taut_model(1), "theta", 1);
    auto parts = beauville_decompose(x);
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == std::make_pair(0, -2));
    auto [lo, hi] = component_bounds(1, 0);
    CHECK(lo == -2);
    CHECK(hi == 0);
}

TEST_CASE("purity conditions hold jointly on components and fail on mixtures") {
    ModelPtr m = taut_model(2);
    OmegaClass pure = cls(m, "theta", 1);
    PurityResult r = check_purity(pure, 2);
    CHECK(r.all());
    CHECK(r.p == 0);
    CHECK(r.s == -2);
    OmegaClass mixed = cls(m, "theta") + cls(m, "one");
    PurityResult r2 = check_purity(mixed, 2);
    CHECK_FALSE(r2.pure);
    CHECK_FALSE(r2.all());
    CHECK(check_purity(OmegaClass(m, D), 3).all());  // zero class is vacuously pure
}

TEST_CASE("series evaluation demands nilpotence within the truncation order") {
    ModelPtr m = taut_model(2);
    Series<TPoly> expu = exp_u_series(D, TPoly::zero(D));
    OmegaClass th = cls(m, "theta");
    OmegaClass e = eval_series_at(expu, th);
    CHECK(e == OmegaClass::unit(m, D) + th + cls(m, "theta2"));
    // a class with a unit component is not nilpotent at any order
    CHECK_THROWS_AS(eval_series_at(expu, OmegaClass::unit(m, D)), std::invalid_argument);
    // nilpotent, but only beyond the truncation order: rejected at order 1
    OmegaClass low = OmegaClass::from_element(m, 1, m->e("theta"));
    CHECK_THROWS_AS(eval_series_at(exp_u_series(1, TPoly::zero(1)), low),
                    std::invalid_argument);
}

TEST_CASE("canonical text form") {
    ModelPtr m = taut_model(2);
    CHECK(OmegaClass(m, D).to_string() == "0");
    CHECK(OmegaClass::unit(m, D).to_string() == "(one)");
    OmegaClass x = cls(m, "theta", 1).scaled(Rat(2)) + cls(m, "one");
    CHECK(x.to_string() == "(one) + t1*(2*theta)");
}
