#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fmcob/model.hpp"
#include "fmcob/omega.hpp"
#include "fmcob/series.hpp"
#include "fmcob/tpoly.hpp"

namespace fmcob {

/// Deterministic random-value source for property checks.  Values are drawn
/// from std::mt19937_64 (whose output sequence the standard fixes) via
/// modulo reduction, never through distribution objects, so identical seeds
/// give identical classes on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [lo, hi], inclusive; requires lo <= hi.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Nonzero numerator in [-9, 9], denominator in [1, 4].
    Rat small_rational() {
        long num = uniform(-9, 9);
        if (num == 0) num = 1;
        Rat r(num, uniform(1, 4));
        r.canonicalize();  // two-argument mpq construction is not reduced
        return r;
    }

    /// Random monomial of weight <= maxw (possibly trivial).
    Monomial monomial(int maxw) {
        std::vector<unsigned> exps;
        int budget = static_cast<int>(uniform(0, maxw));
        while (budget > 0) {
            const int var = static_cast<int>(uniform(1, budget));
            if (static_cast<int>(exps.size()) < var) exps.resize(var, 0);
            ++exps[var - 1];
            budget -= var;
        }
        return Monomial(exps);
    }

    /// Sparse element with `terms` random coordinates (collisions merge).
    ModelElement element(const BeauvilleAlgebra& m, int terms = 2) {
        ModelElement out;
        for (int k = 0; k < terms; ++k)
            out.add_coord(static_cast<int>(uniform(0, m.dim() - 1)), small_rational());
        return out;
    }

    /// Random class: `terms` random monomial-dressed coordinates.
    OmegaClass omega(const ModelPtr& m, int order, int terms = 3) {
        OmegaClass out(m, order);
        for (int k = 0; k < terms; ++k) {
            ModelElement e;
            e.add_coord(static_cast<int>(uniform(0, m->dim() - 1)), small_rational());
            out.add_term(monomial(order), e);
        }
        return out;
    }

    /// Random polynomial with `terms` monomials of weight <= order.
    TPoly tpoly(int order, int terms = 2) {
        TPoly out = TPoly::zero(order);
        for (int k = 0; k < terms; ++k) out.add_term(monomial(order), small_rational());
        return out;
    }

    /// Random series u + a2 u^2 + ... with rational coefficients; the unit
    /// linear term keeps it compositionally invertible.
    Series<Rat> series_over_rat(int order) {
        Series<Rat> f(order, Rat(0));
        f.set_coeff(1, Rat(1));
        for (int k = 2; k <= order; ++k) f.set_coeff(k, small_rational());
        return f;
    }

    /// Same with polynomial coefficients.
    Series<TPoly> series_over_tpoly(int order) {
        Series<TPoly> f(order, TPoly::zero(order));
        f.set_coeff(1, TPoly::one(order));
        for (int k = 2; k <= order; ++k) f.set_coeff(k, tpoly(order));
        return f;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace fmcob
