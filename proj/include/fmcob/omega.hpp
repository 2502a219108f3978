#pragma once

#include <map>
#include <utility>

#include "fmcob/model.hpp"
#include "fmcob/series.hpp"
#include "fmcob/tpoly.hpp"

namespace fmcob {

/// A class of the t-extended theory over a model: a finite sum of terms
/// c_I * t^I with c_I a model element.  Monomials of weight above the
/// truncation order are dropped silently, mirroring TPoly.
///
/// A term c * t^I with c in component (p', s') contributes to the induced
/// component (p' - w(I), s' - 2 w(I)) where w is the monomial weight.
class OmegaClass {
public:
    OmegaClass(ModelPtr model, int order);  // the zero class
    static OmegaClass unit(ModelPtr model, int order);
    static OmegaClass from_element(ModelPtr model, int order, const ModelElement& c,
                                   const Monomial& m = Monomial());

    const ModelPtr& model() const { return model_; }
    int order() const { return order_; }
    const std::map<Monomial, ModelElement>& terms() const { return terms_; }
    ModelElement coeff(const Monomial& m) const;
    bool is_zero() const { return terms_.empty(); }

    OmegaClass& add_term(const Monomial& m, const ModelElement& c);

    OmegaClass operator+(const OmegaClass& o) const;
    OmegaClass operator-(const OmegaClass& o) const;
    OmegaClass operator-() const;
    OmegaClass operator*(const OmegaClass& o) const;  // ring product, t-bilinear
    OmegaClass scaled(const Rat& c) const;
    OmegaClass scaled(const TPoly& f) const;
    bool operator==(const OmegaClass& o) const;
    bool operator!=(const OmegaClass& o) const { return !(*this == o); }

    /// Canonical text, e.g. "(one) + t1*(2*theta)"; parseable back by the
    /// expression grammar.
    std::string to_string() const;

private:
    void compat(const OmegaClass& o) const;
    ModelPtr model_;
    int order_;
    std::map<Monomial, ModelElement> terms_;
};

/// The change of presentation between the cobordism-side and the
/// coefficient-extended intersection-side theory.  Desk-scale models present
/// both sides on one canonical basis, so the stored data is unchanged; the
/// two names keep call sites honest about which side they are on.
using ChowTClass = OmegaClass;
ChowTClass psi(const OmegaClass& x);
OmegaClass psi_inv(const ChowTClass& x);

/// Transform route 1: move to the intersection side, apply the model's
/// transform matrix to every t-coefficient, move back.
OmegaClass fourier_via_psi(const OmegaClass& x);

/// Transform route 2 datum, precomputed once per (model, order):
/// the product-model kernel class and its series twist.
///
/// kappa := sum_i dual(b_i) (x) F(b_i) on the perfect-pairing carrier K; X :=
/// log(kappa) is the nilpotent first Chern class of the kernel bundle; the
/// twisted kernel is the multiplicative series G evaluated at the twisted
/// first Chern class lambda(X).  The transform is then
///   F(x) = push2((x (x) 1) . twisted_kernel)
/// with push2(a (x) b) = degree(a) * b extended t-linearly, computed on K
/// and restricted back along the carrier embedding.
class FourierKernel {
public:
    FourierKernel(ModelPtr model, int order);

    const ModelPtr& base() const { return base_; }
    const ModelPtr& carrier() const { return carrier_; }
    const ModelPtr& square() const { return square_; }
    const OmegaClass& chern_kernel() const { return kappa_; }    // t-free
    const OmegaClass& c1_class() const { return c1_; }           // t-free log
    const OmegaClass& twisted_kernel() const { return twisted_; }

    OmegaClass apply(const OmegaClass& x) const;

private:
    ModelPtr base_;
    ModelPtr carrier_;
    ModelPtr square_;
    TensorIndex ti_;
    std::vector<int> embed_;      // base index -> carrier index
    std::vector<int> restrict_;   // carrier index -> base index or -1
    OmegaClass kappa_;
    OmegaClass c1_;
    OmegaClass twisted_;
};

/// Convenience wrapper; recomputes the kernel datum each call.
OmegaClass fourier_via_kernel(const OmegaClass& x);

// --- operators extended t-linearly ------------------------------------------
OmegaClass omega_sigma_star(const OmegaClass& x);
OmegaClass omega_mult_pullback(long n, const OmegaClass& x);
OmegaClass omega_mult_pushforward(long n, const OmegaClass& x);
OmegaClass omega_pontryagin(const OmegaClass& x, const OmegaClass& y);
TPoly omega_degree(const OmegaClass& x);  // sum of degree(c_I) t^I
OmegaClass t_zero(const OmegaClass& x);   // restrict to the trivial monomial

std::pair<int, int> induced_bidegree(const BeauvilleAlgebra& alg, int basis_index,
                                     const Monomial& m);

/// Split into pure components keyed by induced (p, s).
std::map<std::pair<int, int>, OmegaClass> beauville_decompose(const OmegaClass& x);

/// Lower and upper bound of the weight grade for a given codimension grade.
std::pair<int, int> component_bounds(int g, int p);

/// The five equivalent purity conditions, checked jointly on x at a given
/// isogeny scale m.  (p, s) is taken from the decomposition of x; for the
/// zero class everything holds vacuously.
struct PurityResult {
    int p = 0, s = 0;
    bool pure = false;            // x concentrated in a single component
    bool eigen_pullback = false;  // n* x = n^(2p-s) x for n in {2,3,5}
    bool eigen_given = false;     // m* x = m^(2p-s) x
    bool eigen_push = false;      // m_* x = m^(2g-2p+s) x
    bool transform_codim = false; // F(x) concentrated in codimension g-p+s
    bool transform_pure = false;  // F(x) concentrated in component (g-p+s, s)
    bool all() const {
        return pure && eigen_pullback && eigen_given && eigen_push &&
               transform_codim && transform_pure;
    }
};
PurityResult check_purity(const OmegaClass& x, long m);

/// Evaluate a truncated series at a class.  Requires x^(order+1) = 0: beyond
/// that the truncated series no longer determines the value, and the call
/// throws std::invalid_argument instead of returning a silently wrong class.
OmegaClass eval_series_at(const Series<TPoly>& f, const OmegaClass& x);

}  // namespace fmcob
