#pragma once

#include <vector>

#include "fmcob/model.hpp"
#include "fmcob/omega.hpp"

namespace fmcob {

/// Correspondence calculus over a perfect-pairing model.  A correspondence
/// is a class on the tensor-square model; it acts on classes by contraction
/// through the pairing:  for alpha = sum c (x) d,
///     R(alpha)(x) = sum degree(x . c) * d.
/// The diagonal is the dual-basis expansion sum_i dual(b_i) (x) b_i, the
/// unique correspondence realizing the identity; all of its decompositions
/// below are exact and verified internally.
class CorrespondenceCalculus {
public:
    using Corr = OmegaClass;  // class over square()

    CorrespondenceCalculus(ModelPtr base, int order);

    const ModelPtr& base() const { return base_; }
    const ModelPtr& square() const { return square_; }
    int order() const { return order_; }
    const TensorIndex& pair_index() const { return ti_; }

    Corr zero() const { return Corr(square_, order_); }
    /// c (x) d as a correspondence term.
    Corr pure_tensor(const ModelElement& c, const ModelElement& d) const;

    /// beta o alpha, contracting alpha's output factor against beta's input
    /// factor through the pairing.
    Corr compose(const Corr& beta, const Corr& alpha) const;
    /// Factor swap with the Koszul sign (-1)^(parity*parity).
    Corr transpose(const Corr& alpha) const;
    /// The action on classes over the base model.
    OmegaClass realize(const Corr& alpha, const OmegaClass& x) const;

    /// Identity correspondence: sum_i dual(b_i) (x) b_i.
    Corr diagonal() const;
    /// The correspondence realizing mult_pullback(n); equals
    /// (id (x) n*) diagonal.
    Corr graph_class(long n) const;
    /// (id (x) n*) applied termwise: the output-side factor d in component
    /// (q, t) is scaled by n^(2q-t).
    Corr output_pullback(long n, const Corr& alpha) const;

    /// Grade-i piece of a correspondence: keep terms whose output factor d
    /// lies in component (q, t) with 2q - t = i.
    Corr grade_component(const Corr& alpha, int i) const;

    /// The 2g+1 projectors, extracted componentwise from the diagonal.
    /// Verifies internally (throwing std::logic_error with a witness on any
    /// failure): sum = diagonal; orthogonal idempotents; (id (x) n*) and
    /// two-sided graph-composition eigenvalues n^i for n in {2,3}; transpose
    /// duality pi_i^t = pi_(2g-i); agreement with the eigenvalue-interpolation
    /// extraction at n = 2 and n = 3 (uniqueness).
    std::vector<Corr> canonical_projectors() const;

    /// Independent second path: Lagrange interpolation of (id (x) n*) over
    /// the eigenvalues n^0..n^(2g) applied to the diagonal.
    std::vector<Corr> projectors_by_interpolation(long n) const;

    /// realization(alpha) = 0 implies alpha = 0 (exact rank computation).
    bool realization_faithful() const;

private:
    void compat(const Corr& c) const;
    ModelPtr base_;
    ModelPtr square_;
    int order_;
    TensorIndex ti_;
};

/// One summand of the motivic decomposition: (model, projector, twist).
struct MotiveSummand {
    ModelPtr model;
    CorrespondenceCalculus::Corr projector;
    int grade = 0;
    int twist = 0;
};

/// Wrap the canonical projectors into summands (grade i, twist 0) and check
/// that restricting the t-coefficients to degree zero reproduces the same
/// projector list (the decomposition already lives at t-degree 0).
std::vector<MotiveSummand> motive_decompose(const ModelPtr& model, int order);

/// Exact rank of a rational matrix (helper shared by the identity suites).
int matrix_rank(std::vector<std::vector<Rat>> m);

}  // namespace fmcob
