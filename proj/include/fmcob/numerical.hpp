#pragma once

#include <vector>

#include "fmcob/model.hpp"
#include "fmcob/omega.hpp"

namespace fmcob {

/// The numerically-trivial subspace of a model: classes pairing to zero
/// against everything.  Computed from the t-free block; t-linearity of the
/// pairing makes a class with TPoly coefficients numerically trivial exactly
/// when every coefficient lies in this block (testing against t-free classes
/// suffices — see the truncation-completeness note in the README).
struct NumericalKernel {
    ModelPtr model;
    std::vector<ModelElement> basis;  // reduced-echelon kernel basis
    std::vector<int> pivots;          // pivot coordinate of each basis vector

    int kernel_dim() const { return static_cast<int>(basis.size()); }
    int quotient_dim() const { return model->dim() - kernel_dim(); }

    /// Reduce x against the kernel basis; x is in the kernel iff the
    /// remainder is zero.
    ModelElement reduce(const ModelElement& x) const;
    bool contains(const ModelElement& x) const { return reduce(x).is_zero(); }
    bool contains(const OmegaClass& x) const;

    /// The kernel of the t-extended theory at the given order: one copy of
    /// the block per t-monomial, listed in canonical monomial order.
    std::vector<OmegaClass> truncated_basis(int order) const;
};

NumericalKernel numerical_kernel(const ModelPtr& model);

/// The t-extended pairing <x, y> = degree(x * y) with values in TPoly.
TPoly omega_pairing(const OmegaClass& x, const OmegaClass& y);

/// The transform maps the kernel into itself (checked per basis vector).
bool fourier_preserves_kernel(const NumericalKernel& N);

/// All k-fold convolution products of kernel elements vanish.
bool star_power_vanishes(const NumericalKernel& N, int k);

/// Refined vanishing: all (p+1)-fold convolution products of kernel elements,
/// convolved once more with x, vanish.  Precondition (enforced): the
/// transform of x is concentrated in codimension >= g - p.
bool star_power_with_class_vanishes(const NumericalKernel& N, int p,
                                    const OmegaClass& x);

}  // namespace fmcob
