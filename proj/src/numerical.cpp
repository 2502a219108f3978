#include "fmcob/numerical.hpp"

#include <stdexcept>

namespace fmcob {

ModelElement NumericalKernel::reduce(const ModelElement& x) const {
    ModelElement r = x;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Rat c = r.coeff(pivots[k]);
        if (sgn(c) != 0) r = r - basis[k].scaled(c);
    }
    return r;
}

bool NumericalKernel::contains(const OmegaClass& x) const {
    for (const auto& [m, c] : x.terms())
        if (!contains(c)) return false;
    return true;
}

std::vector<OmegaClass> NumericalKernel::truncated_basis(int order) const {
    std::vector<OmegaClass> out;
    for (const Monomial& m : Monomial::all_up_to_weight(order))
        for (const ModelElement& v : basis)
            out.push_back(OmegaClass::from_element(model, order, v, m));
    return out;
}

NumericalKernel numerical_kernel(const ModelPtr& model) {
    // Solve G v = 0 exactly: row-reduce the Gram matrix, then read a kernel
    // basis off the free columns.  The basis comes out in reduced echelon
    // form (unit pivot at each free column), independent of enumeration order.
    int n = model->dim();
    std::vector<std::vector<Rat>> m = model->gram();
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (sgn(m[r][col]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rat p = m[row][col];
        for (int c = 0; c < n; ++c) m[row][c] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] -= Rat(f * m[row][c]);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;

    NumericalKernel N;
    N.model = model;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ModelElement v;
        v.add_coord(free, Rat(1));
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v.add_coord(pivot_col[r], Rat(-m[r][free]));
        N.basis.push_back(v);
        N.pivots.push_back(free);
    }
    return N;
}

TPoly omega_pairing(const OmegaClass& x, const OmegaClass& y) {
    return omega_degree(x * y);
}

bool fourier_preserves_kernel(const NumericalKernel& N) {
    for (const ModelElement& v : N.basis)
        if (!N.contains(N.model->fourier(v))) return false;
    return true;
}

bool star_power_vanishes(const NumericalKernel& N, int k) {
    if (k < 1) throw std::invalid_argument("convolution power must be positive");
    if (N.basis.empty()) return true;
    std::vector<ModelElement> layer = N.basis;
    for (int step = 2; step <= k; ++step) {
        std::vector<ModelElement> next;
        for (const ModelElement& v : layer)
            for (const ModelElement& w : N.basis) {
                ModelElement p = N.model->pontryagin(v, w);
                if (!p.is_zero()) next.push_back(p);
            }
        layer = std::move(next);
        if (layer.empty()) return true;
    }
    return layer.empty();
}

bool star_power_with_class_vanishes(const NumericalKernel& N, int p,
                                    const OmegaClass& x) {
    int g = N.model->g();
    OmegaClass fx = fourier_via_psi(x);
    for (const auto& [key, comp] : beauville_decompose(fx))
        if (key.first < g - p)
            throw std::invalid_argument(
                "refined convolution vanishing: the transform of x has a component "
                "of codimension below g-p");
    if (N.basis.empty()) return true;
    std::vector<ModelElement> layer = N.basis;
    for (int step = 2; step <= p + 1; ++step) {
        std::vector<ModelElement> next;
        for (const ModelElement& v : layer)
            for (const ModelElement& w : N.basis) {
                ModelElement prod = N.model->pontryagin(v, w);
                if (!prod.is_zero()) next.push_back(prod);
            }
        layer = std::move(next);
        if (layer.empty()) return true;
    }
    for (const ModelElement& v : layer) {
        OmegaClass vx = omega_pontryagin(
            OmegaClass::from_element(N.model, x.order(), v), x);
        if (!vx.is_zero()) return false;
    }
    return true;
}

}  // namespace fmcob
