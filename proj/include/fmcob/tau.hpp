#pragma once

#include <fmcob/tpoly.hpp>

#include <stdexcept>
#include <vector>

namespace fmcob {

/// Twisting vector tau = (tau_0, tau_1, ...) with tau_0 = 1 and tau_i
/// homogeneous of degree -i. The canonical choice (1, t1, t2, ...) realizes
/// the universal inverse Todd operator.
class TauVector {
  public:
    explicit TauVector(std::vector<TPoly> entries) : tau_(std::move(entries)) {
        if (tau_.empty()) throw std::invalid_argument("empty tau vector");
        order_ = tau_[0].order();
        if (!(tau_[0] == TPoly::one(order_)))
            throw std::invalid_argument("tau_0 must be 1");
        for (std::size_t i = 1; i < tau_.size(); ++i) {
            if (tau_[i].order() != order_)
                throw std::invalid_argument("mismatched truncation orders in tau");
            if (!tau_[i].is_homogeneous(static_cast<int>(i)))
                throw std::invalid_argument("tau_i must be homogeneous of degree -i");
        }
    }

    static TauVector canonical(int order) {
        std::vector<TPoly> v;
        v.push_back(TPoly::one(order));
        for (int i = 1; i <= order; ++i) v.push_back(TPoly::var(i, order));
        return TauVector(std::move(v));
    }

    int order() const { return order_; }
    int size() const { return static_cast<int>(tau_.size()); }
    const TPoly& operator[](int i) const { return tau_.at(static_cast<std::size_t>(i)); }

  private:
    int order_;
    std::vector<TPoly> tau_;
};

/// Inverse Todd operator sum_i c^i tau_i applied to a nilpotent element c of
/// a graded algebra with TPoly scalars. E must provide operator*, operator+,
/// scaled(TPoly) and is_zero(); `unit` is the algebra unit. At c = 0 this is
/// the unit: pullbacks along homomorphisms of abelian varieties never acquire
/// a Todd factor.
template <class E>
E todd_inverse(const TauVector& tau, const E& c, const E& unit) {
    E result = unit.scaled(tau[0]);
    E power = unit;
    for (int i = 1; i < tau.size(); ++i) {
        power = power * c;
        if (power.is_zero()) break;
        result = result + power.scaled(tau[i]);
    }
    return result;
}

/// Twisted first Chern class sum_i c^{i+1} tau_i = lambda_t evaluated at c.
template <class E>
E twisted_c1(const TauVector& tau, const E& c, const E& unit) {
    return c * todd_inverse(tau, c, unit);
}

}  // namespace fmcob
