#pragma once

#include <map>
#include <vector>

#include "fmcob/rational.hpp"

namespace fmcob {

/// Exact exterior algebra on 4g anticommuting generators, used as the
/// reference realization of the rank-one transform on a product of two
/// g-dimensional factors.  Generators 0..2g-1 span the first factor,
/// 2g..4g-1 the second.  A monomial is a bitmask; masks multiply with the
/// usual crossing sign, and coefficients are exact rationals.
///
/// The two pushforwards integrate out one factor and are normalized so that
/// the g-fold power of each polarization form has integral 1.  The transform
/// is  F(x) = push2(x * exp(c1(P)))  with P the canonical line bundle class
/// c1(P) = sum_j e_j f_j, and Fhat the mirror pushforward.
class ExtOracle {
public:
    using Mask = unsigned;
    using Elem = std::map<Mask, Rat>;

    explicit ExtOracle(int g);

    int g() const { return g_; }
    int generators() const { return 4 * g_; }

    // --- raw algebra -------------------------------------------------------
    static Elem scalar(const Rat& c);
    static Elem add(const Elem& a, const Elem& b);
    static Elem scale(const Elem& a, const Rat& c);
    static bool is_zero(const Elem& a);
    static bool equal(const Elem& a, const Elem& b);
    Elem wedge(const Elem& a, const Elem& b) const;
    Elem exp_nilpotent(const Elem& x) const;  // x must have zero scalar part

    // --- distinguished classes --------------------------------------------
    Elem theta() const;            // polarization form of the first factor
    Elem theta_hat() const;        // polarization form of the second factor
    Elem theta_power(int p) const;       // theta^p / p!
    Elem theta_hat_power(int p) const;   // theta_hat^p / p!
    Elem c1_poincare() const;

    Rat orientation_a() const { return or_a_; }
    Rat orientation_ahat() const { return or_ahat_; }

    // --- pushforwards and the transform ------------------------------------
    Elem push_to_ahat(const Elem& x) const;  // integrate over the first factor
    Elem push_to_a(const Elem& x) const;     // integrate over the second factor
    Rat total_integral(const Elem& x) const; // integrate over both factors
    Elem fourier(const Elem& x) const;
    Elem fourier_hat(const Elem& y) const;
    static Elem sigma_star(const Elem& x);   // (-1)^degree on each monomial

    /// Signs s_p with F(theta^p/p!) = s_p * theta_hat^(g-p)/(g-p)!, p = 0..g.
    std::vector<Rat> taut_fourier_signs() const;

    /// Coefficients c[a][b] of exp(c1(P)) on the classes
    /// (theta^a/a!) * (theta_hat^b/b!); all other even components of the
    /// kernel pair a theta-power block to zero, so the extraction is exact.
    std::vector<std::vector<Rat>> kernel_projection() const;

    /// Fhat(F(x)) == (-1)^g sigma*(x) for every monomial x of the first
    /// factor, and the mirrored identity on the second factor.
    bool involution_identity_holds() const;

    std::vector<Mask> first_factor_monomials() const;   // all 2^(2g) masks
    std::vector<Mask> second_factor_monomials() const;

    /// x must be an exact multiple of theta_hat^p/p!; returns the multiplier.
    Rat theta_hat_component(const Elem& x, int p) const;

private:
    int g_;
    Mask e_full_;
    Mask f_full_;
    Elem exp_kernel_;
    Rat or_a_;
    Rat or_ahat_;
};

}  // namespace fmcob
