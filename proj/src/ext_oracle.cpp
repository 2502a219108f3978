#include "fmcob/ext_oracle.hpp"

#include <bit>
#include <stdexcept>

namespace fmcob {

namespace {

// Sign of merging two ascending generator lists given as disjoint masks:
// each bit of b crosses every higher bit of a.
int merge_parity(unsigned a, unsigned b) {
    int crossings = 0;
    while (b != 0) {
        unsigned low = b & (~b + 1u);  // lowest set bit of b
        int j = std::countr_zero(low);
        crossings += std::popcount(a >> (j + 1));
        b ^= low;
    }
    return crossings & 1;
}

Rat binom(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (int i = 1; i <= k; ++i) {
        r *= Rat(n - k + i);
        r /= Rat(i);
    }
    return r;
}

// x == r * target for some rational r; throws if no exact multiple exists.
Rat exact_ratio(const ExtOracle::Elem& x, const ExtOracle::Elem& target) {
    if (x.empty()) return Rat(0);
    if (target.empty())
        throw std::logic_error("exterior oracle: nonzero class compared against zero");
    const auto& pivot = *target.begin();
    auto it = x.find(pivot.first);
    if (it == x.end())
        throw std::logic_error("exterior oracle: class is not a multiple of the target");
    Rat r = Rat(it->second / pivot.second);
    ExtOracle::Elem rest = ExtOracle::add(x, ExtOracle::scale(target, Rat(-r)));
    if (!ExtOracle::is_zero(rest))
        throw std::logic_error("exterior oracle: class is not a multiple of the target");
    return r;
}

}  // namespace

ExtOracle::ExtOracle(int g) : g_(g) {
    if (g < 1 || g > 7)
        throw std::invalid_argument("exterior oracle: dimension must be in 1..7");
    e_full_ = (1u << (2 * g)) - 1u;
    f_full_ = ((1u << (2 * g)) - 1u) << (2 * g);
    exp_kernel_ = exp_nilpotent(c1_poincare());
    // Normalize each pushforward so the top power of the polarization form
    // integrates to 1: the needed factor is its raw top coefficient (a sign).
    Elem top = theta_power(g_);
    auto it = top.find(e_full_);
    if (it == top.end()) throw std::logic_error("exterior oracle: degenerate polarization");
    or_a_ = it->second;
    Elem top_hat = theta_hat_power(g_);
    auto jt = top_hat.find(f_full_);
    if (jt == top_hat.end())
        throw std::logic_error("exterior oracle: degenerate dual polarization");
    or_ahat_ = jt->second;
}

ExtOracle::Elem ExtOracle::scalar(const Rat& c) {
    Elem e;
    if (sgn(c) != 0) e[0u] = c;
    return e;
}

ExtOracle::Elem ExtOracle::add(const Elem& a, const Elem& b) {
    Elem out = a;
    for (const auto& [m, c] : b) {
        Rat s = Rat(out[m] + c);
        if (sgn(s) == 0)
            out.erase(m);
        else
            out[m] = s;
    }
    return out;
}

ExtOracle::Elem ExtOracle::scale(const Elem& a, const Rat& c) {
    Elem out;
    if (sgn(c) == 0) return out;
    for (const auto& [m, x] : a) out[m] = Rat(x * c);
    return out;
}

bool ExtOracle::is_zero(const Elem& a) { return a.empty(); }

bool ExtOracle::equal(const Elem& a, const Elem& b) {
    return is_zero(add(a, scale(b, Rat(-1))));
}

ExtOracle::Elem ExtOracle::wedge(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [m1, c1] : a) {
        for (const auto& [m2, c2] : b) {
            if ((m1 & m2) != 0u) continue;
            Rat c = Rat(c1 * c2);
            if (merge_parity(m1, m2)) c = Rat(-c);
            Mask m = m1 | m2;
            Rat s = Rat(out[m] + c);
            if (sgn(s) == 0)
                out.erase(m);
            else
                out[m] = s;
        }
    }
    return out;
}

ExtOracle::Elem ExtOracle::exp_nilpotent(const Elem& x) const {
    if (x.count(0u) != 0)
        throw std::invalid_argument("exterior oracle: exp needs a zero scalar part");
    Elem result = scalar(Rat(1));
    Elem power = scalar(Rat(1));
    Rat factorial(1);
    for (int k = 1; k <= generators() + 1; ++k) {
        power = wedge(power, x);
        if (is_zero(power)) break;
        factorial *= Rat(k);
        result = add(result, scale(power, Rat(1 / factorial)));
    }
    return result;
}

ExtOracle::Elem ExtOracle::theta() const {
    Elem out;
    for (int j = 0; j < g_; ++j) out[(1u << j) | (1u << (g_ + j))] = Rat(1);
    return out;
}

ExtOracle::Elem ExtOracle::theta_hat() const {
    Elem out;
    for (int j = 0; j < g_; ++j)
        out[(1u << (2 * g_ + j)) | (1u << (3 * g_ + j))] = Rat(1);
    return out;
}

ExtOracle::Elem ExtOracle::theta_power(int p) const {
    Elem out = scalar(Rat(1));
    Elem th = theta();
    Rat factorial(1);
    for (int k = 1; k <= p; ++k) {
        out = wedge(out, th);
        factorial *= Rat(k);
    }
    return scale(out, Rat(1 / factorial));
}

ExtOracle::Elem ExtOracle::theta_hat_power(int p) const {
    Elem out = scalar(Rat(1));
    Elem th = theta_hat();
    Rat factorial(1);
    for (int k = 1; k <= p; ++k) {
        out = wedge(out, th);
        factorial *= Rat(k);
    }
    return scale(out, Rat(1 / factorial));
}

ExtOracle::Elem ExtOracle::c1_poincare() const {
    Elem out;
    for (int j = 0; j < 2 * g_; ++j) out[(1u << j) | (1u << (2 * g_ + j))] = Rat(1);
    return out;
}

ExtOracle::Elem ExtOracle::push_to_ahat(const Elem& x) const {
    // The first-factor generators sit below every second-factor generator, so
    // a monomial containing the full first-factor volume already has it on
    // the left: extracting it costs no sign.
    Elem out;
    for (const auto& [m, c] : x) {
        if ((m & e_full_) != e_full_) continue;
        out[m & f_full_] = Rat(c * or_a_);
    }
    return out;
}

ExtOracle::Elem ExtOracle::push_to_a(const Elem& x) const {
    Elem out;
    for (const auto& [m, c] : x) {
        if ((m & f_full_) != f_full_) continue;
        out[m & e_full_] = Rat(c * or_ahat_);
    }
    return out;
}

Rat ExtOracle::total_integral(const Elem& x) const {
    auto it = x.find(e_full_ | f_full_);
    if (it == x.end()) return Rat(0);
    return Rat(it->second * or_a_ * or_ahat_);
}

ExtOracle::Elem ExtOracle::fourier(const Elem& x) const {
    return push_to_ahat(wedge(x, exp_kernel_));
}

ExtOracle::Elem ExtOracle::fourier_hat(const Elem& y) const {
    return push_to_a(wedge(y, exp_kernel_));
}

ExtOracle::Elem ExtOracle::sigma_star(const Elem& x) {
    Elem out;
    for (const auto& [m, c] : x)
        out[m] = (std::popcount(m) & 1) ? Rat(-c) : c;
    return out;
}

std::vector<Rat> ExtOracle::taut_fourier_signs() const {
    std::vector<Rat> signs;
    for (int p = 0; p <= g_; ++p)
        signs.push_back(exact_ratio(fourier(theta_power(p)), theta_hat_power(g_ - p)));
    return signs;
}

std::vector<std::vector<Rat>> ExtOracle::kernel_projection() const {
    std::vector<std::vector<Rat>> c(g_ + 1, std::vector<Rat>(g_ + 1, Rat(0)));
    for (int a = 0; a <= g_; ++a) {
        for (int b = 0; b <= g_; ++b) {
            Elem probe = wedge(theta_power(g_ - a), theta_hat_power(g_ - b));
            Rat raw = total_integral(wedge(exp_kernel_, probe));
            c[a][b] = Rat(raw / (binom(g_, a) * binom(g_, b)));
        }
    }
    return c;
}

bool ExtOracle::involution_identity_holds() const {
    Rat gs = (g_ & 1) ? Rat(-1) : Rat(1);
    for (Mask m : first_factor_monomials()) {
        Elem x;
        x[m] = Rat(1);
        Elem lhs = fourier_hat(fourier(x));
        Elem rhs = scale(sigma_star(x), gs);
        if (!equal(lhs, rhs)) return false;
    }
    for (Mask m : second_factor_monomials()) {
        Elem y;
        y[m] = Rat(1);
        Elem lhs = fourier(fourier_hat(y));
        Elem rhs = scale(sigma_star(y), gs);
        if (!equal(lhs, rhs)) return false;
    }
    return true;
}

std::vector<ExtOracle::Mask> ExtOracle::first_factor_monomials() const {
    std::vector<Mask> out;
    for (Mask m = 0; m <= e_full_; ++m) out.push_back(m);
    return out;
}

std::vector<ExtOracle::Mask> ExtOracle::second_factor_monomials() const {
    std::vector<Mask> out;
    Mask n = e_full_;  // same count of subsets, shifted into the second block
    for (Mask m = 0; m <= n; ++m) out.push_back(m << (2 * g_));
    return out;
}

Rat ExtOracle::theta_hat_component(const Elem& x, int p) const {
    return exact_ratio(x, theta_hat_power(p));
}

}  // namespace fmcob
