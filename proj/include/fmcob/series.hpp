#pragma once

#include <fmcob/tpoly.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmcob {

/// Ring shape helpers. Coefficient rings are value types whose "shape"
/// (truncation order) travels with each value, so zero/one are built from a
/// prototype element rather than default construction.
template <class R>
struct RingOps {
    static R zero(const R& proto);
    static R one(const R& proto);
    static bool is_zero(const R& x);
    static R scalar(const R& proto, const Rat& q);  // embed a rational
};

template <>
struct RingOps<Rat> {
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat scalar(const Rat&, const Rat& q) { return q; }
};

template <>
struct RingOps<TPoly> {
    static TPoly zero(const TPoly& proto) { return TPoly::zero(proto.order()); }
    static TPoly one(const TPoly& proto) { return TPoly::one(proto.order()); }
    static bool is_zero(const TPoly& x) { return x.is_zero(); }
    static TPoly scalar(const TPoly& proto, const Rat& q) {
        return TPoly::constant(q, proto.order());
    }
};

/// Embed a rational scalar into R (prototype supplies the shape).
template <class R>
R ring_scalar(const R& proto, const Rat& q);

template <>
inline Rat ring_scalar<Rat>(const Rat&, const Rat& q) {
    return q;
}
template <>
inline TPoly ring_scalar<TPoly>(const TPoly& proto, const Rat& q) {
    return TPoly::constant(q, proto.order());
}

/// Power series in u truncated at u^D, coefficients in R (exact ring).
/// Coefficients are stored for u^0..u^D; the series ops that require a zero
/// constant term enforce it explicitly.
template <class R>
class Series {
  public:
    Series(int order, const R& proto)
        : order_(order), c_(static_cast<std::size_t>(order) + 1, RingOps<R>::zero(proto)) {
        if (order < 1) throw std::invalid_argument("series order must be >= 1");
    }

    int order() const { return order_; }
    const R& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, const R& v) { c_.at(static_cast<std::size_t>(k)) = v; }
    const R& proto() const { return c_[0]; }

    bool is_zero() const {
        for (const R& x : c_)
            if (!RingOps<R>::is_zero(x)) return false;
        return true;
    }
    bool zero_constant() const { return RingOps<R>::is_zero(c_[0]); }

    Series operator+(const Series& o) const {
        check(o);
        Series r = *this;
        for (int k = 0; k <= order_; ++k) r.c_[k] = r.c_[k] + o.c_[k];
        return r;
    }
    Series operator-(const Series& o) const {
        check(o);
        Series r = *this;
        for (int k = 0; k <= order_; ++k) r.c_[k] = r.c_[k] - o.c_[k];
        return r;
    }
    Series operator*(const Series& o) const {
        check(o);
        Series r(order_, RingOps<R>::zero(c_[0]));
        for (int i = 0; i <= order_; ++i) {
            if (RingOps<R>::is_zero(c_[i])) continue;
            for (int j = 0; i + j <= order_; ++j) {
                if (RingOps<R>::is_zero(o.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
            }
        }
        return r;
    }
    /// Coefficient-wise multiplication by a ring element.
    Series scaled(const R& s) const {
        Series r = *this;
        for (int k = 0; k <= order_; ++k) r.c_[k] = r.c_[k] * s;
        return r;
    }

    bool operator==(const Series& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

  private:
    void check(const Series& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("mismatched truncation orders");
    }
    int order_;
    std::vector<R> c_;
};

template <class R>
Series<R> series_zero(int order, const R& proto) {
    return Series<R>(order, proto);
}

/// The identity series u.
template <class R>
Series<R> series_u(int order, const R& proto) {
    Series<R> s(order, proto);
    s.set_coeff(1, RingOps<R>::one(proto));
    return s;
}

template <class R>
Series<R> series_constant(int order, const R& value) {
    Series<R> s(order, value);
    s.set_coeff(0, value);
    return s;
}

/// Series over series (two-variable series live here: outer variable v,
/// inner variable u).
template <class R>
struct RingOps<Series<R>> {
    static Series<R> zero(const Series<R>& proto) {
        return Series<R>(proto.order(), RingOps<R>::zero(proto.proto()));
    }
    static Series<R> one(const Series<R>& proto) {
        return series_constant(proto.order(), RingOps<R>::one(proto.proto()));
    }
    static bool is_zero(const Series<R>& x) { return x.is_zero(); }
    static Series<R> scalar(const Series<R>& proto, const Rat& q) {
        return series_constant(proto.order(), RingOps<R>::scalar(proto.proto(), q));
    }
};

/// f(g(u)) truncated; requires g to have zero constant term.
template <class R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("mismatched truncation orders");
    if (!g.zero_constant())
        throw std::invalid_argument("compose: inner series has nonzero constant term");
    // Horner: result = (((f_D g + f_{D-1}) g + ...) g + f_0)
    const int D = f.order();
    Series<R> r = series_constant(D, f.coeff(D));
    for (int k = D - 1; k >= 0; --k) {
        r = r * g;
        r.set_coeff(0, r.coeff(0) + f.coeff(k));
    }
    return r;
}

/// Compositional inverse, solved degree by degree (coefficient recursion,
/// not Lagrange inversion): requires f = u + higher terms exactly.
template <class R>
Series<R> revert(const Series<R>& f) {
    const int D = f.order();
    const R one = RingOps<R>::one(f.proto());
    if (!f.zero_constant())
        throw std::invalid_argument("revert: nonzero constant term");
    if (!(f.coeff(1) == one))
        throw std::invalid_argument("revert: u-coefficient is not 1");
    Series<R> g = series_u(D, f.proto());
    for (int n = 2; n <= D; ++n) {
        // with g filled through degree n-1, [u^n](g o f) is the defect
        Series<R> c = compose(g, f);
        g.set_coeff(n, RingOps<R>::zero(f.proto()) - c.coeff(n));
    }
    return g;
}

/// exp(f) = sum f^k / k! for f with zero constant term; constant term 1.
template <class R>
Series<R> exp_series(const Series<R>& f) {
    if (!f.zero_constant())
        throw std::invalid_argument("exp_series: nonzero constant term");
    const int D = f.order();
    Series<R> r = series_constant(D, RingOps<R>::one(f.proto()));
    Series<R> pw = series_constant(D, RingOps<R>::one(f.proto()));
    Rat fact(1);
    for (int k = 1; k <= D; ++k) {
        pw = pw * f;
        if (pw.is_zero()) break;
        fact *= k;
        r = r + pw.scaled(RingOps<R>::scalar(f.proto(), Rat(1) / fact));
    }
    return r;
}

/// log(f) for f = 1 + g; returns sum (-1)^{k+1} g^k / k, zero constant term.
template <class R>
Series<R> log_series(const Series<R>& f) {
    const R one = RingOps<R>::one(f.proto());
    if (!(f.coeff(0) == one))
        throw std::invalid_argument("log_series: constant term is not 1");
    const int D = f.order();
    Series<R> g = f;
    g.set_coeff(0, RingOps<R>::zero(f.proto()));
    Series<R> r(D, f.proto());
    Series<R> pw = series_constant(D, one);
    for (int k = 1; k <= D; ++k) {
        pw = pw * g;
        if (pw.is_zero()) break;
        Rat c = Rat(k % 2 == 1 ? 1 : -1) / Rat(k);
        r = r + pw.scaled(RingOps<R>::scalar(f.proto(), c));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Named series over Q[t1..tD]
// ---------------------------------------------------------------------------

/// Enforce the grading convention deg u = 1: a "principal" series has zero
/// constant term, u-coefficient 1, and the u^k coefficient homogeneous of
/// t-weight k-1 (i.e. degree -(k-1)), making the series homogeneous of total
/// degree 1.
inline void require_principal_homogeneous(const Series<TPoly>& s, const char* what) {
    if (!s.zero_constant())
        throw std::logic_error(std::string(what) + ": nonzero constant term");
    if (!(s.coeff(1) == TPoly::one(s.proto().order())))
        throw std::logic_error(std::string(what) + ": u-coefficient is not 1");
    for (int k = 2; k <= s.order(); ++k)
        if (!s.coeff(k).is_homogeneous(k - 1))
            throw std::logic_error(std::string(what) +
                                   ": u^" + std::to_string(k) +
                                   " coefficient is not homogeneous of weight " +
                                   std::to_string(k - 1));
}

/// lambda_t(u) = u + t1 u^2 + t2 u^3 + ... (universal change of orientation).
inline Series<TPoly> lambda_series(int order) {
    TPoly proto = TPoly::zero(order);
    Series<TPoly> s(order, proto);
    s.set_coeff(1, TPoly::one(order));
    for (int k = 2; k <= order; ++k) s.set_coeff(k, TPoly::var(k - 1, order));
    require_principal_homogeneous(s, "lambda_series");
    return s;
}

/// l_t = compositional inverse of lambda_t.
inline Series<TPoly> l_series(int order) {
    Series<TPoly> s = revert(lambda_series(order));
    require_principal_homogeneous(s, "l_series");
    return s;
}

/// G = exp o l_t; the series whose evaluation at the twisted first Chern
/// class of the kernel realizes the Fourier transform. Composing with
/// lambda_t collapses to exp(u); that identity is asserted in the test suite
/// (G itself is not homogeneous, being an exponential).
inline Series<TPoly> G_series(int order) {
    return exp_series(l_series(order));
}

/// exp(u) as a truncated series over R.
template <class R>
Series<R> exp_u_series(int order, const R& proto) {
    return exp_series(series_u(order, proto));
}

// ---------------------------------------------------------------------------
// Two-variable series: outer variable v, coefficients are series in u.
// Truncation is by total degree (terms u^a v^b with a+b > D are dropped),
// which is the regime where the formal group law identities close.
// ---------------------------------------------------------------------------

using BiSeries = Series<Series<TPoly>>;

inline BiSeries bi_zero(int order) {
    return BiSeries(order, Series<TPoly>(order, TPoly::zero(order)));
}

inline BiSeries truncate_total(BiSeries s) {
    const int D = s.order();
    for (int b = 0; b <= D; ++b) {
        Series<TPoly> cb = s.coeff(b);
        bool changed = false;
        for (int a = D - b + 1; a <= D; ++a) {
            if (!cb.coeff(a).is_zero()) {
                cb.set_coeff(a, TPoly::zero(cb.proto().order()));
                changed = true;
            }
        }
        if (changed) s.set_coeff(b, cb);
    }
    return s;
}

/// u^a v^b -> u^b v^a.
inline BiSeries bi_swap(const BiSeries& s) {
    BiSeries r = bi_zero(s.order());
    for (int b = 0; b <= s.order(); ++b) {
        for (int a = 0; a <= s.order(); ++a) {
            Series<TPoly> ca = r.coeff(a);
            ca.set_coeff(b, s.coeff(b).coeff(a));
            r.set_coeff(a, ca);
        }
    }
    return r;
}

/// sum_k f_k x^k for a two-variable x with zero (u^0, v^0) coefficient;
/// total-degree truncation makes x nilpotent so the sum is finite.
inline BiSeries eval_biseries(const Series<TPoly>& f, const BiSeries& x) {
    if (!RingOps<TPoly>::is_zero(x.coeff(0).coeff(0)))
        throw std::invalid_argument("eval_biseries: nonzero constant term");
    const int D = f.order();
    BiSeries result = bi_zero(D);
    {
        Series<TPoly> c0 = result.coeff(0);
        c0.set_coeff(0, f.coeff(0));
        result.set_coeff(0, c0);
    }
    BiSeries pw = RingOps<BiSeries>::one(bi_zero(D));
    for (int k = 1; k <= D; ++k) {
        pw = truncate_total(pw * x);
        if (pw.is_zero()) break;
        if (f.coeff(k).is_zero()) continue;
        result = result + pw.scaled(series_constant(D, f.coeff(k)));
    }
    return result;
}

/// Lift a one-variable series to the u-slot (v^0 coefficient) or the v-slot.
inline BiSeries lift_u(const Series<TPoly>& f) {
    BiSeries r = bi_zero(f.order());
    r.set_coeff(0, f);
    return r;
}

inline BiSeries lift_v(const Series<TPoly>& f) {
    BiSeries r = bi_zero(f.order());
    for (int k = 0; k <= f.order(); ++k)
        r.set_coeff(k, series_constant(f.order(), f.coeff(k)));
    return r;
}

/// The universal formal group law over Q[t]: F(u,v) = lambda_t(l(u) + l(v)).
inline BiSeries formal_group_law(int order) {
    Series<TPoly> l = l_series(order);
    BiSeries w = lift_u(l) + lift_v(l);
    return eval_biseries(lambda_series(order), w);
}

// ---------------------------------------------------------------------------
// Textual serialization: one line per power, "u^k : <coefficient>"
// ---------------------------------------------------------------------------

template <class R>
struct CoeffIO;

template <>
struct CoeffIO<Rat> {
    static std::string str(const Rat& c) { return to_string(c); }
    static Rat parse(const std::string& s, const Rat&) { return parse_rational(s); }
};

template <>
struct CoeffIO<TPoly> {
    static std::string str(const TPoly& c) { return c.to_string(); }
    static TPoly parse(const std::string& s, const TPoly& proto) {
        return TPoly::parse(s, proto.order());
    }
};

template <class R>
std::string series_to_text(const Series<R>& s) {
    std::ostringstream out;
    for (int k = 0; k <= s.order(); ++k)
        out << "u^" << k << " : " << CoeffIO<R>::str(s.coeff(k)) << '\n';
    return out.str();
}

template <class R>
Series<R> series_from_text(const std::string& text, int order, const R& proto) {
    Series<R> s(order, proto);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t caret = line.find("u^");
        std::size_t colon = line.find(':');
        if (caret == std::string::npos || colon == std::string::npos || colon < caret)
            throw std::invalid_argument("series text: malformed line " +
                                        std::to_string(lineno));
        int k = std::stoi(line.substr(caret + 2, colon - caret - 2));
        if (k < 0 || k > order)
            throw std::invalid_argument("series text: power out of range on line " +
                                        std::to_string(lineno));
        std::string rest = line.substr(colon + 1);
        // trim
        std::size_t b = rest.find_first_not_of(" \t");
        std::size_t e = rest.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("series text: missing coefficient on line " +
                                        std::to_string(lineno));
        s.set_coeff(k, CoeffIO<R>::parse(rest.substr(b, e - b + 1), proto));
    }
    return s;
}

}  // namespace fmcob
