#pragma once

#include <fmcob/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace fmcob {

/// Monomial in t1, t2, ... ; exps[i] is the exponent of t_{i+1}.
/// Trailing zero exponents are trimmed so the representation is canonical.
/// The grading weight of t_i is i (its degree is -i); monomials whose weight
/// exceeds the ambient truncation order are dropped by TPoly.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps);
    static Monomial var(int i);  // t_i, i >= 1
    /// Every monomial of weight <= maxw, in canonical (weight, lex) order.
    static std::vector<Monomial> all_up_to_weight(int maxw);

    int weight() const;
    bool trivial() const { return exps_.empty(); }
    const std::vector<unsigned>& exps() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    /// Weight-major order, then lexicographic; gives the canonical term order
    /// used for printing and for deterministic map iteration.
    bool operator<(const Monomial& o) const;

    std::string to_string() const;  // "t1*t3^2", "1" for the trivial monomial

  private:
    std::vector<unsigned> exps_;
};

/// Element of Q[t1..tD] with deg t_i = -i, truncated below degree -D:
/// every monomial of weight > D is silently dropped (the ring is the
/// degree-(-D) truncation of the free polynomial ring).
class TPoly {
  public:
    explicit TPoly(int order);
    static TPoly constant(const Rat& c, int order);
    static TPoly zero(int order) { return TPoly(order); }
    static TPoly one(int order) { return constant(1, order); }
    static TPoly var(int i, int order);  // t_i

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    /// Coefficient of a monomial (zero if absent).
    Rat coeff(const Monomial& m) const;
    /// Coefficient of the trivial monomial, i.e. the value at t = 0.
    Rat constant_term() const { return coeff(Monomial()); }
    /// True when every monomial has the given weight (0 is homogeneous of any).
    bool is_homogeneous(int weight) const;
    /// Largest/smallest monomial weight present (0 for the zero polynomial).
    int max_weight() const;
    int min_weight() const;

    TPoly& add_term(const Monomial& m, const Rat& c);

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator-() const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator*(const Rat& c) const;
    bool operator==(const TPoly& o) const;
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    /// Canonical text: terms in (weight, lex) order, e.g. "1 - 1/2*t1 + t2^3".
    std::string to_string() const;
    /// Inverse of to_string (accepts any sum of <rational>*<monomial> terms).
    static TPoly parse(const std::string& text, int order);

  private:
    void check_order(const TPoly& o) const;
    int order_;
    std::map<Monomial, Rat> terms_;
};

inline TPoly operator*(const Rat& c, const TPoly& p) { return p * c; }

}  // namespace fmcob
