#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fmcob/rational.hpp"
#include "fmcob/report.hpp"

namespace fmcob {

/// One basis class of a desk-scale model: a name plus its bidegree.
/// p is the codimension grade (0..g), s the weight grade, constrained by
/// 2p - 2g <= s <= min(2p, p).  Parity for sign purposes is s mod 2.
struct BasisElement {
    std::string name;
    int p = 0;
    int s = 0;
};

/// Sparse exact-rational coordinate vector relative to a model's basis.
class ModelElement {
public:
    ModelElement() = default;

    const std::map<int, Rat>& coords() const { return c_; }
    Rat coeff(int i) const;
    bool is_zero() const { return c_.empty(); }

    ModelElement& add_coord(int i, const Rat& c);  // accumulate, drop zeros

    ModelElement operator+(const ModelElement& o) const;
    ModelElement operator-(const ModelElement& o) const;
    ModelElement operator-() const;
    ModelElement scaled(const Rat& c) const;
    bool operator==(const ModelElement& o) const { return c_ == o.c_; }
    bool operator!=(const ModelElement& o) const { return !(*this == o); }

private:
    std::map<int, Rat> c_;
};

class BeauvilleAlgebra;
using ModelPtr = std::shared_ptr<const BeauvilleAlgebra>;

/// Row-major pair indexing used by tensor_product: basis (i, j) of the two
/// factors becomes index i * right_dim + j of the product model.
struct TensorIndex {
    int left_dim = 0;
    int right_dim = 0;
    int pair(int i, int j) const { return i * right_dim + j; }
    int left(int k) const { return k / right_dim; }
    int right(int k) const { return k % right_dim; }
};

Rat integer_power(long base, int exp);  // exp >= 0

/// A finite bigraded supercommutative model algebra with a degree functional
/// and (optionally) a transform matrix.  Instances are immutable; build one
/// from a Data record or use the built-in constructors below.
class BeauvilleAlgebra {
public:
    struct Data {
        std::string name;
        int g = 0;
        bool selfdual = false;  // declared: the pairing is claimed perfect
        std::vector<BasisElement> basis;
        // Structure constants for i <= j only; the i > j half is filled in by
        // the sign rule.  Missing pairs multiply to zero.  Products with the
        // unit may be omitted.
        std::map<std::pair<int, int>, ModelElement> products;
        std::vector<ModelElement> fourier;  // empty when the model has none
        std::vector<Rat> degree;            // empty means identically zero
        // Optional declared data, cross-checked by validate().
        bool has_declared_star = false;
        std::map<std::pair<int, int>, ModelElement> declared_star;
        bool has_declared_diagonal = false;
        std::map<std::pair<int, int>, Rat> declared_diagonal;
        // Optional perfect-pairing host used by the kernel-route transform
        // when this model's own pairing is degenerate.
        ModelPtr kernel_carrier;
        std::vector<int> carrier_embedding;  // basis index -> carrier index
    };

    explicit BeauvilleAlgebra(Data d);

    // --- identification -----------------------------------------------------
    const std::string& name() const { return d_.name; }
    int g() const { return d_.g; }
    int dim() const { return static_cast<int>(d_.basis.size()); }
    bool selfdual() const { return d_.selfdual; }
    const BasisElement& basis(int i) const { return d_.basis.at(i); }
    int index_of(const std::string& nm) const;  // -1 when absent
    int unit_index() const { return unit_; }
    int parity(int i) const { return ((basis(i).s % 2) + 2) % 2; }

    ModelElement unit() const { return e(unit_); }
    ModelElement e(int i) const;
    ModelElement e(const std::string& nm) const;  // throws on unknown name

    /// Unique basis element of bidegree (g, 0) with nonzero degree, or -1.
    int point_index() const { return point_; }

    // --- ring and operators --------------------------------------------------
    ModelElement mul(const ModelElement& x, const ModelElement& y) const;
    bool has_fourier() const { return !d_.fourier.empty(); }
    ModelElement fourier(const ModelElement& x) const;
    /// The dual-side transform; the two sides are identified, so this equals
    /// fourier().  Kept separate so call sites state which direction they mean.
    ModelElement fourier_hat(const ModelElement& x) const;
    ModelElement sigma_star(const ModelElement& x) const;          // (-1)^s
    ModelElement mult_pullback(long n, const ModelElement& x) const;   // n^(2p-s)
    ModelElement mult_pushforward(long n, const ModelElement& x) const;  // n^(2g-2p+s)
    /// x * y := (-1)^g sigma*(Fhat(F(x) . F(y))), the convolution product.
    ModelElement pontryagin(const ModelElement& x, const ModelElement& y) const;
    Rat degree(const ModelElement& x) const;
    Rat pairing(const ModelElement& x, const ModelElement& y) const;  // deg(x.y)

    // --- pairing linear algebra (precomputed) --------------------------------
    const std::vector<std::vector<Rat>>& gram() const { return gram_; }
    int gram_rank() const { return gram_rank_; }
    bool pairing_perfect() const { return gram_rank_ == dim(); }
    /// left_duals()[i] is the unique d with pairing(e(j), d) == delta_ij.
    /// Throws std::logic_error when the pairing is degenerate.
    const std::vector<ModelElement>& left_duals() const;

    // --- kernel carrier -------------------------------------------------------
    ModelPtr kernel_carrier() const { return d_.kernel_carrier; }
    const std::vector<int>& carrier_embedding() const { return d_.carrier_embedding; }

    // --- declared extras -------------------------------------------------------
    bool has_declared_star() const { return d_.has_declared_star; }
    const std::map<std::pair<int, int>, ModelElement>& declared_star() const {
        return d_.declared_star;
    }
    bool has_declared_diagonal() const { return d_.has_declared_diagonal; }
    const std::map<std::pair<int, int>, Rat>& declared_diagonal() const {
        return d_.declared_diagonal;
    }

    // --- raw structure access ---------------------------------------------------
    const ModelElement& basis_product(int i, int j) const { return table_.at(i).at(j); }
    const ModelElement& basis_fourier(int i) const;
    Rat basis_degree(int i) const;

    /// Canonical textual form of an element, e.g. "2*theta - 1/2*one".
    std::string format(const ModelElement& x) const;

    /// Full structural audit; one line per axiom, FAIL lines carry a witness.
    Report validate() const;

private:
    Data d_;
    int unit_ = -1;
    int point_ = -1;
    std::vector<std::vector<ModelElement>> table_;  // full dim x dim
    std::map<std::string, int> index_;
    std::vector<std::vector<Rat>> gram_;
    int gram_rank_ = 0;
    std::vector<ModelElement> left_duals_;  // empty when degenerate
};

// --- built-in models -----------------------------------------------------------

/// Divided powers of the polarization class in dimension g; transform signs
/// are read off the exterior-algebra realization, never hard-coded.
ModelPtr taut_model(int g);
/// Rank-one elliptic model with one numerically trivial class piP; its
/// pairing is degenerate and its kernel carrier is the signed model below.
ModelPtr ell_rk1_model();
/// Signed elliptic surrogate with a perfect pairing; hosts ell-rk1.
ModelPtr ell_signed_model();
/// Product model: bigrades add, signs follow parity, the transform acts
/// factorwise, degrees multiply.
ModelPtr tensor_product(const ModelPtr& a, const ModelPtr& b,
                        const std::string& name = "");
/// "taut:g", "ell-rk1", "ell-signed", or "product:g1,g2".
ModelPtr builtin_model(const std::string& spec);

/// Valid basis-class identifier: letter, then letters/digits/'_'/'.'.
bool is_identifier(const std::string& s);

}  // namespace fmcob
