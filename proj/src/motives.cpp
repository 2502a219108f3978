#include "fmcob/motives.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fmcob {

namespace {

/// Parity-weighted swap sign for exchanging two tensor factors.
int swap_sign(const BeauvilleAlgebra& alg, int a, int b) {
    return (alg.parity(a) * alg.parity(b)) % 2 ? -1 : 1;
}

}  // namespace

CorrespondenceCalculus::CorrespondenceCalculus(ModelPtr base, int order)
    : base_(std::move(base)), order_(order) {
    if (!base_) throw std::invalid_argument("correspondence calculus: null model");
    if (!base_->pairing_perfect())
        throw std::invalid_argument(
            "correspondence calculus requires a perfect pairing; model '" +
            base_->name() + "' has a degenerate one (rank " +
            std::to_string(base_->gram_rank()) + " of " +
            std::to_string(base_->dim()) + ")");
    square_ = tensor_product(base_, base_);
    ti_ = TensorIndex{base_->dim(), base_->dim()};
}

void CorrespondenceCalculus::compat(const Corr& c) const {
    if (c.model().get() != square_.get() || c.order() != order_)
        throw std::invalid_argument(
            "correspondence does not belong to this calculus; build it through "
            "the calculus that will consume it");
}

CorrespondenceCalculus::Corr CorrespondenceCalculus::pure_tensor(
    const ModelElement& c, const ModelElement& d) const {
    ModelElement w;
    for (const auto& [a, ca] : c.coords())
        for (const auto& [b, cb] : d.coords()) w.add_coord(ti_.pair(a, b), Rat(ca * cb));
    return Corr::from_element(square_, order_, w);
}

CorrespondenceCalculus::Corr CorrespondenceCalculus::compose(const Corr& beta,
                                                             const Corr& alpha) const {
    compat(beta);
    compat(alpha);
    const auto& gram = base_->gram();
    Corr out = zero();
    for (const auto& [mon_a, wa] : alpha.terms()) {
        for (const auto& [ab, cab] : wa.coords()) {
            const int a = ti_.left(ab);
            const int b = ti_.right(ab);
            for (const auto& [mon_b, wb] : beta.terms()) {
                const Monomial prod = mon_a * mon_b;
                if (prod.weight() > order_) continue;
                for (const auto& [cd, ccd] : wb.coords()) {
                    const int c = ti_.left(cd);
                    const Rat& link = gram[b][c];
                    if (sgn(link) == 0) continue;
                    const int d = ti_.right(cd);
                    ModelElement term;
                    term.add_coord(ti_.pair(a, d), Rat(cab * ccd * link));
                    out.add_term(prod, term);
                }
            }
        }
    }
    return out;
}

CorrespondenceCalculus::Corr CorrespondenceCalculus::transpose(const Corr& alpha) const {
    compat(alpha);
    Corr out = zero();
    for (const auto& [mon, w] : alpha.terms()) {
        ModelElement flipped;
        for (const auto& [ab, cab] : w.coords()) {
            const int a = ti_.left(ab);
            const int b = ti_.right(ab);
            const int sign = swap_sign(*base_, a, b);
            flipped.add_coord(ti_.pair(b, a), sign < 0 ? Rat(-cab) : cab);
        }
        out.add_term(mon, flipped);
    }
    return out;
}

OmegaClass CorrespondenceCalculus::realize(const Corr& alpha, const OmegaClass& x) const {
    compat(alpha);
    if (x.model().get() != base_.get() || x.order() != order_)
        throw std::invalid_argument("realization argument lives over a different model");
    const auto& gram = base_->gram();
    OmegaClass out(base_, order_);
    for (const auto& [mon_a, w] : alpha.terms()) {
        for (const auto& [ab, cab] : w.coords()) {
            const int a = ti_.left(ab);
            const int b = ti_.right(ab);
            for (const auto& [mon_x, wx] : x.terms()) {
                const Monomial prod = mon_x * mon_a;
                if (prod.weight() > order_) continue;
                Rat link = 0;
                for (const auto& [j, cj] : wx.coords()) link += cj * gram[j][a];
                if (sgn(link) == 0) continue;
                ModelElement term;
                term.add_coord(b, Rat(link * cab));
                out.add_term(prod, term);
            }
        }
    }
    return out;
}

CorrespondenceCalculus::Corr CorrespondenceCalculus::diagonal() const {
    const auto& duals = base_->left_duals();
    Corr out = zero();
    for (int i = 0; i < base_->dim(); ++i)
        out = out + pure_tensor(duals[i], base_->e(i));
    return out;
}

CorrespondenceCalculus::Corr CorrespondenceCalculus::graph_class(long n) const {
    return output_pullback(n, diagonal());
}

CorrespondenceCalculus::Corr CorrespondenceCalculus::output_pullback(
    long n, const Corr& alpha) const {
    compat(alpha);
    Corr out = zero();
    for (const auto& [mon, w] : alpha.terms()) {
        ModelElement scaled;
        for (const auto& [ab, cab] : w.coords()) {
            const BasisElement& d = base_->basis(ti_.right(ab));
            scaled.add_coord(ab, Rat(cab * integer_power(n, 2 * d.p - d.s)));
        }
        out.add_term(mon, scaled);
    }
    return out;
}

CorrespondenceCalculus::Corr CorrespondenceCalculus::grade_component(const Corr& alpha,
                                                                     int i) const {
    compat(alpha);
    Corr out = zero();
    for (const auto& [mon, w] : alpha.terms()) {
        ModelElement kept;
        for (const auto& [ab, cab] : w.coords()) {
            const BasisElement& d = base_->basis(ti_.right(ab));
            if (2 * d.p - d.s == i) kept.add_coord(ab, cab);
        }
        out.add_term(mon, kept);
    }
    return out;
}

std::vector<CorrespondenceCalculus::Corr> CorrespondenceCalculus::projectors_by_interpolation(
    long n) const {
    if (n > -2 && n < 2)
        throw std::invalid_argument(
            "interpolation scale must satisfy |n| >= 2 so the eigenvalues n^0..n^(2g) "
            "are pairwise distinct");
    const int top = 2 * base_->g();
    std::vector<Corr> out;
    out.reserve(top + 1);
    for (int i = 0; i <= top; ++i) {
        Corr cur = diagonal();
        for (int j = 0; j <= top; ++j) {
            if (j == i) continue;
            Rat factor = 1;
            factor /= Rat(integer_power(n, i) - integer_power(n, j));
            cur = (output_pullback(n, cur) - cur.scaled(integer_power(n, j))).scaled(factor);
        }
        out.push_back(cur);
    }
    return out;
}

std::vector<CorrespondenceCalculus::Corr> CorrespondenceCalculus::canonical_projectors()
    const {
    const int top = 2 * base_->g();
    const Corr delta = diagonal();
    std::vector<Corr> pis;
    pis.reserve(top + 1);
    for (int i = 0; i <= top; ++i) pis.push_back(grade_component(delta, i));

    auto bail = [&](const std::string& what, const Corr& witness) {
        throw std::logic_error("projector verification failed on model '" +
                               base_->name() + "': " + what +
                               "; witness = " + witness.to_string());
    };

    Corr sum = zero();
    for (const Corr& pi : pis) sum = sum + pi;
    if (sum != delta) bail("sum of projectors differs from the diagonal", sum - delta);

    for (int i = 0; i <= top; ++i)
        for (int j = 0; j <= top; ++j) {
            const Corr prod = compose(pis[i], pis[j]);
            const Corr want = i == j ? pis[i] : zero();
            if (prod != want)
                bail("composition of grades " + std::to_string(i) + "," +
                         std::to_string(j) + " is not " +
                         (i == j ? "idempotent" : "zero"),
                     prod - want);
        }

    for (long n : {2L, 3L}) {
        const Corr gr = graph_class(n);
        for (int i = 0; i <= top; ++i) {
            const Rat eig = integer_power(n, i);
            if (output_pullback(n, pis[i]) != pis[i].scaled(eig))
                bail("output-side pullback eigenvalue " + std::to_string(n) + "^" +
                         std::to_string(i) + " fails",
                     output_pullback(n, pis[i]) - pis[i].scaled(eig));
            if (compose(gr, pis[i]) != pis[i].scaled(eig))
                bail("left graph composition at n=" + std::to_string(n) +
                         " misses eigenvalue on grade " + std::to_string(i),
                     compose(gr, pis[i]) - pis[i].scaled(eig));
            if (compose(pis[i], gr) != pis[i].scaled(eig))
                bail("right graph composition at n=" + std::to_string(n) +
                         " misses eigenvalue on grade " + std::to_string(i),
                     compose(pis[i], gr) - pis[i].scaled(eig));
        }
        const auto interp = projectors_by_interpolation(n);
        for (int i = 0; i <= top; ++i)
            if (interp[i] != pis[i])
                bail("interpolation at n=" + std::to_string(n) +
                         " disagrees on grade " + std::to_string(i),
                     interp[i] - pis[i]);
    }

    for (int i = 0; i <= top; ++i)
        if (transpose(pis[i]) != pis[top - i])
            bail("transpose duality fails on grade " + std::to_string(i),
                 transpose(pis[i]) - pis[top - i]);

    return pis;
}

bool CorrespondenceCalculus::realization_faithful() const {
    // Matrix of alpha |-> (realize(alpha) evaluated on every basis class),
    // restricted to t-free correspondences; t-dressed ones reduce to this
    // block monomial by monomial.  Faithful iff the matrix has full rank.
    const int dim = base_->dim();
    const auto& gram = base_->gram();
    std::vector<std::vector<Rat>> m(dim * dim, std::vector<Rat>(dim * dim, Rat(0)));
    for (int j = 0; j < dim; ++j)
        for (int b = 0; b < dim; ++b)
            for (int a = 0; a < dim; ++a)
                m[j * dim + b][ti_.pair(a, b)] = gram[j][a];
    return matrix_rank(std::move(m)) == dim * dim;
}

std::vector<MotiveSummand> motive_decompose(const ModelPtr& model, int order) {
    CorrespondenceCalculus calc(model, order);
    const auto pis = calc.canonical_projectors();
    std::vector<MotiveSummand> out;
    out.reserve(pis.size());
    for (int i = 0; i < static_cast<int>(pis.size()); ++i) {
        if (t_zero(pis[i]) != pis[i])
            throw std::logic_error(
                "grade " + std::to_string(i) +
                " projector carries nonconstant coefficients on model '" +
                model->name() + "'");
        out.push_back(MotiveSummand{model, pis[i], i, 0});
    }
    return out;
}

int matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(m[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Rat inv_head = Rat(1) / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] = Rat(m[rank][c] * inv_head);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || sgn(m[r][col]) == 0) continue;
            const Rat f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= Rat(f * m[rank][c]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace fmcob
