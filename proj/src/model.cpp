#include "fmcob/model.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fmcob/ext_oracle.hpp"

namespace fmcob {

// --- ModelElement ------------------------------------------------------------

Rat ModelElement::coeff(int i) const {
    auto it = c_.find(i);
    return it == c_.end() ? Rat(0) : it->second;
}

ModelElement& ModelElement::add_coord(int i, const Rat& c) {
    if (sgn(c) == 0) return *this;
    auto it = c_.find(i);
    if (it == c_.end()) {
        c_[i] = c;
    } else {
        it->second += c;
        if (sgn(it->second) == 0) c_.erase(it);
    }
    return *this;
}

ModelElement ModelElement::operator+(const ModelElement& o) const {
    ModelElement r = *this;
    for (const auto& [i, c] : o.c_) r.add_coord(i, c);
    return r;
}

ModelElement ModelElement::operator-(const ModelElement& o) const {
    ModelElement r = *this;
    for (const auto& [i, c] : o.c_) r.add_coord(i, Rat(-c));
    return r;
}

ModelElement ModelElement::operator-() const {
    ModelElement r;
    for (const auto& [i, c] : c_) r.c_[i] = Rat(-c);
    return r;
}

ModelElement ModelElement::scaled(const Rat& c) const {
    ModelElement r;
    if (sgn(c) == 0) return r;
    for (const auto& [i, x] : c_) r.c_[i] = Rat(x * c);
    return r;
}

// --- helpers ------------------------------------------------------------------

Rat integer_power(long base, int exp) {
    if (exp < 0) throw std::logic_error("integer_power: negative exponent");
    Rat r(1);
    for (int k = 0; k < exp; ++k) r *= Rat(base);
    return r;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char ch : s) {
        unsigned char u = static_cast<unsigned char>(ch);
        if (!std::isalnum(u) && ch != '_' && ch != '.') return false;
    }
    return true;
}

namespace {

struct GaussResult {
    int rank = 0;
    bool invertible = false;
    std::vector<std::vector<Rat>> inverse;
};

// Exact Gauss-Jordan on a square matrix; also produces the inverse when the
// matrix is nonsingular.
GaussResult gauss(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int r = row; r < n; ++r)
            if (sgn(m[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[row]);
        std::swap(inv[pivot], inv[row]);
        Rat p = m[row][col];
        for (int c = 0; c < n; ++c) {
            m[row][c] /= p;
            inv[row][c] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col];
            for (int c = 0; c < n; ++c) {
                m[r][c] -= Rat(f * m[row][c]);
                inv[r][c] -= Rat(f * inv[row][c]);
            }
        }
        ++row;
    }
    GaussResult res;
    res.rank = row;
    res.invertible = (row == n);
    if (res.invertible) res.inverse = std::move(inv);
    return res;
}

}  // namespace

// --- BeauvilleAlgebra construction ---------------------------------------------

BeauvilleAlgebra::BeauvilleAlgebra(Data d) : d_(std::move(d)) {
    int n = dim();
    if (n == 0) throw std::invalid_argument("model '" + d_.name + "': empty basis");
    if (d_.g < 0) throw std::invalid_argument("model '" + d_.name + "': negative dimension");
    for (int i = 0; i < n; ++i) {
        const std::string& nm = d_.basis[i].name;
        if (!is_identifier(nm))
            throw std::invalid_argument("model '" + d_.name + "': bad basis name '" + nm + "'");
        if (!index_.emplace(nm, i).second)
            throw std::invalid_argument("model '" + d_.name + "': duplicate basis name '" + nm + "'");
    }
    for (int i = 0; i < n; ++i)
        if (d_.basis[i].p == 0 && d_.basis[i].s == 0) {
            if (unit_ >= 0)
                throw std::invalid_argument("model '" + d_.name +
                                            "': more than one basis class of bidegree (0,0)");
            unit_ = i;
        }
    if (unit_ < 0)
        throw std::invalid_argument("model '" + d_.name +
                                    "': no basis class of bidegree (0,0)");
    if (d_.degree.empty()) d_.degree.assign(n, Rat(0));
    if (static_cast<int>(d_.degree.size()) != n)
        throw std::invalid_argument("model '" + d_.name + "': degree table size mismatch");
    if (!d_.fourier.empty() && static_cast<int>(d_.fourier.size()) != n)
        throw std::invalid_argument("model '" + d_.name + "': transform table size mismatch");

    // Fill the full multiplication table: explicit upper-triangle entries,
    // implicit unit products, and the sign rule for the lower triangle.
    table_.assign(n, std::vector<ModelElement>(n));
    for (const auto& [key, value] : d_.products) {
        auto [i, j] = key;
        if (i < 0 || j < 0 || i >= n || j >= n || i > j)
            throw std::invalid_argument("model '" + d_.name +
                                        "': product table keys must satisfy 0 <= i <= j");
        if (i == unit_ && value != e(j))
            throw std::invalid_argument("model '" + d_.name + "': unit product for '" +
                                        d_.basis[j].name + "' is not the identity");
        if (j == unit_ && value != e(i))
            throw std::invalid_argument("model '" + d_.name + "': unit product for '" +
                                        d_.basis[i].name + "' is not the identity");
        table_[i][j] = value;
    }
    for (int j = 0; j < n; ++j) {
        table_[unit_][j] = e(j);
        table_[j][unit_] = e(j);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i == unit_ || j == unit_) continue;
            ModelElement v = table_[i][j];
            table_[j][i] = (parity(i) && parity(j)) ? -v : v;
        }

    gram_.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_[i][j] = degree(table_[i][j]);
    GaussResult gr = gauss(gram_);
    gram_rank_ = gr.rank;
    if (gr.invertible) {
        // pairing(e_j, dual_i) = sum_k G[j][k] x_k = delta_ij, so dual_i is
        // column i of the inverse Gram matrix.
        left_duals_.resize(n);
        for (int i = 0; i < n; ++i) {
            ModelElement di;
            for (int k = 0; k < n; ++k) di.add_coord(k, gr.inverse[k][i]);
            left_duals_[i] = di;
        }
    }

    for (int i = 0; i < n; ++i)
        if (d_.basis[i].p == d_.g && d_.basis[i].s == 0 && sgn(d_.degree[i]) != 0) {
            if (point_ >= 0) {
                point_ = -1;  // not unique
                break;
            }
            point_ = i;
        }

    if (!d_.carrier_embedding.empty() &&
        static_cast<int>(d_.carrier_embedding.size()) != n)
        throw std::invalid_argument("model '" + d_.name + "': carrier embedding size mismatch");
}

int BeauvilleAlgebra::index_of(const std::string& nm) const {
    auto it = index_.find(nm);
    return it == index_.end() ? -1 : it->second;
}

ModelElement BeauvilleAlgebra::e(int i) const {
    if (i < 0 || i >= dim()) throw std::out_of_range("basis index out of range");
    ModelElement x;
    x.add_coord(i, Rat(1));
    return x;
}

ModelElement BeauvilleAlgebra::e(const std::string& nm) const {
    int i = index_of(nm);
    if (i < 0)
        throw std::invalid_argument("model '" + d_.name + "': unknown basis class '" + nm + "'");
    return e(i);
}

// --- operations -----------------------------------------------------------------

ModelElement BeauvilleAlgebra::mul(const ModelElement& x, const ModelElement& y) const {
    ModelElement r;
    for (const auto& [i, a] : x.coords())
        for (const auto& [j, b] : y.coords()) {
            const ModelElement& t = table_.at(i).at(j);
            Rat f = Rat(a * b);
            for (const auto& [k, c] : t.coords()) r.add_coord(k, Rat(f * c));
        }
    return r;
}

const ModelElement& BeauvilleAlgebra::basis_fourier(int i) const {
    if (!has_fourier()) throw std::logic_error("model '" + d_.name + "' has no transform");
    return d_.fourier.at(i);
}

Rat BeauvilleAlgebra::basis_degree(int i) const { return d_.degree.at(i); }

ModelElement BeauvilleAlgebra::fourier(const ModelElement& x) const {
    if (!has_fourier()) throw std::logic_error("model '" + d_.name + "' has no transform");
    ModelElement r;
    for (const auto& [i, a] : x.coords())
        for (const auto& [k, c] : d_.fourier[i].coords()) r.add_coord(k, Rat(a * c));
    return r;
}

ModelElement BeauvilleAlgebra::fourier_hat(const ModelElement& x) const { return fourier(x); }

ModelElement BeauvilleAlgebra::sigma_star(const ModelElement& x) const {
    ModelElement r;
    for (const auto& [i, a] : x.coords()) r.add_coord(i, parity(i) ? Rat(-a) : a);
    return r;
}

ModelElement BeauvilleAlgebra::mult_pullback(long n, const ModelElement& x) const {
    ModelElement r;
    for (const auto& [i, a] : x.coords()) {
        int ex = 2 * d_.basis[i].p - d_.basis[i].s;
        r.add_coord(i, Rat(a * integer_power(n, ex)));
    }
    return r;
}

ModelElement BeauvilleAlgebra::mult_pushforward(long n, const ModelElement& x) const {
    ModelElement r;
    for (const auto& [i, a] : x.coords()) {
        int ex = 2 * d_.g - 2 * d_.basis[i].p + d_.basis[i].s;
        r.add_coord(i, Rat(a * integer_power(n, ex)));
    }
    return r;
}

ModelElement BeauvilleAlgebra::pontryagin(const ModelElement& x, const ModelElement& y) const {
    ModelElement conv = fourier_hat(mul(fourier(x), fourier(y)));
    conv = sigma_star(conv);
    return (d_.g % 2) ? -conv : conv;
}

Rat BeauvilleAlgebra::degree(const ModelElement& x) const {
    Rat r(0);
    for (const auto& [i, a] : x.coords()) r += Rat(a * d_.degree[i]);
    return r;
}

Rat BeauvilleAlgebra::pairing(const ModelElement& x, const ModelElement& y) const {
    return degree(mul(x, y));
}

const std::vector<ModelElement>& BeauvilleAlgebra::left_duals() const {
    if (left_duals_.empty())
        throw std::logic_error("model '" + d_.name +
                               "': pairing is degenerate, left duals do not exist");
    return left_duals_;
}

std::string BeauvilleAlgebra::format(const ModelElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : x.coords()) {
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) {
                out << '-';
                a = Rat(-a);
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = Rat(-a);
        }
        if (a != Rat(1))
            out << to_string(a) << '*';
        out << d_.basis[i].name;
        first = false;
    }
    return out.str();
}

// --- validate ---------------------------------------------------------------------

Report BeauvilleAlgebra::validate() const {
    Report rep;
    const std::string& mn = d_.name;
    int n = dim();

    {
        bool ok = true;
        std::string wit = "-";
        for (int j = 0; j < n && ok; ++j)
            if (table_[unit_][j] != e(j) || table_[j][unit_] != e(j)) {
                ok = false;
                wit = d_.basis[j].name;
            }
        rep.check(ok, "structure.unit", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (int i = 0; i < n && ok; ++i) {
            int p = d_.basis[i].p, s = d_.basis[i].s;
            if (p < 0 || p > d_.g || s < 2 * p - 2 * d_.g || s > std::min(2 * p, p)) {
                ok = false;
                wit = d_.basis[i].name;
            }
        }
        rep.check(ok, "structure.bigrade-bounds", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                int p = d_.basis[i].p + d_.basis[j].p;
                int s = d_.basis[i].s + d_.basis[j].s;
                for (const auto& [k, c] : table_[i][j].coords())
                    if (d_.basis[k].p != p || d_.basis[k].s != s) {
                        ok = false;
                        wit = d_.basis[i].name + "*" + d_.basis[j].name;
                        break;
                    }
            }
        rep.check(ok, "structure.product-bigrade", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                ModelElement rhs = table_[j][i];
                if (parity(i) && parity(j)) rhs = -rhs;
                if (table_[i][j] != rhs) {
                    ok = false;
                    wit = d_.basis[i].name + "*" + d_.basis[j].name;
                }
            }
        rep.check(ok, "structure.supercommutative", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n; ++k)
                    if (mul(table_[i][j], e(k)) != mul(e(i), table_[j][k])) {
                        ok = false;
                        wit = d_.basis[i].name + "*" + d_.basis[j].name + "*" + d_.basis[k].name;
                        break;
                    }
        rep.check(ok, "structure.associative", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (int i = 0; i < n && ok; ++i)
            if (sgn(d_.degree[i]) != 0 && (d_.basis[i].p != d_.g || d_.basis[i].s != 0)) {
                ok = false;
                wit = d_.basis[i].name;
            }
        rep.check(ok, "degree.support", mn, wit);
    }
    {
        bool any = false;
        for (int i = 0; i < n; ++i)
            if (sgn(d_.degree[i]) != 0) any = true;
        rep.check(any, "degree.nonzero", mn);
    }
    rep.check(d_.selfdual == pairing_perfect(), "pairing.selfdual-flag", mn,
              "declared " + std::string(d_.selfdual ? "true" : "false") + ", rank " +
                  std::to_string(gram_rank_) + "/" + std::to_string(n));

    if (!has_fourier()) {
        rep.add(CheckStatus::Skip, "fourier.bigrade", mn, "no transform");
        rep.add(CheckStatus::Skip, "fourier.involution", mn, "no transform");
        rep.add(CheckStatus::Skip, "fourier.product-exchange", mn, "no transform");
        rep.add(CheckStatus::Skip, "fourier.isogeny-exchange", mn, "no transform");
    } else {
        {
            bool ok = true;
            std::string wit = "-";
            for (int i = 0; i < n && ok; ++i) {
                int p = d_.g - d_.basis[i].p + d_.basis[i].s, s = d_.basis[i].s;
                for (const auto& [k, c] : d_.fourier[i].coords())
                    if (d_.basis[k].p != p || d_.basis[k].s != s) {
                        ok = false;
                        wit = d_.basis[i].name;
                        break;
                    }
            }
            rep.check(ok, "fourier.bigrade", mn, wit);
        }
        {
            bool ok = true;
            std::string wit = "-";
            Rat gs = (d_.g % 2) ? Rat(-1) : Rat(1);
            for (int i = 0; i < n && ok; ++i) {
                ModelElement lhs = fourier_hat(fourier(e(i)));
                ModelElement rhs = sigma_star(e(i)).scaled(gs);
                if (lhs != rhs) {
                    ok = false;
                    wit = d_.basis[i].name;
                }
            }
            rep.check(ok, "fourier.involution", mn, wit);
        }
        {
            bool ok = true;
            std::string wit = "-";
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    ModelElement fi = fourier(e(i)), fj = fourier(e(j));
                    ModelElement lhs1 = fourier(mul(e(i), e(j)));
                    ModelElement rhs1 = pontryagin(fi, fj);
                    if (d_.g % 2) rhs1 = -rhs1;
                    ModelElement lhs2 = fourier(pontryagin(e(i), e(j)));
                    ModelElement rhs2 = mul(fi, fj);
                    if (lhs1 != rhs1 || lhs2 != rhs2) {
                        ok = false;
                        wit = d_.basis[i].name + "," + d_.basis[j].name;
                    }
                }
            rep.check(ok, "fourier.product-exchange", mn, wit);
        }
        {
            bool ok = true;
            std::string wit = "-";
            for (long nn : {2L, -3L})
                for (int i = 0; i < n && ok; ++i) {
                    if (fourier(mult_pullback(nn, e(i))) !=
                            mult_pushforward(nn, fourier(e(i))) ||
                        fourier(mult_pushforward(nn, e(i))) !=
                            mult_pullback(nn, fourier(e(i)))) {
                        ok = false;
                        wit = d_.basis[i].name + ",n=" + std::to_string(nn);
                    }
                }
            rep.check(ok, "fourier.isogeny-exchange", mn, wit);
        }
    }

    {
        bool ok = true;
        std::string wit = "-";
        for (int i = 0; i < n && ok; ++i) {
            if (mult_pullback(2, mult_pullback(3, e(i))) != mult_pullback(6, e(i))) {
                ok = false;
                wit = d_.basis[i].name;
            }
        }
        rep.check(ok, "mult.functorial", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (long m : {2L, 3L, -2L})
            for (int i = 0; i < n && ok; ++i) {
                ModelElement lhs = mult_pushforward(m, mult_pullback(m, e(i)));
                ModelElement rhs = e(i).scaled(integer_power(m, 2 * d_.g));
                if (lhs != rhs) {
                    ok = false;
                    wit = d_.basis[i].name + ",m=" + std::to_string(m);
                }
            }
        rep.check(ok, "mult.composition", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                ModelElement lhs = mult_pullback(2, mul(e(i), e(j)));
                ModelElement rhs = mul(mult_pullback(2, e(i)), mult_pullback(2, e(j)));
                if (lhs != rhs) {
                    ok = false;
                    wit = d_.basis[i].name + "*" + d_.basis[j].name;
                }
            }
        rep.check(ok, "mult.ring-hom", mn, wit);
    }

    if (d_.has_declared_star) {
        if (!has_fourier()) {
            rep.fail("star.table", mn, "declared convolution table but no transform");
        } else {
            bool ok = true;
            std::string wit = "-";
            for (int i = 0; i < n && ok; ++i)
                for (int j = i; j < n && ok; ++j) {
                    ModelElement want;
                    auto it = d_.declared_star.find({i, j});
                    if (it != d_.declared_star.end()) want = it->second;
                    if (pontryagin(e(i), e(j)) != want) {
                        ok = false;
                        wit = d_.basis[i].name + "," + d_.basis[j].name;
                    }
                }
            rep.check(ok, "star.table", mn, wit);
        }
    }
    if (d_.has_declared_diagonal) {
        bool ok = true;
        std::string wit = "-";
        for (int x = 0; x < n && ok; ++x) {
            ModelElement image;
            for (const auto& [key, c] : d_.declared_diagonal) {
                Rat f = Rat(c * pairing(e(x), e(key.first)));
                if (sgn(f) != 0) image = image + e(key.second).scaled(f);
            }
            if (image != e(x)) {
                ok = false;
                wit = d_.basis[x].name;
            }
        }
        rep.check(ok, "diagonal.realization", mn, wit);
    }

    if (d_.kernel_carrier) {
        const BeauvilleAlgebra& K = *d_.kernel_carrier;
        const std::vector<int>& emb = d_.carrier_embedding;
        bool shape = static_cast<int>(emb.size()) == n;
        std::set<int> seen;
        for (int t : emb) {
            if (t < 0 || t >= K.dim()) shape = false;
            if (!seen.insert(t).second) shape = false;
        }
        rep.check(shape, "carrier.shape", mn);
        if (shape) {
            auto embed = [&](const ModelElement& x) {
                ModelElement y;
                for (const auto& [i, c] : x.coords()) y.add_coord(emb[i], c);
                return y;
            };
            rep.check(K.pairing_perfect(), "carrier.perfect", mn, K.name());
            rep.check(emb[unit_] == K.unit_index(), "carrier.unit", mn);
            {
                bool ok = true;
                std::string wit = "-";
                for (int i = 0; i < n && ok; ++i) {
                    const BasisElement& b = d_.basis[i];
                    const BasisElement& kb = K.basis(emb[i]);
                    if (b.p != kb.p || b.s != kb.s) {
                        ok = false;
                        wit = b.name;
                    }
                }
                rep.check(ok, "carrier.bigrade", mn, wit);
            }
            {
                bool ok = true;
                std::string wit = "-";
                for (int i = 0; i < n && ok; ++i)
                    for (int j = 0; j < n && ok; ++j)
                        if (K.mul(embed(e(i)), embed(e(j))) != embed(table_[i][j])) {
                            ok = false;
                            wit = d_.basis[i].name + "*" + d_.basis[j].name;
                        }
                rep.check(ok, "carrier.ring-map", mn, wit);
            }
            {
                bool ok = true;
                std::string wit = "-";
                for (int i = 0; i < n && ok; ++i)
                    if (K.degree(embed(e(i))) != d_.degree[i]) {
                        ok = false;
                        wit = d_.basis[i].name;
                    }
                rep.check(ok, "carrier.degree", mn, wit);
            }
            if (has_fourier() && K.has_fourier()) {
                bool ok = true;
                std::string wit = "-";
                for (int i = 0; i < n && ok; ++i)
                    if (K.fourier(embed(e(i))) != embed(fourier(e(i)))) {
                        ok = false;
                        wit = d_.basis[i].name;
                    }
                rep.check(ok, "carrier.fourier", mn, wit);
            } else if (has_fourier()) {
                rep.fail("carrier.fourier", mn, "carrier has no transform");
            }
        }
    }

    return rep;
}

// --- built-in models -----------------------------------------------------------

namespace {

Rat binom(int a, int b) {
    if (b < 0 || b > a) return Rat(0);
    Rat r(1);
    for (int i = 1; i <= b; ++i) {
        r *= Rat(a - b + i);
        r /= Rat(i);
    }
    return r;
}

std::string theta_name(int p) {
    if (p == 0) return "one";
    if (p == 1) return "theta";
    return "theta" + std::to_string(p);
}

// Install candidate transforms F(e_i) = sign_i * e_target[i] on `base` and
// keep the sign tuples under which the involution, both product-exchange
// identities, and carrier equivariance all hold.  Among the survivors, prefer
// the one sending the point class to +unit (without that normalization the
// kernel class has scalar part -1 and has no rational logarithm), then prefer
// +1 in basis order.
ModelPtr search_transform_signs(BeauvilleAlgebra::Data base, const std::vector<int>& target) {
    int n = static_cast<int>(base.basis.size());
    ModelPtr fallback;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        BeauvilleAlgebra::Data d = base;
        d.fourier.resize(n);
        for (int i = 0; i < n; ++i) {
            Rat s = (bits >> i) & 1u ? Rat(-1) : Rat(1);
            d.fourier[i].add_coord(target[i], s);
        }
        ModelPtr cand = std::make_shared<BeauvilleAlgebra>(d);
        const BeauvilleAlgebra& M = *cand;
        Rat gs = (M.g() % 2) ? Rat(-1) : Rat(1);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (M.fourier_hat(M.fourier(M.e(i))) != M.sigma_star(M.e(i)).scaled(gs)) ok = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                ModelElement fi = M.fourier(M.e(i)), fj = M.fourier(M.e(j));
                ModelElement rhs1 = M.pontryagin(fi, fj);
                if (M.g() % 2) rhs1 = -rhs1;
                if (M.fourier(M.mul(M.e(i), M.e(j))) != rhs1) ok = false;
                if (M.fourier(M.pontryagin(M.e(i), M.e(j))) != M.mul(fi, fj)) ok = false;
            }
        if (ok && d.kernel_carrier) {
            const BeauvilleAlgebra& K = *d.kernel_carrier;
            for (int i = 0; i < n && ok; ++i) {
                ModelElement fx = M.fourier(M.e(i));
                ModelElement lhs, rhs;
                for (const auto& [k, c] : fx.coords())
                    lhs.add_coord(d.carrier_embedding[k], c);
                rhs = K.fourier(K.e(d.carrier_embedding[i]));
                if (lhs != rhs) ok = false;
            }
        }
        if (!ok) continue;
        if (!fallback) fallback = cand;
        int pt = M.point_index();
        if (pt >= 0 && M.fourier(M.e(pt)).coeff(M.unit_index()) == Rat(1)) return cand;
    }
    if (!fallback)
        throw std::logic_error("model '" + base.name +
                               "': no sign assignment satisfies the transform identities");
    return fallback;
}

}  // namespace

ModelPtr taut_model(int g) {
    if (g < 1 || g > 6)
        throw std::invalid_argument("taut model dimension must be in 1..6");
    BeauvilleAlgebra::Data d;
    d.name = "taut:" + std::to_string(g);
    d.g = g;
    d.selfdual = true;
    for (int p = 0; p <= g; ++p) d.basis.push_back({theta_name(p), p, 0});
    for (int i = 1; i <= g; ++i)
        for (int j = i; j <= g; ++j)
            if (i + j <= g) {
                ModelElement v;
                v.add_coord(i + j, binom(i + j, i));
                d.products[{i, j}] = v;
            }
    d.degree.assign(g + 1, Rat(0));
    d.degree[g] = Rat(1);
    ExtOracle oracle(g);
    std::vector<Rat> signs = oracle.taut_fourier_signs();
    d.fourier.resize(g + 1);
    for (int p = 0; p <= g; ++p) d.fourier[p].add_coord(g - p, signs[p]);
    return std::make_shared<BeauvilleAlgebra>(std::move(d));
}

ModelPtr ell_signed_model() {
    BeauvilleAlgebra::Data d;
    d.name = "ell-signed";
    d.g = 1;
    d.selfdual = true;
    d.basis = {{"one", 0, 0}, {"a", 1, 1}, {"ad", 0, -1}, {"theta", 1, 0}};
    ModelElement th;
    th.add_coord(3, Rat(1));
    d.products[{1, 2}] = th;  // a * ad = theta; the sign rule gives ad * a = -theta
    d.degree = {Rat(0), Rat(0), Rat(0), Rat(1)};
    return search_transform_signs(std::move(d), {3, 1, 2, 0});
}

ModelPtr ell_rk1_model() {
    ModelPtr carrier = ell_signed_model();
    BeauvilleAlgebra::Data d;
    d.name = "ell-rk1";
    d.g = 1;
    d.selfdual = false;
    d.basis = {{"one", 0, 0}, {"theta", 1, 0}, {"piP", 1, 1}};
    // every product of positive-codimension classes vanishes
    d.degree = {Rat(0), Rat(1), Rat(0)};
    d.kernel_carrier = carrier;
    d.carrier_embedding = {carrier->index_of("one"), carrier->index_of("theta"),
                           carrier->index_of("a")};
    return search_transform_signs(std::move(d), {1, 0, 2});
}

ModelPtr tensor_product(const ModelPtr& a, const ModelPtr& b, const std::string& name) {
    if (!a || !b) throw std::invalid_argument("tensor_product: null factor");
    const BeauvilleAlgebra& A = *a;
    const BeauvilleAlgebra& B = *b;
    TensorIndex ti{A.dim(), B.dim()};
    int n = A.dim() * B.dim();

    BeauvilleAlgebra::Data d;
    d.name = name.empty() ? "tensor(" + A.name() + "," + B.name() + ")" : name;
    d.g = A.g() + B.g();
    d.selfdual = A.selfdual() && B.selfdual();
    d.basis.resize(n);
    d.degree.assign(n, Rat(0));
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) {
            int k = ti.pair(i, j);
            d.basis[k] = {A.basis(i).name + "." + B.basis(j).name,
                          A.basis(i).p + B.basis(j).p, A.basis(i).s + B.basis(j).s};
            d.degree[k] = Rat(A.basis_degree(i) * B.basis_degree(j));
        }
    // (x (x) y)(z (x) w) = (-1)^(par y * par z) xz (x) yw
    for (int I = 0; I < n; ++I)
        for (int J = I; J < n; ++J) {
            int i = ti.left(I), j = ti.right(I), k = ti.left(J), l = ti.right(J);
            const ModelElement& xz = A.basis_product(i, k);
            const ModelElement& yw = B.basis_product(j, l);
            if (xz.is_zero() || yw.is_zero()) continue;
            Rat sign = (B.parity(j) && A.parity(k)) ? Rat(-1) : Rat(1);
            ModelElement v;
            for (const auto& [x, cx] : xz.coords())
                for (const auto& [y, cy] : yw.coords())
                    v.add_coord(ti.pair(x, y), Rat(sign * cx * cy));
            if (!v.is_zero()) d.products[{I, J}] = v;
        }
    if (A.has_fourier() && B.has_fourier()) {
        d.fourier.resize(n);
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < B.dim(); ++j) {
                ModelElement v;
                for (const auto& [x, cx] : A.basis_fourier(i).coords())
                    for (const auto& [y, cy] : B.basis_fourier(j).coords())
                        v.add_coord(ti.pair(x, y), Rat(cx * cy));
                d.fourier[ti.pair(i, j)] = v;
            }
    }
    if (!(A.pairing_perfect() && B.pairing_perfect())) {
        ModelPtr ka = A.pairing_perfect() ? a : A.kernel_carrier();
        ModelPtr kb = B.pairing_perfect() ? b : B.kernel_carrier();
        if (ka && kb) {
            std::vector<int> ea(A.dim()), eb(B.dim());
            for (int i = 0; i < A.dim(); ++i)
                ea[i] = A.pairing_perfect() ? i : A.carrier_embedding()[i];
            for (int j = 0; j < B.dim(); ++j)
                eb[j] = B.pairing_perfect() ? j : B.carrier_embedding()[j];
            d.kernel_carrier = tensor_product(ka, kb);
            TensorIndex tk{ka->dim(), kb->dim()};
            d.carrier_embedding.resize(n);
            for (int i = 0; i < A.dim(); ++i)
                for (int j = 0; j < B.dim(); ++j)
                    d.carrier_embedding[ti.pair(i, j)] = tk.pair(ea[i], eb[j]);
        }
    }
    return std::make_shared<BeauvilleAlgebra>(std::move(d));
}

namespace {
std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}
}  // namespace

ModelPtr builtin_model(const std::string& spec) {
    if (spec == "ell-rk1") return ell_rk1_model();
    if (spec == "ell-signed") return ell_signed_model();
    if (spec.rfind("taut:", 0) == 0) {
        std::optional<int> g = parse_int(spec.substr(5));
        if (!g)
            throw std::invalid_argument("bad model spec '" + spec + "': expected taut:<g>");
        return taut_model(*g);
    }
    if (spec.rfind("product:", 0) == 0) {
        std::string arg = spec.substr(8);
        std::size_t comma = arg.find(',');
        std::optional<int> g1, g2;
        if (comma != std::string::npos) {
            g1 = parse_int(arg.substr(0, comma));
            g2 = parse_int(arg.substr(comma + 1));
        }
        if (!g1 || !g2)
            throw std::invalid_argument("bad model spec '" + spec +
                                        "': expected product:<g1>,<g2>");
        return tensor_product(taut_model(*g1), taut_model(*g2), spec);
    }
    throw std::invalid_argument("unknown model '" + spec +
                                "' (expected taut:<g>, ell-rk1, ell-signed, product:<g1>,<g2>, "
                                "or a model file path)");
}

}  // namespace fmcob
