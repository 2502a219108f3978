#include "fmcob/omega.hpp"

#include <sstream>
#include <stdexcept>

#include "fmcob/tau.hpp"

namespace fmcob {

// --- OmegaClass ----------------------------------------------------------------

OmegaClass::OmegaClass(ModelPtr model, int order)
    : model_(std::move(model)), order_(order) {
    if (!model_) throw std::invalid_argument("class over a null model");
    if (order_ < 0) throw std::invalid_argument("negative truncation order");
}

OmegaClass OmegaClass::unit(ModelPtr model, int order) {
    OmegaClass x(std::move(model), order);
    x.add_term(Monomial(), x.model_->unit());
    return x;
}

OmegaClass OmegaClass::from_element(ModelPtr model, int order, const ModelElement& c,
                                    const Monomial& m) {
    OmegaClass x(std::move(model), order);
    x.add_term(m, c);
    return x;
}

ModelElement OmegaClass::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ModelElement() : it->second;
}

OmegaClass& OmegaClass::add_term(const Monomial& m, const ModelElement& c) {
    if (c.is_zero() || m.weight() > order_) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

void OmegaClass::compat(const OmegaClass& o) const {
    if (model_.get() != o.model_.get() || order_ != o.order_)
        throw std::invalid_argument("classes live over different models or orders");
}

OmegaClass OmegaClass::operator+(const OmegaClass& o) const {
    compat(o);
    OmegaClass r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

OmegaClass OmegaClass::operator-(const OmegaClass& o) const {
    compat(o);
    OmegaClass r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

OmegaClass OmegaClass::operator-() const {
    OmegaClass r(model_, order_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

OmegaClass OmegaClass::operator*(const OmegaClass& o) const {
    compat(o);
    OmegaClass r(model_, order_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            if (m.weight() > order_) continue;
            r.add_term(m, model_->mul(c1, c2));
        }
    return r;
}

OmegaClass OmegaClass::scaled(const Rat& c) const {
    OmegaClass r(model_, order_);
    for (const auto& [m, v] : terms_) r.add_term(m, v.scaled(c));
    return r;
}

OmegaClass OmegaClass::scaled(const TPoly& f) const {
    OmegaClass r(model_, order_);
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [m, v] : terms_) {
            Monomial mm = mf * m;
            if (mm.weight() > order_) continue;
            r.add_term(mm, v.scaled(cf));
        }
    return r;
}

bool OmegaClass::operator==(const OmegaClass& o) const {
    compat(o);
    return terms_ == o.terms_;
}

std::string OmegaClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        if (!m.trivial()) out << m.to_string() << "*";
        out << "(" << model_->format(c) << ")";
        first = false;
    }
    return out.str();
}

// --- the two transform routes -----------------------------------------------------

ChowTClass psi(const OmegaClass& x) { return x; }
OmegaClass psi_inv(const ChowTClass& x) { return x; }

OmegaClass fourier_via_psi(const OmegaClass& x) {
    ChowTClass side = psi(x);
    OmegaClass out(side.model(), side.order());
    for (const auto& [m, c] : side.terms()) out.add_term(m, side.model()->fourier(c));
    return psi_inv(out);
}

FourierKernel::FourierKernel(ModelPtr model, int order)
    : base_(std::move(model)),
      kappa_(base_, order),  // placeholders, rebuilt below over the square
      c1_(base_, order),
      twisted_(base_, order) {
    if (!base_) throw std::invalid_argument("kernel route over a null model");
    carrier_ = base_->pairing_perfect() ? base_ : base_->kernel_carrier();
    if (!carrier_)
        throw std::invalid_argument(
            "kernel route on '" + base_->name() +
            "': pairing is degenerate and no kernel carrier is declared");
    if (!carrier_->has_fourier())
        throw std::invalid_argument("kernel route on '" + base_->name() +
                                    "': carrier has no transform");
    int n = base_->dim();
    embed_.resize(n);
    for (int i = 0; i < n; ++i)
        embed_[i] = (carrier_.get() == base_.get()) ? i : base_->carrier_embedding()[i];
    restrict_.assign(carrier_->dim(), -1);
    for (int i = 0; i < n; ++i) restrict_[embed_[i]] = i;

    square_ = tensor_product(carrier_, carrier_);
    ti_ = TensorIndex{carrier_->dim(), carrier_->dim()};

    const std::vector<ModelElement>& duals = carrier_->left_duals();
    ModelElement kel;
    for (int i = 0; i < carrier_->dim(); ++i) {
        ModelElement fb = carrier_->fourier(carrier_->e(i));
        for (const auto& [j, cj] : duals[i].coords())
            for (const auto& [k, ck] : fb.coords())
                kel.add_coord(ti_.pair(j, k), Rat(cj * ck));
    }
    int sq_unit = ti_.pair(carrier_->unit_index(), carrier_->unit_index());
    if (kel.coeff(sq_unit) != Rat(1))
        throw std::invalid_argument(
            "kernel route on '" + base_->name() +
            "': kernel class is not unital (the transform must send the point class "
            "to +unit)");

    // X = log(kappa), an exact nilpotent logarithm on the product model.
    ModelElement nil = kel;
    nil.add_coord(sq_unit, Rat(-1));
    ModelElement x, power = nil;
    int cap = 4 * square_->g() + 5;
    for (int k = 1; k <= cap && !power.is_zero(); ++k) {
        Rat c = Rat(Rat((k % 2) ? 1 : -1) / Rat(k));
        x = x + power.scaled(c);
        power = square_->mul(power, nil);
    }
    if (!power.is_zero())
        throw std::logic_error("kernel route: kernel class is not unipotent");

    kappa_ = OmegaClass::from_element(square_, order, kel);
    c1_ = OmegaClass::from_element(square_, order, x);

    OmegaClass xp = c1_;
    for (int k = 1; k <= order; ++k) xp = xp * c1_;
    if (!xp.is_zero())
        throw std::invalid_argument(
            "kernel route on '" + base_->name() + "': truncation order " +
            std::to_string(order) +
            " is too small (the kernel first Chern class must be nilpotent within "
            "the order; order >= 2g always suffices)");

    OmegaClass sq_one = OmegaClass::unit(square_, order);
    OmegaClass c1_twisted = twisted_c1(TauVector::canonical(order), c1_, sq_one);
    twisted_ = eval_series_at(G_series(order), c1_twisted);
}

OmegaClass FourierKernel::apply(const OmegaClass& x) const {
    if (x.model().get() != base_.get() || x.order() != kappa_.order())
        throw std::invalid_argument("kernel route applied to a class over another model");
    OmegaClass lifted(square_, x.order());
    int ku = carrier_->unit_index();
    for (const auto& [m, c] : x.terms()) {
        ModelElement lc;
        for (const auto& [i, v] : c.coords()) lc.add_coord(ti_.pair(embed_[i], ku), v);
        lifted.add_term(m, lc);
    }
    OmegaClass prod = lifted * twisted_;
    OmegaClass out(base_, x.order());
    for (const auto& [m, w] : prod.terms()) {
        ModelElement pushed;
        for (const auto& [idx, v] : w.coords()) {
            Rat d = carrier_->basis_degree(ti_.left(idx));
            if (sgn(d) != 0) pushed.add_coord(ti_.right(idx), Rat(v * d));
        }
        ModelElement back;
        for (const auto& [k, v] : pushed.coords()) {
            if (restrict_[k] < 0)
                throw std::logic_error(
                    "kernel route on '" + base_->name() +
                    "': transform left the embedded image inside the carrier");
            back.add_coord(restrict_[k], v);
        }
        out.add_term(m, back);
    }
    return out;
}

OmegaClass fourier_via_kernel(const OmegaClass& x) {
    FourierKernel k(x.model(), x.order());
    return k.apply(x);
}

// --- t-linear operator extensions ----------------------------------------------

namespace {
template <typename F>
OmegaClass map_coeffs(const OmegaClass& x, F&& f) {
    OmegaClass r(x.model(), x.order());
    for (const auto& [m, c] : x.terms()) r.add_term(m, f(c));
    return r;
}
}  // namespace

OmegaClass omega_sigma_star(const OmegaClass& x) {
    return map_coeffs(x, [&](const ModelElement& c) { return x.model()->sigma_star(c); });
}

OmegaClass omega_mult_pullback(long n, const OmegaClass& x) {
    return map_coeffs(x,
                      [&](const ModelElement& c) { return x.model()->mult_pullback(n, c); });
}

OmegaClass omega_mult_pushforward(long n, const OmegaClass& x) {
    return map_coeffs(
        x, [&](const ModelElement& c) { return x.model()->mult_pushforward(n, c); });
}

OmegaClass omega_pontryagin(const OmegaClass& x, const OmegaClass& y) {
    OmegaClass fx = fourier_via_psi(x), fy = fourier_via_psi(y);
    OmegaClass conv = fx * fy;
    OmegaClass back = map_coeffs(conv, [&](const ModelElement& c) {
        return x.model()->fourier_hat(c);
    });
    back = omega_sigma_star(back);
    return (x.model()->g() % 2) ? -back : back;
}

TPoly omega_degree(const OmegaClass& x) {
    TPoly out = TPoly::zero(x.order());
    for (const auto& [m, c] : x.terms()) out.add_term(m, x.model()->degree(c));
    return out;
}

OmegaClass t_zero(const OmegaClass& x) {
    OmegaClass r(x.model(), x.order());
    r.add_term(Monomial(), x.coeff(Monomial()));
    return r;
}

std::pair<int, int> induced_bidegree(const BeauvilleAlgebra& alg, int basis_index,
                                     const Monomial& m) {
    int w = m.weight();
    return {alg.basis(basis_index).p - w, alg.basis(basis_index).s - 2 * w};
}

std::map<std::pair<int, int>, OmegaClass> beauville_decompose(const OmegaClass& x) {
    std::map<std::pair<int, int>, OmegaClass> out;
    for (const auto& [m, c] : x.terms())
        for (const auto& [i, v] : c.coords()) {
            std::pair<int, int> key = induced_bidegree(*x.model(), i, m);
            auto it = out.find(key);
            if (it == out.end())
                it = out.emplace(key, OmegaClass(x.model(), x.order())).first;
            ModelElement piece;
            piece.add_coord(i, v);
            it->second.add_term(m, piece);
        }
    return out;
}

std::pair<int, int> component_bounds(int g, int p) {
    return {2 * p - 2 * g, std::min(2 * p, p)};
}

PurityResult check_purity(const OmegaClass& x, long m) {
    PurityResult r;
    auto comps = beauville_decompose(x);
    if (comps.empty()) {
        r.pure = r.eigen_pullback = r.eigen_given = r.eigen_push = true;
        r.transform_codim = r.transform_pure = true;
        return r;
    }
    r.pure = comps.size() == 1;
    r.p = comps.begin()->first.first;
    r.s = comps.begin()->first.second;
    int g = x.model()->g();
    int pull_exp = 2 * r.p - r.s;
    int push_exp = 2 * g - 2 * r.p + r.s;

    r.eigen_pullback = true;
    for (long n : {2L, 3L, 5L})
        if (omega_mult_pullback(n, x) != x.scaled(integer_power(n, pull_exp)))
            r.eigen_pullback = false;
    r.eigen_given = omega_mult_pullback(m, x) == x.scaled(integer_power(m, pull_exp));
    r.eigen_push = omega_mult_pushforward(m, x) == x.scaled(integer_power(m, push_exp));

    OmegaClass fx = fourier_via_psi(x);
    r.transform_codim = true;
    r.transform_pure = true;
    for (const auto& [key, comp] : beauville_decompose(fx)) {
        if (key.first != g - r.p + r.s) r.transform_codim = false;
        if (key != std::make_pair(g - r.p + r.s, r.s)) r.transform_pure = false;
    }
    return r;
}

OmegaClass eval_series_at(const Series<TPoly>& f, const OmegaClass& x) {
    int order = x.order();
    OmegaClass acc = OmegaClass::unit(x.model(), order).scaled(f.coeff(0));
    OmegaClass power = OmegaClass::unit(x.model(), order);
    for (int k = 1; k <= order; ++k) {
        power = power * x;
        if (power.is_zero()) return acc;
        acc = acc + power.scaled(f.coeff(k));
    }
    power = power * x;
    if (!power.is_zero())
        throw std::invalid_argument(
            "series evaluation: the class is not nilpotent within the truncation "
            "order, the truncated series does not determine the value");
    return acc;
}

}  // namespace fmcob
