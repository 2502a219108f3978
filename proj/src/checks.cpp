#include "fmcob/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fmcob/motives.hpp"
#include "fmcob/numerical.hpp"
#include "fmcob/omega.hpp"
#include "fmcob/rng.hpp"
#include "fmcob/series.hpp"

namespace fmcob {

namespace {

std::string bidegree_str(int p, int s) {
    return "(" + std::to_string(p) + "," + std::to_string(s) + ")";
}

/// Deterministic pool: every basis class plus seeded random classes.
std::vector<OmegaClass> class_pool(const ModelPtr& m, int order, std::uint64_t seed,
                                   int random_count) {
    std::vector<OmegaClass> pool;
    for (int i = 0; i < m->dim(); ++i)
        pool.push_back(OmegaClass::from_element(m, order, m->e(i)));
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k) pool.push_back(rng.omega(m, order));
    return pool;
}

Rat sign_of_g(int g) { return g % 2 ? Rat(-1) : Rat(1); }

}  // namespace

Report check_series_suite(int order, std::uint64_t seed, int random_count) {
    Report rep;
    const std::string mn = "series";
    const TPoly zero = TPoly::zero(order);

    {
        Series<TPoly> collapsed = compose(G_series(order), lambda_series(order));
        rep.check(collapsed == exp_u_series(order, zero), "series.kernel-collapse", mn);
    }
    {
        Series<TPoly> l = l_series(order);
        rep.check(compose(l, lambda_series(order)) == series_u(order, zero) &&
                      compose(lambda_series(order), l) == series_u(order, zero),
                  "series.reversion-mutual", mn);
    }
    {
        Rng rng(seed);
        bool ok = true;
        std::string wit = "-";
        for (int k = 0; k < random_count && ok; ++k) {
            Series<Rat> f = rng.series_over_rat(order);
            Series<Rat> g = revert(f);
            if (compose(g, f) != series_u(order, Rat(0)) ||
                compose(f, g) != series_u(order, Rat(0))) {
                ok = false;
                wit = "sample " + std::to_string(k);
            }
        }
        rep.check(ok, "series.reversion-rational", mn, wit);
    }
    {
        Rng rng(seed + 1);
        bool ok = true;
        std::string wit = "-";
        for (int k = 0; k < random_count && ok; ++k) {
            Series<TPoly> f = rng.series_over_tpoly(order);
            Series<TPoly> g = revert(f);
            if (compose(g, f) != series_u(order, zero) ||
                compose(f, g) != series_u(order, zero)) {
                ok = false;
                wit = "sample " + std::to_string(k);
            }
        }
        rep.check(ok, "series.reversion-polynomial", mn, wit);
    }
    {
        Rng rng(seed + 2);
        bool ok = true;
        for (int k = 0; k < 5 && ok; ++k) {
            Series<TPoly> f = rng.series_over_tpoly(order);
            Series<TPoly> body = f - series_u(order, zero);  // zero constant, no unit
            ok = log_series(exp_series(body)) == body;
        }
        rep.check(ok, "series.log-exp-roundtrip", mn);
    }
    return rep;
}

Report check_model(const ModelPtr& model) {
    Report rep = model->validate();
    if (model->has_fourier()) {
        NumericalKernel N = numerical_kernel(model);
        rep.check(fourier_preserves_kernel(N), "numerical.kernel-stable-under-transform",
                  model->name());
    }
    return rep;
}

Report check_transform_suite(const ModelPtr& model, int order, std::uint64_t seed,
                             int random_count) {
    Report rep;
    const std::string mn = model->name();
    if (!model->has_fourier()) {
        rep.add(CheckStatus::Skip, "transform.suite", mn, "model has no transform");
        return rep;
    }
    const int g = model->g();
    const std::vector<OmegaClass> pool = class_pool(model, order, seed, random_count);

    {
        bool ok = true;
        std::string wit = "-";
        for (std::size_t k = 0; k < pool.size() && ok; ++k) {
            OmegaClass lhs = fourier_via_psi(fourier_via_psi(pool[k]));
            OmegaClass rhs = omega_sigma_star(pool[k]).scaled(sign_of_g(g));
            if (lhs != rhs) {
                ok = false;
                wit = "class " + std::to_string(k);
            }
        }
        rep.check(ok, "transform.involution", mn, wit);
    }
    {
        // product-exchange pairs: all basis pairs plus a few random pairs
        std::vector<std::pair<OmegaClass, OmegaClass>> pairs;
        for (int i = 0; i < model->dim(); ++i)
            for (int j = 0; j < model->dim(); ++j)
                pairs.emplace_back(OmegaClass::from_element(model, order, model->e(i)),
                                   OmegaClass::from_element(model, order, model->e(j)));
        Rng rng(seed + 10);
        for (int k = 0; k < 5; ++k)
            pairs.emplace_back(rng.omega(model, order), rng.omega(model, order));

        bool star_to_dot = true, dot_to_star = true;
        std::string wit1 = "-", wit2 = "-";
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& [x, y] = pairs[k];
            if (star_to_dot &&
                fourier_via_psi(omega_pontryagin(x, y)) !=
                    fourier_via_psi(x) * fourier_via_psi(y)) {
                star_to_dot = false;
                wit1 = "pair " + std::to_string(k);
            }
            if (dot_to_star &&
                fourier_via_psi(x * y) !=
                    omega_pontryagin(fourier_via_psi(x), fourier_via_psi(y))
                        .scaled(sign_of_g(g))) {
                dot_to_star = false;
                wit2 = "pair " + std::to_string(k);
            }
        }
        rep.check(star_to_dot, "transform.convolution-to-product", mn, wit1);
        rep.check(dot_to_star, "transform.product-to-convolution", mn, wit2);
    }
    {
        bool push_ok = true, pull_ok = true;
        std::string wit1 = "-", wit2 = "-";
        for (long m : {2L, 3L, -2L})
            for (std::size_t k = 0; k < pool.size(); ++k) {
                const OmegaClass& x = pool[k];
                if (push_ok && fourier_via_psi(omega_mult_pushforward(m, x)) !=
                                   omega_mult_pullback(m, fourier_via_psi(x))) {
                    push_ok = false;
                    wit1 = "m=" + std::to_string(m) + " class " + std::to_string(k);
                }
                if (pull_ok && fourier_via_psi(omega_mult_pullback(m, x)) !=
                                   omega_mult_pushforward(m, fourier_via_psi(x))) {
                    pull_ok = false;
                    wit2 = "m=" + std::to_string(m) + " class " + std::to_string(k);
                }
            }
        rep.check(push_ok, "transform.isogeny-pushforward-exchange", mn, wit1);
        rep.check(pull_ok, "transform.isogeny-pullback-exchange", mn, wit2);
    }
    {
        // Pure-codimension x: the codim-q component y_q of F(x) is an
        // n*-eigenvector with eigenvalue n^(g-p+q).
        bool ok = true;
        std::string wit = "-";
        for (std::size_t k = 0; k < pool.size() && ok; ++k) {
            std::map<int, OmegaClass> by_p;
            for (const auto& [ps, comp] : beauville_decompose(pool[k])) {
                auto it = by_p.find(ps.first);
                if (it == by_p.end())
                    by_p.emplace(ps.first, comp);
                else
                    it->second = it->second + comp;
            }
            for (const auto& [p, xp] : by_p) {
                OmegaClass fx = fourier_via_psi(xp);
                std::map<int, OmegaClass> by_q;
                for (const auto& [qs, comp] : beauville_decompose(fx)) {
                    auto it = by_q.find(qs.first);
                    if (it == by_q.end())
                        by_q.emplace(qs.first, comp);
                    else
                        it->second = it->second + comp;
                }
                for (const auto& [q, yq] : by_q) {
                    for (long n : {2L, 3L})
                        if (omega_mult_pullback(n, yq) !=
                            yq.scaled(integer_power(n, g - p + q))) {
                            ok = false;
                            wit = "class " + std::to_string(k) + " p=" +
                                  std::to_string(p) + " q=" + std::to_string(q);
                        }
                }
            }
        }
        rep.check(ok, "transform.component-eigenvalue", mn, wit);
    }
    {
        const bool carrier_ok = model->pairing_perfect() || model->kernel_carrier();
        if (!carrier_ok) {
            rep.add(CheckStatus::Skip, "transform.route-agreement", mn,
                    "pairing degenerate and no carrier declared");
        } else if (order < 2 * g) {
            rep.add(CheckStatus::Skip, "transform.route-agreement", mn,
                    "order below 2g; the kernel route needs order >= " +
                        std::to_string(2 * g));
        } else {
            FourierKernel K(model, order);
            bool ok = true;
            std::string wit = "-";
            for (std::size_t k = 0; k < pool.size() && ok; ++k)
                if (K.apply(pool[k]) != fourier_via_psi(pool[k])) {
                    ok = false;
                    wit = "class " + std::to_string(k);
                }
            rep.check(ok, "transform.route-agreement", mn, wit);
        }
    }
    return rep;
}

Report check_decomposition_suite(const ModelPtr& model, int order, std::uint64_t seed,
                                 int random_count) {
    Report rep;
    const std::string mn = model->name();
    const int g = model->g();
    const std::vector<OmegaClass> pool = class_pool(model, order, seed, random_count);

    bool sum_ok = true, eigen_ok = true, bounds_ok = true;
    std::string wit_sum = "-", wit_eigen = "-", wit_bounds = "-";
    std::vector<std::pair<std::pair<int, int>, OmegaClass>> components;
    for (std::size_t k = 0; k < pool.size(); ++k) {
        auto comps = beauville_decompose(pool[k]);
        OmegaClass sum(model, order);
        for (const auto& [ps, comp] : comps) {
            sum = sum + comp;
            components.emplace_back(ps, comp);
            const auto [p, s] = ps;
            const auto [lo, hi] = component_bounds(g, p);
            if (bounds_ok && (s < lo || s > hi)) {
                bounds_ok = false;
                wit_bounds = bidegree_str(p, s);
            }
            for (long n : {2L, 3L, 5L})
                if (eigen_ok && omega_mult_pullback(n, comp) !=
                                    comp.scaled(integer_power(n, 2 * p - s))) {
                    eigen_ok = false;
                    wit_eigen = bidegree_str(p, s) + " n=" + std::to_string(n);
                }
        }
        if (sum_ok && sum != pool[k]) {
            sum_ok = false;
            wit_sum = "class " + std::to_string(k);
        }
    }
    rep.check(sum_ok, "decompose.components-sum", mn, wit_sum);
    rep.check(eigen_ok, "decompose.eigenvalues", mn, wit_eigen);
    rep.check(bounds_ok, "decompose.weight-bounds", mn, wit_bounds);

    if (!model->has_fourier()) {
        rep.add(CheckStatus::Skip, "decompose.purity-equivalences", mn,
                "model has no transform");
    } else {
        bool ok = true;
        std::string wit = "-";
        for (const auto& [ps, comp] : components) {
            for (long m : {2L, 3L}) {
                PurityResult r = check_purity(comp, m);
                if (!r.all()) {
                    ok = false;
                    wit = bidegree_str(ps.first, ps.second) + " m=" + std::to_string(m);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.check(ok, "decompose.purity-equivalences", mn, wit);
    }

    {
        bool pull_ok = true, push_ok = true;
        std::string wit1 = "-", wit2 = "-";
        auto keys = [](const std::map<std::pair<int, int>, OmegaClass>& m) {
            std::set<std::pair<int, int>> out;
            for (const auto& [ps, c] : m) out.insert(ps);
            return out;
        };
        for (std::size_t k = 0; k < pool.size(); ++k) {
            auto base_keys = keys(beauville_decompose(pool[k]));
            for (long m : {2L, 3L}) {
                auto pull_keys =
                    keys(beauville_decompose(omega_mult_pullback(m, pool[k])));
                auto push_keys =
                    keys(beauville_decompose(omega_mult_pushforward(m, pool[k])));
                if (pull_ok && !std::includes(base_keys.begin(), base_keys.end(),
                                              pull_keys.begin(), pull_keys.end())) {
                    pull_ok = false;
                    wit1 = "class " + std::to_string(k) + " m=" + std::to_string(m);
                }
                if (push_ok && !std::includes(base_keys.begin(), base_keys.end(),
                                              push_keys.begin(), push_keys.end())) {
                    push_ok = false;
                    wit2 = "class " + std::to_string(k) + " m=" + std::to_string(m);
                }
            }
        }
        rep.check(pull_ok, "decompose.pullback-preserves-bidegree", mn, wit1);
        rep.check(push_ok, "decompose.pushforward-preserves-bidegree", mn, wit2);
    }
    return rep;
}

Report check_numerical_suite(const ModelPtr& model, int order) {
    Report rep;
    const std::string mn = model->name();
    const int g = model->g();
    NumericalKernel N = numerical_kernel(model);

    rep.pass("numerical.dimensions", mn,
             "kernel=" + std::to_string(N.kernel_dim()) +
                 " quotient=" + std::to_string(N.quotient_dim()));
    {
        // every kernel basis vector pairs to zero against the full truncated
        // spanning set
        bool ok = true;
        std::string wit = "-";
        const auto span = N.truncated_basis(order);
        for (std::size_t i = 0; i < N.basis.size() && ok; ++i) {
            OmegaClass b = OmegaClass::from_element(model, order, N.basis[i]);
            for (const auto& y : span)
                if (!omega_pairing(b, y).is_zero()) {
                    ok = false;
                    wit = "kernel vector " + std::to_string(i);
                    break;
                }
        }
        rep.check(ok, "numerical.kernel-membership", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (std::size_t i = 0; i < N.basis.size() && ok; ++i)
            for (int j = 0; j < model->dim(); ++j)
                if (!N.contains(model->mul(N.basis[i], model->e(j)))) {
                    ok = false;
                    wit = "kernel vector " + std::to_string(i) + " * " +
                          model->basis(j).name;
                    break;
                }
        rep.check(ok, "numerical.kernel-ideal", mn, wit);
    }
    {
        bool ok = true;
        std::string wit = "-";
        for (std::size_t i = 0; i < N.basis.size() && ok; ++i)
            if (sgn(model->degree(N.basis[i])) != 0) {
                ok = false;
                wit = "kernel vector " + std::to_string(i);
            }
        rep.check(ok, "numerical.kernel-degree-zero", mn, wit);
    }
    if (!model->has_fourier()) {
        rep.add(CheckStatus::Skip, "numerical.kernel-stable-under-transform", mn,
                "model has no transform");
        rep.add(CheckStatus::Skip, "numerical.convolution-nilpotence", mn,
                "model has no transform");
    } else {
        rep.check(fourier_preserves_kernel(N), "numerical.kernel-stable-under-transform",
                  mn);
        rep.check(star_power_vanishes(N, g + 1), "numerical.convolution-nilpotence", mn,
                  "power " + std::to_string(g + 1));
        if (N.kernel_dim() == 0) {
            rep.pass("numerical.convolution-with-class", mn, "kernel trivial");
        } else if (model->point_index() >= 0) {
            bool ok = star_power_with_class_vanishes(
                N, g,
                OmegaClass::from_element(model, order, model->e(model->point_index())));
            rep.check(ok, "numerical.convolution-with-class", mn,
                      "x = " + model->basis(model->point_index()).name);
        } else {
            rep.add(CheckStatus::Skip, "numerical.convolution-with-class", mn,
                    "no point class");
        }
    }
    return rep;
}

Report check_motives_suite(const ModelPtr& model, int order, std::uint64_t seed) {
    Report rep;
    const std::string mn = model->name();
    if (!model->pairing_perfect()) {
        rep.add(CheckStatus::Skip, "motives.suite", mn,
                "pairing degenerate; the correspondence calculus is undefined");
        return rep;
    }
    CorrespondenceCalculus calc(model, order);
    const int g = model->g();
    const int top = 2 * g;
    using Corr = CorrespondenceCalculus::Corr;

    const Corr delta = calc.diagonal();
    {
        bool ok = true;
        std::string wit = "-";
        for (const auto& [mon, w] : delta.terms())
            for (const auto& [ab, c] : w.coords()) {
                const BasisElement& l = model->basis(calc.pair_index().left(ab));
                const BasisElement& r = model->basis(calc.pair_index().right(ab));
                if (l.p + r.p != g || l.s + r.s != 0) {
                    ok = false;
                    wit = l.name + "(x)" + r.name;
                }
            }
        rep.check(ok, "motives.diagonal-bidegree", mn, wit);
    }
    rep.check(calc.transpose(delta) == delta, "motives.diagonal-transpose", mn);
    {
        bool ok = true;
        std::string wit = "-";
        std::vector<OmegaClass> pool = class_pool(model, order, seed, 3);
        for (std::size_t k = 0; k < pool.size() && ok; ++k)
            if (calc.realize(delta, pool[k]) != pool[k]) {
                ok = false;
                wit = "class " + std::to_string(k);
            }
        rep.check(ok, "motives.diagonal-identity", mn, wit);
    }

    bool have_projectors = false;
    std::vector<Corr> pis;
    try {
        pis = calc.canonical_projectors();
        have_projectors = true;
        rep.pass("motives.projector-extraction", mn);
    } catch (const std::logic_error& e) {
        rep.fail("motives.projector-extraction", mn, e.what());
    }

    if (have_projectors) {
        {
            Corr sum = calc.zero();
            for (const Corr& pi : pis) sum = sum + pi;
            rep.check(sum == delta, "motives.projector-sum", mn);
        }
        {
            bool ok = true;
            std::string wit = "-";
            for (int i = 0; i <= top && ok; ++i)
                for (int j = 0; j <= top && ok; ++j) {
                    Corr want = i == j ? pis[i] : calc.zero();
                    if (calc.compose(pis[i], pis[j]) != want) {
                        ok = false;
                        wit = "grades " + std::to_string(i) + "," + std::to_string(j);
                    }
                }
            rep.check(ok, "motives.projector-orthogonal-idempotent", mn, wit);
        }
        {
            bool eig_ok = true, graph_ok = true;
            std::string wit1 = "-", wit2 = "-";
            for (long n : {2L, 3L}) {
                Corr gr = calc.graph_class(n);
                for (int i = 0; i <= top; ++i) {
                    Rat eig = integer_power(n, i);
                    if (eig_ok && calc.output_pullback(n, pis[i]) != pis[i].scaled(eig)) {
                        eig_ok = false;
                        wit1 = "n=" + std::to_string(n) + " grade " + std::to_string(i);
                    }
                    if (graph_ok && (calc.compose(gr, pis[i]) != pis[i].scaled(eig) ||
                                     calc.compose(pis[i], gr) != pis[i].scaled(eig))) {
                        graph_ok = false;
                        wit2 = "n=" + std::to_string(n) + " grade " + std::to_string(i);
                    }
                }
            }
            rep.check(eig_ok, "motives.projector-eigenvalue", mn, wit1);
            rep.check(graph_ok, "motives.projector-graph-composition", mn, wit2);
        }
        {
            bool ok = true;
            std::string wit = "-";
            for (int i = 0; i <= top && ok; ++i)
                if (calc.transpose(pis[i]) != pis[top - i]) {
                    ok = false;
                    wit = "grade " + std::to_string(i);
                }
            rep.check(ok, "motives.projector-transpose-duality", mn, wit);
        }
        {
            bool ok = true;
            std::string wit = "-";
            for (long n : {2L, 3L}) {
                auto interp = calc.projectors_by_interpolation(n);
                for (int i = 0; i <= top; ++i)
                    if (interp[i] != pis[i]) {
                        ok = false;
                        wit = "n=" + std::to_string(n) + " grade " + std::to_string(i);
                    }
            }
            rep.check(ok, "motives.projector-uniqueness", mn, wit);
        }
        {
            bool ok = true;
            std::string wit = "-";
            for (int i = 0; i <= top && ok; ++i)
                if (t_zero(pis[i]) != pis[i]) {
                    ok = false;
                    wit = "grade " + std::to_string(i);
                }
            rep.check(ok, "motives.projector-coefficient-free", mn, wit);
        }
        {
            // realized projectors sum to the identity
            bool ok = true;
            std::string wit = "-";
            for (int j = 0; j < model->dim() && ok; ++j) {
                OmegaClass x = OmegaClass::from_element(model, order, model->e(j));
                OmegaClass acc(model, order);
                for (const Corr& pi : pis) acc = acc + calc.realize(pi, x);
                if (acc != x) {
                    ok = false;
                    wit = model->basis(j).name;
                }
            }
            rep.check(ok, "motives.projector-realization-sum", mn, wit);
        }
    }

    {
        bool ok = true;
        std::string wit = "-";
        for (long n : {1L, 2L, 3L}) {
            Corr gr = calc.graph_class(n);
            for (int j = 0; j < model->dim(); ++j) {
                OmegaClass x = OmegaClass::from_element(model, order, model->e(j));
                if (calc.realize(gr, x) != omega_mult_pullback(n, x)) {
                    ok = false;
                    wit = "n=" + std::to_string(n) + " " + model->basis(j).name;
                }
            }
        }
        rep.check(ok, "motives.graph-realizes-pullback", mn, wit);
        rep.check(calc.graph_class(1) == delta, "motives.graph-at-one", mn);
        rep.check(calc.compose(calc.graph_class(2), calc.graph_class(3)) ==
                      calc.graph_class(6),
                  "motives.graph-multiplicativity", mn);
    }
    {
        Rng rng(seed + 7);
        Corr a = Corr::from_element(calc.square(), order,
                                    rng.element(*calc.square(), 3), rng.monomial(order));
        Corr b = Corr::from_element(calc.square(), order,
                                    rng.element(*calc.square(), 3));
        Corr c = calc.transpose(calc.graph_class(2)) + a;
        rep.check(calc.compose(calc.graph_class(2), a) == calc.output_pullback(2, a),
                  "motives.graph-composition-law", mn);
        rep.check(calc.compose(calc.compose(c, b), a) ==
                      calc.compose(c, calc.compose(b, a)),
                  "motives.composition-associative", mn);
        rep.check(calc.transpose(calc.transpose(a)) == a,
                  "motives.transpose-involution", mn);
        {
            bool ok = true;
            std::string wit = "-";
            for (int j = 0; j < model->dim() && ok; ++j) {
                OmegaClass x = OmegaClass::from_element(model, order, model->e(j));
                if (calc.realize(calc.compose(b, a), x) !=
                    calc.realize(b, calc.realize(a, x))) {
                    ok = false;
                    wit = model->basis(j).name;
                }
            }
            rep.check(ok, "motives.realization-functorial", mn, wit);
        }
        rep.check(calc.realization_faithful(), "motives.realization-faithful", mn);
    }
    return rep;
}

Report check_all(const ModelPtr& model, int order, std::uint64_t seed,
                 int random_count) {
    Report rep = check_model(model);
    rep.append(check_transform_suite(model, order, seed, random_count));
    rep.append(check_decomposition_suite(model, order, seed, random_count));
    rep.append(check_numerical_suite(model, order));
    rep.append(check_motives_suite(model, order, seed));
    return rep;
}

}  // namespace fmcob
