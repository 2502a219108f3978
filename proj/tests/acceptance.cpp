// Acceptance gate: nine exact, deterministic criteria run end to end at the
// full truncation order.  One PASS/FAIL line per criterion; the process exits
// nonzero when any criterion fails.  No tolerances anywhere: every comparison
// is exact rational equality.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fmcob/checks.hpp"
#include "fmcob/model_io.hpp"
#include "fmcob/motives.hpp"
#include "fmcob/numerical.hpp"
#include "fmcob/omega.hpp"
#include "fmcob/rng.hpp"
#include "fmcob/series.hpp"

using namespace fmcob;

namespace {

const int D = 8;  // full truncation order used throughout

std::vector<std::string> shipped_models() {
    return {"taut:1", "taut:2", "taut:3", "ell-signed", "ell-rk1", "product:1,1"};
}

// Print FAIL detail lines of a report, indented, so a red criterion is
// diagnosable from the acceptance log alone.
bool report_ok(const Report& r) {
    if (r.all_pass()) return true;
    for (const CheckLine& l : r.lines)
        if (l.status == CheckStatus::Fail)
            std::printf("    FAIL %s %s %s\n", l.identity.c_str(), l.model.c_str(),
                        l.witness.c_str());
    return false;
}

// 1. The multiplicative kernel series composed with the orientation series
//    collapses exactly to exp(u) at the full order.
bool criterion_kernel_collapse() {
    return compose(G_series(D), lambda_series(D)) == exp_u_series(D, TPoly::zero(D));
}

// 2. Fifty random formal series over Q and fifty over the coefficient ring
//    revert exactly: both compositions give back u.
bool criterion_reversion() {
    Rng rng(101);
    for (int k = 0; k < 50; ++k) {
        Series<Rat> f = rng.series_over_rat(D);
        Series<Rat> g = revert(f);
        if (compose(g, f) != series_u(D, Rat(0))) return false;
        if (compose(f, g) != series_u(D, Rat(0))) return false;
    }
    for (int k = 0; k < 50; ++k) {
        Series<TPoly> f = rng.series_over_tpoly(D);
        Series<TPoly> g = revert(f);
        if (compose(g, f) != series_u(D, TPoly::zero(D))) return false;
        if (compose(f, g) != series_u(D, TPoly::zero(D))) return false;
    }
    return true;
}

// 3. The matrix route and the geometric kernel route of the transform agree
//    on every basis class and on 100 random classes of every shipped model.
bool criterion_route_agreement() {
    Rng rng(102);
    bool ok = true;
    for (const std::string& spec : shipped_models()) {
        ModelPtr m = builtin_model(spec);
        FourierKernel fk(m, D);
        for (int i = 0; i < m->dim(); ++i) {
            OmegaClass x = OmegaClass::from_element(m, D, m->e(i));
            if (fk.apply(x) != fourier_via_psi(x)) {
                std::printf("    route mismatch on %s basis %s\n", spec.c_str(),
                            m->basis(i).name.c_str());
                ok = false;
            }
        }
        for (int k = 0; k < 100; ++k) {
            OmegaClass x = rng.omega(m, D);
            if (fk.apply(x) != fourier_via_psi(x)) {
                std::printf("    route mismatch on %s random #%d\n", spec.c_str(), k);
                ok = false;
                break;
            }
        }
    }
    return ok;
}

// 4. Transform laws on every shipped model: double transform is (-1)^g sigma*,
//    the transform exchanges the two products, exchanges isogeny pushforward
//    and pullback at scales 2, 3, -2, and acts on components with the
//    predicted eigenvalues.
bool criterion_transform_laws() {
    bool ok = true;
    for (const std::string& spec : shipped_models())
        ok = report_ok(check_transform_suite(builtin_model(spec), D, 103, 100)) && ok;
    return ok;
}

// 5. Eigenspace decomposition on 100 random classes per shipped model:
//    components sum back to the class, carry eigenvalue n^(2p-s) under n* for
//    n in {2,3,5}, and sit inside the weight-grade bounds.
bool criterion_decomposition() {
    bool ok = true;
    for (const std::string& spec : shipped_models())
        ok = report_ok(check_decomposition_suite(builtin_model(spec), D, 104, 100)) && ok;
    return ok;
}

// 6. The five purity characterizations (single component; eigenvalue under
//    n* for n in {2,3,5}; eigenvalue at the given scale; pushforward
//    eigenvalue; transform concentrated in the complementary codimension and
//    component) hold jointly on every component of every tested class.
bool criterion_purity() {
    Rng rng(105);
    bool ok = true;
    for (const std::string& spec : shipped_models()) {
        ModelPtr m = builtin_model(spec);
        std::vector<OmegaClass> pool;
        for (int i = 0; i < m->dim(); ++i)
            pool.push_back(OmegaClass::from_element(m, D, m->e(i)));
        for (int k = 0; k < 25; ++k) pool.push_back(rng.omega(m, D));
        for (const OmegaClass& x : pool) {
            auto parts = beauville_decompose(x);
            for (const auto& [ps, comp] : parts) {
                for (long mm : {2L, 3L}) {
                    PurityResult r = check_purity(comp, mm);
                    if (!r.all()) {
                        std::printf("    purity failed on %s component (%d,%d) scale %ld\n",
                                    spec.c_str(), ps.first, ps.second, mm);
                        ok = false;
                    }
                }
            }
        }
    }
    return ok;
}

// 7. Numerical kernels have the expected bases (trivial on the perfect-pairing
//    models, the line through piP on the rank-one elliptic model), are stable
//    under the transform, form a degree-zero ideal, and vanish under
//    convolution powers: (g+1)-fold always, 2-fold on the rank-one model, and
//    (p+1)-fold against a class whose transform is concentrated in
//    codimension >= g-p.
bool criterion_numerical() {
    bool ok = true;
    for (const std::string& spec : shipped_models()) {
        ModelPtr m = builtin_model(spec);
        NumericalKernel N = numerical_kernel(m);
        int want = spec == "ell-rk1" ? 1 : 0;
        if (N.kernel_dim() != want) {
            std::printf("    kernel dimension of %s is %d, expected %d\n", spec.c_str(),
                        N.kernel_dim(), want);
            ok = false;
        }
        if (!fourier_preserves_kernel(N)) {
            std::printf("    kernel of %s not transform-stable\n", spec.c_str());
            ok = false;
        }
        if (!star_power_vanishes(N, m->g() + 1)) {
            std::printf("    %d-fold convolution power of %s kernel nonzero\n",
                        m->g() + 1, spec.c_str());
            ok = false;
        }
        ok = report_ok(check_numerical_suite(m, D)) && ok;
    }
    ModelPtr rk1 = ell_rk1_model();
    NumericalKernel N = numerical_kernel(rk1);
    if (N.basis.size() != 1 || N.basis[0] != rk1->e("piP")) {
        std::printf("    rank-one kernel basis is not the line through piP\n");
        ok = false;
    }
    if (!star_power_vanishes(N, 2)) {
        std::printf("    rank-one kernel has a nonzero convolution square\n");
        ok = false;
    }
    if (!star_power_with_class_vanishes(N, 0, OmegaClass::unit(rk1, D))) {
        std::printf("    refined convolution vanishing failed on the rank-one model\n");
        ok = false;
    }
    return ok;
}

// 8. Correspondence calculus on every perfect-pairing shipped model: the
//    diagonal realizes the identity, the projector family verifies (sum,
//    orthogonal idempotents, eigenvalues, transpose duality, uniqueness,
//    t-free coefficients), graphs realize pullbacks and compose
//    multiplicatively, and realization is functorial and faithful.
bool criterion_correspondences() {
    bool ok = true;
    for (const std::string& spec : shipped_models()) {
        ModelPtr m = builtin_model(spec);
        if (!m->pairing_perfect()) continue;  // no calculus on degenerate pairings
        Report r = check_motives_suite(m, D, 106);
        for (const CheckLine& l : r.lines)
            if (l.status == CheckStatus::Skip) {
                std::printf("    unexpected skip on %s: %s\n", spec.c_str(),
                            l.identity.c_str());
                ok = false;
            }
        ok = report_ok(r) && ok;
    }
    return ok;
}

// 9. End-to-end determinism: the command-line `check` run twice on every
//    shipped model exits 0 and produces byte-identical output.
bool criterion_determinism() {
    const char* cli = std::getenv("FMCOB_CLI");
    if (cli == nullptr) {
        std::printf("    FMCOB_CLI is not set; cannot drive the executable\n");
        return false;
    }
    auto capture = [&](const std::string& spec, int& code) {
        std::string cmd = std::string("'") + cli + "' check " + spec + " 2>&1";
        std::string out;
        FILE* f = popen(cmd.c_str(), "r");
        if (f == nullptr) {
            code = -1;
            return out;
        }
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
        int st = pclose(f);
        code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
        return out;
    };
    bool ok = true;
    for (const std::string& spec : shipped_models()) {
        int c1 = 0, c2 = 0;
        std::string a = capture(spec, c1);
        std::string b = capture(spec, c2);
        if (c1 != 0 || c2 != 0) {
            std::printf("    `check %s` exited %d / %d\n", spec.c_str(), c1, c2);
            ok = false;
        }
        if (a != b) {
            std::printf("    `check %s` output differs between runs\n", spec.c_str());
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"kernel series collapse at full order", criterion_kernel_collapse},
        {"exact reversion of random series over both rings", criterion_reversion},
        {"transform route agreement on all shipped models", criterion_route_agreement},
        {"transform laws: involution, product exchange, isogeny exchange, eigenvalues",
         criterion_transform_laws},
        {"component decomposition: completeness, eigenvalues, weight bounds",
         criterion_decomposition},
        {"purity equivalences hold jointly on every component", criterion_purity},
        {"numerical kernels: bases, stability, convolution vanishing",
         criterion_numerical},
        {"correspondence calculus: diagonal, projectors, graphs, faithfulness",
         criterion_correspondences},
        {"byte-deterministic end-to-end executable runs", criterion_determinism},
    };

    int failures = 0;
    int id = 0;
    for (const Criterion& c : criteria) {
        ++id;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("    exception: %s\n", e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, c.name,
                    secs);
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    if (failures > 0) std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
