#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmcob/checks.hpp"
#include "fmcob/expr.hpp"
#include "fmcob/model.hpp"
#include "fmcob/model_io.hpp"
#include "fmcob/motives.hpp"
#include "fmcob/omega.hpp"
#include "fmcob/series.hpp"

namespace {

using namespace fmcob;

constexpr int kExitAllPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    int order = 8;
    std::string model;       // --model flag
    std::string model_pos;   // positional
    std::string expr;
    std::string route = "both";
    std::string format = "text";
    std::uint64_t seed = 1;
    int randoms = 25;
};

bool looks_builtin(const std::string& s) {
    return s.rfind("taut:", 0) == 0 || s.rfind("product:", 0) == 0 ||
           s == "ell-rk1" || s == "ell-signed";
}

/// Thrown when a model fails validation on load (distinct from parse/usage).
struct ModelCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ModelPtr resolve_model(const Options& opt, bool force) {
    std::string spec = opt.model_pos.empty() ? opt.model : opt.model_pos;
    if (!opt.model_pos.empty() && !opt.model.empty() && opt.model_pos != opt.model)
        throw CLI::ValidationError("model",
                                   "positional model and --model disagree");
    if (spec.empty())
        throw CLI::ValidationError("model", "no model given (positional or --model)");
    if (looks_builtin(spec)) return builtin_model(spec);
    if (!std::filesystem::exists(spec))
        throw std::invalid_argument("unknown model '" + spec +
                                    "': not a built-in name and no such file");
    try {
        return load_model(spec, force);
    } catch (const std::runtime_error& e) {
        if (std::string(e.what()).find("failed validation") != std::string::npos)
            throw ModelCheckError(e.what());
        throw;
    }
}

void print_report(const Report& rep, const std::string& format) {
    std::cout << (format == "tsv" ? rep.tsv() : rep.text());
}

int report_exit(const Report& rep) {
    return rep.all_pass() ? kExitAllPass : kExitCheckFailure;
}

int cmd_validate(const Options& opt) {
    ModelPtr m = resolve_model(opt, /*force=*/true);
    Report rep = check_model(m);
    print_report(rep, opt.format);
    return report_exit(rep);
}

int cmd_check(const Options& opt) {
    ModelPtr m = resolve_model(opt, /*force=*/false);
    Report rep = check_all(m, opt.order, opt.seed, opt.randoms);
    print_report(rep, opt.format);
    return report_exit(rep);
}

int cmd_fourier(const Options& opt) {
    ModelPtr m = resolve_model(opt, /*force=*/false);
    OmegaClass x = parse_class_expr(opt.expr, m, opt.order);
    const bool tsv = opt.format == "tsv";
    auto emit = [&](const std::string& route, const OmegaClass& v) {
        if (tsv)
            std::cout << route << '\t' << v.to_string() << '\n';
        else
            std::cout << route << ": F(x) = " << v.to_string() << '\n';
    };
    if (!tsv) std::cout << "input: " << x.to_string() << '\n';

    bool want_psi = opt.route == "psi" || opt.route == "both";
    bool want_kernel = opt.route == "kernel" || opt.route == "both";
    OmegaClass via_psi(m, opt.order), via_kernel(m, opt.order);
    if (want_psi) {
        via_psi = fourier_via_psi(x);
        emit("psi", via_psi);
    }
    if (want_kernel) {
        FourierKernel K(m, opt.order);
        via_kernel = K.apply(x);
        emit("kernel", via_kernel);
    }
    if (want_psi && want_kernel) {
        if (via_psi == via_kernel) {
            std::cout << (tsv ? "agree\t-\n" : "routes agree\n");
        } else {
            OmegaClass diff = via_psi - via_kernel;
            if (tsv)
                std::cout << "differ\t" << diff.to_string() << '\n';
            else
                std::cout << "routes differ; psi - kernel = " << diff.to_string()
                          << '\n';
            return kExitCheckFailure;
        }
    }
    return kExitAllPass;
}

int cmd_decompose(const Options& opt) {
    ModelPtr m = resolve_model(opt, /*force=*/false);
    OmegaClass x = parse_class_expr(opt.expr, m, opt.order);
    const bool tsv = opt.format == "tsv";
    if (!tsv) std::cout << "input: " << x.to_string() << '\n';
    auto comps = beauville_decompose(x);
    if (comps.empty() && !tsv) std::cout << "zero class: no components\n";
    for (const auto& [ps, comp] : comps) {
        const auto [p, s] = ps;
        const auto [lo, hi] = component_bounds(m->g(), p);
        if (tsv)
            std::cout << p << '\t' << s << '\t' << '[' << lo << ',' << hi << ']'
                      << '\t' << comp.to_string() << '\n';
        else
            std::cout << "p=" << p << " s=" << s << " bounds=[" << lo << "," << hi
                      << "] component=" << comp.to_string() << '\n';
    }
    return kExitAllPass;
}

int cmd_projectors(const Options& opt) {
    ModelPtr m = resolve_model(opt, /*force=*/false);
    if (!m->pairing_perfect()) {
        std::cerr << "model '" << m->name()
                  << "' has a degenerate pairing; no correspondence calculus\n";
        return kExitCheckFailure;
    }
    CorrespondenceCalculus calc(m, opt.order);
    const bool tsv = opt.format == "tsv";
    std::vector<CorrespondenceCalculus::Corr> pis;
    try {
        pis = calc.canonical_projectors();
    } catch (const std::logic_error& e) {
        std::cerr << e.what() << '\n';
        return kExitCheckFailure;
    }
    for (std::size_t i = 0; i < pis.size(); ++i) {
        if (tsv)
            std::cout << "pi_" << i << '\t' << pis[i].to_string() << '\n';
        else
            std::cout << "pi_" << i << " = " << pis[i].to_string() << '\n';
    }
    Report rep = check_motives_suite(m, opt.order, opt.seed);
    print_report(rep, opt.format);
    return report_exit(rep);
}

int cmd_series(const Options& opt) {
    const int D = opt.order;
    Series<TPoly> lambda = lambda_series(D);
    Series<TPoly> l = l_series(D);
    Series<TPoly> G = G_series(D);
    std::cout << "lambda_t(u):\n" << series_to_text(lambda);
    std::cout << "l_t(u):\n" << series_to_text(l);
    std::cout << "G(u):\n" << series_to_text(G);
    Series<TPoly> collapsed = compose(G, lambda);
    Series<TPoly> expu = exp_u_series(D, TPoly::zero(D));
    std::cout << "kernel collapse G(lambda_t(u)) vs exp(u):\n";
    bool all_equal = true;
    for (int k = 0; k <= D; ++k) {
        const bool eq = collapsed.coeff(k) == expu.coeff(k);
        all_equal = all_equal && eq;
        std::cout << "u^" << k << " : " << collapsed.coeff(k).to_string() << " vs "
                  << expu.coeff(k).to_string() << " : " << (eq ? "equal" : "DIFFER")
                  << '\n';
    }
    std::cout << (all_equal ? "PASS" : "FAIL") << " series.kernel-collapse\n";
    return all_equal ? kExitAllPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact calculator for transform, decomposition, numerical-equivalence, "
        "and correspondence identities on finite bigraded models"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand name
    Options opt;

    app.add_option("--order", opt.order, "truncation order D")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    app.add_option("--model", opt.model,
                   "model: built-in name (taut:g, ell-rk1, ell-signed, "
                   "product:g1,g2) or path to a model file");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized checks")
        ->capture_default_str();
    app.add_option("--randoms", opt.randoms, "random classes per randomized check")
        ->check(CLI::Range(0, 1000))
        ->capture_default_str();

    auto add_model_pos = [&](CLI::App* sub) {
        sub->add_option("model", opt.model_pos, "model name or file (see --model)");
    };

    CLI::App* validate = app.add_subcommand(
        "validate", "structural audit of a model (loads even when invalid)");
    add_model_pos(validate);

    CLI::App* fourier =
        app.add_subcommand("fourier", "apply the transform to a class expression");
    add_model_pos(fourier);
    fourier->add_option("expr", opt.expr, "class expression")->required();
    fourier->add_option("--route", opt.route, "which implementation(s) to run")
        ->check(CLI::IsMember({"psi", "kernel", "both"}))
        ->capture_default_str();

    CLI::App* decompose = app.add_subcommand(
        "decompose", "split a class into eigencomponents with bound annotations");
    add_model_pos(decompose);
    decompose->add_option("expr", opt.expr, "class expression")->required();

    CLI::App* projectors = app.add_subcommand(
        "projectors", "canonical projector decomposition of the diagonal");
    add_model_pos(projectors);

    CLI::App* check =
        app.add_subcommand("check", "run the full identity suite on a model");
    add_model_pos(check);

    app.add_subcommand("series",
                       "print the universal series and the kernel-collapse table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error.
        return code == 0 ? kExitAllPass : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (fourier->parsed()) return cmd_fourier(opt);
        if (decompose->parsed()) return cmd_decompose(opt);
        if (projectors->parsed()) return cmd_projectors(opt);
        if (check->parsed()) return cmd_check(opt);
        return cmd_series(opt);
    } catch (const ModelCheckError& e) {
        std::cerr << e.what() << '\n';
        return kExitCheckFailure;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // model-file parse and I/O problems are usage-level errors
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
}
