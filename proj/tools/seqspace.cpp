// seqspace: batch front end for the binomial fractional-difference operators.
//
// Exit codes: 0 pass / consistent / bounded, 1 fail / inconsistent / growing,
// 2 usage or configuration error, 3 inconclusive.

#include "seqspace/config.hpp"
#include "seqspace/discrepancy.hpp"
#include "seqspace/duals.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/report_io.hpp"
#include "seqspace/transforms.hpp"
#include "seqspace/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace seqspace;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr std::size_t kDefaultOrder = 16;

struct Options {
    std::string config_file;
    std::string alpha, r, s, lambda_preset, lambda_file, backend;
    std::size_t order = 0;

    std::string matrix;
    std::size_t n = 0, k = 0;
    std::string paper_variant;
    std::string direction = "forward";
    std::string input = "-";
    std::optional<std::size_t> basis_k;
    bool eta = false;
    std::string space;
    std::optional<double> p;
    std::string bound;
    std::string d_file;
    std::string dual_kind;
    std::string source;
};

template <Scalar T>
SequenceWindow<T> read_input(const std::string& path) {
    if (path == "-") return read_sequence<T>(std::cin);
    return read_sequence_file<T>(path);
}

template <Scalar T>
void write_window(const SequenceWindow<T>& w) {
    for (const T& v : w) std::cout << to_string(v) << '\n';
}

int membership_exit(MembershipVerdict v) {
    switch (v) {
    case MembershipVerdict::consistent: return kExitPass;
    case MembershipVerdict::inconsistent: return kExitFail;
    case MembershipVerdict::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

template <Scalar T>
int run(const std::string& command, const Options& opt, const RunConfig& config) {
    const auto spec = build_spec<T>(config);
    const std::size_t order = config.order.value_or(kDefaultOrder);

    if (command == "entry") {
        if (opt.k > opt.n) throw DomainError("entry needs k <= n");
        const auto tri = named_triangle<T>(opt.matrix, spec);
        std::cout << to_string(tri(opt.n, opt.k)) << '\n';
        return kExitPass;
    }
    if (command == "verify") {
        std::optional<PrintedVariant> variant;
        if (!opt.paper_variant.empty()) variant = parse_variant(opt.paper_variant);
        const auto report = verify_inverses(spec, order, variant);
        std::cout << to_json(report).dump(2) << '\n';
        return report.pass ? kExitPass : kExitFail;
    }
    if (command == "transform") {
        const auto x = read_input<T>(opt.input);
        if (opt.direction == "forward") write_window(apply(composed_triangle(spec), x));
        else if (opt.direction == "inverse") write_window(inverse_apply(spec, x));
        else throw DomainError("direction must be forward or inverse");
        return kExitPass;
    }
    if (command == "basis") {
        if (opt.eta) {
            write_window(eta_sequence(spec, order));
        } else {
            if (!opt.basis_k) throw DomainError("basis needs --k K or --eta");
            write_window(theta_basis(spec, *opt.basis_k, order));
        }
        return kExitPass;
    }
    if (command == "membership") {
        const auto x = read_input<T>(opt.input);
        std::optional<T> bound;
        if (!opt.bound.empty()) bound = parse_scalar<T>(opt.bound);
        const auto report = membership_report(x, parse_space(opt.space), spec, opt.p, bound);
        std::cout << to_json(report).dump(2) << '\n';
        return membership_exit(report.verdict);
    }
    if (command == "dual") {
        const auto d = read_sequence_file<T>(opt.d_file);
        const std::size_t n = config.order.value_or(d.size());
        const auto kind = parse_dual(opt.dual_kind);
        if (kind == DualKind::alpha && n > kMaxSubsetOrder) {
            throw SizeError("alpha dual evaluates condition 4.1; N must be <= 15");
        }
        const auto report = dual_report(d, kind, parse_space(opt.source), spec, n);
        std::cout << to_json(report).dump(2) << '\n';
        return report.aggregate == ConditionVerdict::growing ? kExitFail : kExitPass;
    }
    throw DomainError("unknown command '" + command + "'");
}

RunConfig resolve_config(const CLI::App& app, const Options& opt) {
    RunConfig config;
    if (!app.count("--backend")) config.backend = default_backend();
    if (!opt.config_file.empty()) config = load_config(opt.config_file, config);
    if (app.count("--alpha")) config.alpha = opt.alpha;
    if (app.count("--r")) config.r = opt.r;
    if (app.count("--s")) config.s = opt.s;
    if (app.count("--lambda")) config.lambda = LambdaChoice{parse_lambda_preset(opt.lambda_preset), {}};
    if (app.count("--lambda-file")) config.lambda = LambdaChoice{std::nullopt, opt.lambda_file};
    if (app.count("--backend")) config.backend = parse_backend(opt.backend);
    if (app.count("--N")) {
        if (opt.order < 1) throw DomainError("N must be >= 1");
        config.order = opt.order;
    }
    validate(config);
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binomial fractional-difference sequence-space operators"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--config", opt.config_file, "JSON config file (flags override it)");
    app.add_option("--alpha", opt.alpha, "fractional order, p/q or integer");
    app.add_option("--r", opt.r, "binomial parameter r");
    app.add_option("--s", opt.s, "binomial parameter s");
    app.add_option("--lambda", opt.lambda_preset, "lambda preset: cesaro, squares, powers2");
    app.add_option("--lambda-file", opt.lambda_file, "file with one lambda_k per line");
    app.add_option("--backend", opt.backend, "exact or float (default: $SEQSPACE_BACKEND or exact)");
    app.add_option("--N", opt.order, "truncation order");

    auto* entry = app.add_subcommand("entry", "print one matrix entry");
    entry->add_option("--matrix", opt.matrix, "delta, delta-inv, binomial, binomial-inv, lambda, lambda-inv, "
                                              "composed, composed-inv")
        ->required();
    entry->add_option("--n", opt.n, "row")->required();
    entry->add_option("--k", opt.k, "column")->required();

    auto* verify = app.add_subcommand("verify", "inverse identities and oracle agreement");
    verify->add_option("--paper-variant", opt.paper_variant, "lemma3, theorem4, eq21 or theta");

    auto* transform = app.add_subcommand("transform", "forward or inverse transform of a sequence");
    transform->add_option("--direction", opt.direction, "forward or inverse");
    transform->add_option("--input", opt.input, "input file, '-' for stdin");

    auto* basis = app.add_subcommand("basis", "emit theta^(k) or eta on a window of length N");
    basis->add_option("--k", opt.basis_k, "basis index");
    basis->add_flag("--eta", opt.eta, "emit eta instead");

    auto* membership = app.add_subcommand("membership", "finitary membership diagnostics");
    membership->add_option("--input", opt.input, "input file, '-' for stdin");
    membership->add_option("--space", opt.space, "c0, c, linf or lp")->required();
    membership->add_option("--p", opt.p, "exponent for lp");
    membership->add_option("--bound", opt.bound, "upper bound for the partial p-sum");

    auto* dual = app.add_subcommand("dual", "alpha/beta/gamma dual conditions for a multiplier");
    dual->add_option("--d", opt.d_file, "multiplier file")->required();
    dual->add_option("--kind", opt.dual_kind, "alpha, beta or gamma")->required();
    dual->add_option("--source", opt.source, "c0, c or linf")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const RunConfig config = resolve_config(app, opt);
        if (config.backend == Backend::exact) return run<Rational>(command, opt, config);
        return run<double>(command, opt, config);
    } catch (const seqspace::Error& e) {
        std::cerr << "seqspace: " << e.what() << '\n';
        return kExitUsage;
    }
}
