#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "starlike/criteria.hpp"
#include "starlike/errors.hpp"
#include "starlike/transforms.hpp"

namespace starlike::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raw flag values; an option only overrides the config when it was given.
struct Flags {
    int n = 1;
    std::string mu = "0.5";
    std::string lambda = "0.5";
    std::string c;
    int order = 64;
    std::string radii;
    int angles = 4096;
    std::uint64_t seed = 42;
    int trials = 1000;
    double tol = 1e-6;
    std::string out;
    std::string config;

    const CLI::App* command = nullptr;  ///< the parsed subcommand
};

void add_params(CLI::App& cmd, Flags& f, bool with_c) {
    cmd.add_option("--n", f.n, "order of the zero: f = z + a_{n+1} z^{n+1} + ...")->check(CLI::PositiveNumber);
    cmd.add_option("--mu", f.mu, "complex mu, written a+bi");
    cmd.add_option("--lambda", f.lambda, "complex lambda, written a+bi");
    if (with_c) {
        cmd.add_option("--c", f.c, "complex transform parameter c");
    }
}

void add_run(CLI::App& cmd, Flags& f) {
    cmd.add_option("--order", f.order, "truncation order N");
    cmd.add_option("--radii", f.radii, "comma separated ascending radii in (0,1)");
    cmd.add_option("--angles", f.angles, "samples per circle");
    cmd.add_option("--seed", f.seed, "64-bit seed");
    cmd.add_option("--trials", f.trials, "number of randomised trials");
    cmd.add_option("--tol", f.tol, "conclusion violation tolerance");
    cmd.add_option("--out", f.out, "output path (default stdout)");
    cmd.add_option("--config", f.config, "JSON RunConfig file");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) {
            throw UsageError("malformed number '" + item + "'");
        }
        values.push_back(v);
    }
    return values;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

RunConfig resolve(const Flags& f) {
    RunConfig cfg;
    if (!f.config.empty()) {
        apply_json(read_json_file(f.config), cfg);
    }
    const auto given = [&](const char* name) { return f.command->count(name) > 0; };
    if (given("--order")) {
        cfg.order = f.order;
    }
    if (given("--radii")) {
        cfg.grid.radii = parse_list(f.radii);
    }
    if (given("--angles")) {
        cfg.grid.angular_count = f.angles;
    }
    if (given("--seed")) {
        cfg.seed = f.seed;
    }
    if (given("--trials")) {
        cfg.trials = f.trials;
    }
    if (given("--tol")) {
        cfg.tol.conclusion = f.tol;
    }
    if (given("--out")) {
        cfg.out = f.out;
    }
    cfg.validate();
    return cfg;
}

void write_to(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        throw IoError("cannot write " + path);
    }
}

CriterionParams params_of(const Flags& f) {
    CriterionParams p;
    p.n = f.n;
    p.mu = parse_complex(f.mu);
    p.lambda = parse_complex(f.lambda);
    if (!f.c.empty()) {
        p.c = parse_complex(f.c);
    }
    return p;
}

// Named builtins, one_term:a, JSON literals and JSON files.
PowerSeries load_function(const std::string& source, int n, int order) {
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    if (source == "builtin:identity") {
        c[1] = 1.0;
    } else if (source == "builtin:koebe") {
        for (int k = 1; k <= order; ++k) {
            c[static_cast<std::size_t>(k)] = double(k);
        }
    } else if (source == "builtin:halfplane") {
        std::fill(c.begin() + 1, c.end(), complex(1.0));
    } else if (source.rfind("one_term:", 0) == 0) {
        c[1] = 1.0;
        if (n + 1 <= order) {
            c[static_cast<std::size_t>(n + 1)] = parse_complex(source.substr(9));
        }
    } else if (source == "one") {
        c[0] = 1.0;
    } else if (source == "zero") {
    } else if (!source.empty() && source.front() == '[') {
        try {
            return series_from_json(json::parse(source));
        } catch (const json::parse_error& e) {
            throw UsageError(std::string("series literal: ") + e.what());
        }
    } else if (source.rfind("builtin:", 0) == 0) {
        throw UsageError("unknown builtin '" + source + "'");
    } else {
        const json j = read_json_file(source);
        return series_from_json(j.is_object() && j.contains("coeffs") ? j["coeffs"] : j);
    }
    return PowerSeries(std::move(c));
}

json number_or_null(std::optional<double> v) { return v && std::isfinite(*v) ? json(*v) : json(nullptr); }

template <class F>
std::optional<double> guarded(F&& f) {
    try {
        return f();
    } catch (const GateViolation&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------

int cmd_bounds(const Flags& f, std::ostream& out) {
    const RunConfig cfg = resolve(f);
    const auto p = params_of(f);
    const int n = p.n;
    const double L = std::abs(p.lambda);
    const bool base = base_gate(p.mu, n);
    const bool lambda_ok = L > 0.0 && L <= 1.0 + kGateSlack;
    const bool starlike_ok = lambda_gate(p.lambda, p.mu, n);
    const bool order_ok = order_gate(p.mu, n);

    json j;
    j["params"] = p;
    json gates;
    gates["mu_nonzero_re_mu_below_n"] = base;
    gates["lambda_in_unit_disk"] = lambda_ok;
    gates["lambda_below_lambda_max"] = starlike_ok;
    gates["re_mu_below_half_n"] = order_ok;
    const auto l1 = guarded([&] { return lambda1_bound(p.lambda, p.mu, n); });
    j["lambda1"] = number_or_null(l1);
    j["lambda_max"] = number_or_null(guarded([&] { return lambda_max_starlike(p.mu, n); }));
    j["arg_sum_bound"] = number_or_null(guarded([&] { return arg_sum_bound(L, l1.value_or(NAN)); }));
    std::optional<AlphaResult> alpha;
    try {
        alpha = thm2_order(p);
    } catch (const GateViolation&) {
    }
    j["alpha"] = number_or_null(alpha ? std::optional<double>(alpha->alpha) : std::nullopt);
    j["regime"] = alpha ? json(std::string(to_string(alpha->regime))) : json(nullptr);
    j["alpha_seam"] = alpha ? json(alpha->boundary) : json(nullptr);
    j["regime_split"] = number_or_null(guarded([&] { return base ? thm2_regime_split(p.mu, n) : NAN; }));
    j["deviation_gate"] = number_or_null(guarded([&] { return base ? thm2_deviation_gate(p.mu, n) : NAN; }));
    j["deviation_bound"] = number_or_null(guarded([&] { return thm2_deviation(p); }));
    gates["deviation_gate"] = order_ok && L <= thm2_deviation_gate(p.mu, n) + kGateSlack;
    if (p.c) {
        std::optional<TransformLambdas> t;
        try {
            t = thm3_lambdas(p);
        } catch (const GateViolation&) {
        }
        gates["transform"] = t.has_value();
        gates["re_c_minus_mu_positive"] = (*p.c - p.mu).real() > 0.0;
        j["transform_lambda1"] = t ? json(t->lambda1_abs) : json(nullptr);
        j["transform_lambda2"] = t ? json(t->lambda2_abs) : json(nullptr);
    }
    j["gates"] = gates;
    write_to(cfg.out, j.dump(2) + "\n", out);
    return base && lambda_ok && starlike_ok ? kOk : kGateViolation;
}

struct VerifyFlags {
    std::string theorem;
    std::string f;
    std::string q = "one";
    std::string lambda1;
    std::string alpha;
    bool score_any_alpha = false;
};

int cmd_verify(const Flags& f, const VerifyFlags& v, std::ostream& out) {
    const RunConfig cfg = resolve(f);
    const auto id = parse_theorem_id(v.theorem);
    if (!id) {
        throw UsageError("unknown theorem id '" + v.theorem + "'");
    }
    const auto p = params_of(f);
    const int n = p.n;
    const bool lemma = *id == TheoremId::lemma21 || *id == TheoremId::lemma22_part1 || *id == TheoremId::lemma22_part2;
    std::string source = v.f;
    if (source.empty()) {
        source = *id == TheoremId::lemma22_part2 ? "zero" : lemma ? "one" : "builtin:identity";
    }
    const auto lambda1 = [&] {
        if (!v.lambda1.empty()) {
            return parse_complex(v.lambda1);
        }
        return std::polar(lambda1_bound(p.lambda, p.mu, n), std::arg(p.lambda));
    };

    VerificationReport report;
    switch (*id) {
    case TheoremId::lemma21: {
        const auto member = source == "extremal" ? lemma21_extremal(p.mu, p.lambda, n, cfg.order)
                                                 : H1nMember::make(load_function(source, n, cfg.order), n);
        report = verify_lemma21(member, p.mu, p.lambda, cfg.grid, cfg.tol);
        break;
    }
    case TheoremId::lemma22_part1: {
        const auto Q = H1nMember::make(load_function(v.q, n, cfg.order), n);
        const auto pm = H1nMember::make(load_function(source, n, cfg.order), n);
        const complex l1 = lambda1();
        const double alpha =
            v.alpha.empty() ? alpha_threshold(std::abs(p.lambda), std::abs(l1)).alpha : parse_list(v.alpha).at(0);
        report = verify_lemma22_part1(Q, pm, p.lambda, l1, alpha, cfg.grid, cfg.tol, !v.score_any_alpha);
        break;
    }
    case TheoremId::lemma22_part2: {
        const auto Q = H1nMember::make(load_function(v.q, n, cfg.order), n);
        report = verify_lemma22_part2(Q, load_function(source, n, cfg.order), p.lambda, lambda1(), cfg.grid,
                                      cfg.tol);
        break;
    }
    case TheoremId::theorem1:
    case TheoremId::theorem2:
    case TheoremId::theorem3: {
        const auto fm = AnMember::make(load_function(source, n, cfg.order), n);
        if (*id == TheoremId::theorem1) {
            report = verify_theorem1(fm, p.mu, p.lambda, cfg.grid, cfg.tol);
        } else if (*id == TheoremId::theorem2) {
            report = verify_theorem2(fm, p.mu, p.lambda, cfg.grid, cfg.tol);
        } else {
            if (!p.c) {
                throw UsageError("thm3 needs --c");
            }
            report = verify_theorem3(fm, p.mu, *p.c, p.lambda, cfg.grid, cfg.tol);
        }
        break;
    }
    }
    report.seed = cfg.seed;
    write_to(cfg.out, json(report).dump(2) + "\n", out);
    return exit_code(report.verdict);
}

struct FalsifyFlags {
    std::string theorem;
    double budget = 0.5;
    bool extremal = false;
    std::string summary;
};

int cmd_falsify(const Flags& f, const FalsifyFlags& v, std::ostream& out) {
    RunConfig cfg = resolve(f);
    if (f.command->count("--summary") > 0) {
        cfg.summary = v.summary;
    }
    const auto id = parse_theorem_id(v.theorem);
    if (!id) {
        throw UsageError("unknown theorem id '" + v.theorem + "'");
    }
    const auto p = params_of(f);
    if (*id == TheoremId::theorem3 && !p.c) {
        throw UsageError("thm3 needs --c");
    }
    FamilySpec family;
    family.n = p.n;
    family.coefficient_budget = v.budget;
    family.count = cfg.trials;
    family.seed = cfg.seed;
    family.order = cfg.order;
    family.include_extremal = v.extremal;
    if (!(v.budget > 0.0)) {
        throw UsageError("--budget must be positive");
    }
    const auto result = falsify_search(family, p, *id, cfg.trials, cfg.grid, cfg.tol);

    std::string lines;
    for (const auto& r : result.reports) {
        lines += json(r).dump();
        lines += '\n';
    }
    write_to(cfg.out, lines, out);

    if (!cfg.summary.empty()) {
        double closest = std::numeric_limits<double>::infinity();
        for (const auto& r : result.reports) {
            if (r.verdict != Verdict::hypothesis_not_met) {
                closest = std::min(closest, r.conclusion_margin);
            }
        }
        const auto& c = result.counts;
        std::string csv =
            "theorem,n,re_mu,im_mu,abs_lambda,re_c,im_c,seed,trials,pass,boundary,hypothesis_not_met,fail,"
            "min_conclusion_margin\n";
        csv += std::string(to_string(*id)) + "," + std::to_string(p.n) + "," + format_double(p.mu.real()) + "," +
               format_double(p.mu.imag()) + "," + format_double(std::abs(p.lambda)) + "," +
               (p.c ? format_double(p.c->real()) : "") + "," + (p.c ? format_double(p.c->imag()) : "") + "," +
               std::to_string(cfg.seed) + "," + std::to_string(cfg.trials) + "," + std::to_string(c.pass) + "," +
               std::to_string(c.boundary) + "," + std::to_string(c.hypothesis_not_met) + "," +
               std::to_string(c.fail) + "," + (std::isfinite(closest) ? format_double(closest) : "") + "\n";
        write_to(cfg.summary, csv, out);
    }
    return result.counts.fail > 0 ? kFail : kOk;
}

struct TransformFlags {
    std::string f = "builtin:identity";
    int K = -1;
};

int cmd_transform(const Flags& f, const TransformFlags& v, std::ostream& out) {
    const RunConfig cfg = resolve(f);
    const auto p = params_of(f);
    if (!p.c) {
        throw UsageError("transform needs --c");
    }
    const auto fm = AnMember::make(load_function(v.f, p.n, cfg.order), p.n);
    const auto spec = TransformSpec::make(p.mu, *p.c, fm.order());
    const auto F = bernardi_transform(fm, spec);
    json j;
    j["mu"] = json::array({p.mu.real(), p.mu.imag()});
    j["c"] = json::array({p.c->real(), p.c->imag()});
    j["n"] = p.n;
    j["order"] = F.order();
    j["K"] = v.K < 0 ? fm.order() / 2 : v.K;
    j["identity_residual"] = identity_residual(F, fm, spec, v.K);
    j["F"] = F.series();
    write_to(cfg.out, j.dump(2) + "\n", out);
    return kOk;
}

struct SweepFlags {
    std::string mu_re = "-0.5:0.45:5";
    std::string mu_im = "0:0:1";
    std::string lambda = "0.1:0.9:5";
};

std::vector<double> parse_range(const std::string& text) {
    const auto parts = parse_list([&] {
        std::string t = text;
        std::replace(t.begin(), t.end(), ':', ',');
        return t;
    }());
    if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2])) {
        throw UsageError("range must be min:max:count, got '" + text + "'");
    }
    const int count = static_cast<int>(parts[2]);
    std::vector<double> values;
    for (int i = 0; i < count; ++i) {
        values.push_back(count == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * i / (count - 1));
    }
    return values;
}

int cmd_sweep(const Flags& f, const SweepFlags& v, std::ostream& out) {
    const RunConfig cfg = resolve(f);
    const int n = f.n;
    std::string csv = "n,re_mu,im_mu,abs_lambda,lambda1,alpha,regime,deviation_bound,gates_ok\n";
    const auto cell = [](std::optional<double> x) { return x ? format_double(*x) : std::string(); };
    for (double re : parse_range(v.mu_re)) {
        for (double im : parse_range(v.mu_im)) {
            for (double L : parse_range(v.lambda)) {
                const complex mu{re, im};
                const CriterionParams p{n, mu, L, {}};
                const auto l1 = guarded([&] { return lambda1_bound(L, mu, n); });
                std::optional<AlphaResult> alpha;
                try {
                    alpha = thm2_order(p);
                } catch (const GateViolation&) {
                }
                const auto dev = guarded([&] { return thm2_deviation(p); });
                const bool ok = order_gate(mu, n) && lambda_gate(L, mu, n);
                csv += std::to_string(n) + "," + format_double(re) + "," + format_double(im) + "," +
                       format_double(L) + "," + cell(l1) + "," +
                       cell(alpha ? std::optional<double>(alpha->alpha) : std::nullopt) + "," +
                       (alpha ? std::string(to_string(alpha->regime)) : "") + "," + cell(dev) + "," +
                       (ok ? "true" : "false") + "\n";
            }
        }
    }
    write_to(cfg.out, csv, out);
    return kOk;
}

} // namespace

// ---------------------------------------------------------------------------

void RunConfig::validate() const {
    if (order < 1) {
        throw UsageError("order must be >= 1");
    }
    if (trials < 0) {
        throw UsageError("trials must be >= 0");
    }
    if (!(tol.conclusion >= 0.0) || !(tol.hypothesis >= 0.0)) {
        throw UsageError("tolerances must be >= 0");
    }
    try {
        grid.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void to_json(json& j, const RunConfig& c) {
    j = json{{"order", c.order},
             {"radii", c.grid.radii},
             {"angles", c.grid.angular_count},
             {"tol", {{"hypothesis", c.tol.hypothesis}, {"conclusion", c.tol.conclusion}}},
             {"seed", c.seed},
             {"trials", c.trials},
             {"out", c.out},
             {"summary", c.summary}};
}

void apply_json(const json& j, RunConfig& c) {
    if (!j.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "order") {
                c.order = value.get<int>();
            } else if (key == "radii") {
                c.grid.radii = value.get<std::vector<double>>();
            } else if (key == "angles") {
                c.grid.angular_count = value.get<int>();
            } else if (key == "tol") {
                c.tol.hypothesis = value.value("hypothesis", c.tol.hypothesis);
                c.tol.conclusion = value.value("conclusion", c.tol.conclusion);
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else if (key == "trials") {
                c.trials = value.get<int>();
            } else if (key == "out") {
                c.out = value.get<std::string>();
            } else if (key == "summary") {
                c.summary = value.get<std::string>();
            } else {
                throw UsageError("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
    }
}

int exit_code(Verdict verdict) {
    switch (verdict) {
    case Verdict::pass:
    case Verdict::boundary:
        return kOk;
    case Verdict::fail:
        return kFail;
    case Verdict::hypothesis_not_met:
        return kHypothesisNotMet;
    }
    return kParseError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of subordination criteria for starlikeness"};
    app.require_subcommand(1);

    Flags flags;
    VerifyFlags verify;
    FalsifyFlags falsify;
    TransformFlags transform;
    SweepFlags sweep;

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds and gate checks");
    add_params(*bounds_cmd, flags, true);
    add_run(*bounds_cmd, flags);

    auto* verify_cmd = app.add_subcommand("verify", "check one implication on one input");
    verify_cmd->add_option("theorem", verify.theorem, "lemma21|lemma22a|lemma22b|thm1|thm2|thm3")->required();
    add_params(*verify_cmd, flags, true);
    add_run(*verify_cmd, flags);
    verify_cmd->add_option("--f", verify.f,
                           "function: builtin:identity|koebe|halfplane, one_term:a, one, zero, extremal, "
                           "a JSON literal or a JSON file");
    verify_cmd->add_option("--q", verify.q, "Q for the two-disk lemma (same sources)");
    verify_cmd->add_option("--lambda1", verify.lambda1, "complex lambda1 (default: lambda1_bound)");
    verify_cmd->add_option("--alpha", verify.alpha, "alpha for lemma22a (default: the threshold)");
    verify_cmd->add_flag("--score-any-alpha", verify.score_any_alpha, "score alpha above the threshold");

    auto* falsify_cmd = app.add_subcommand("falsify", "seeded randomised search for counterexamples");
    falsify_cmd->add_option("theorem", falsify.theorem, "lemma21|lemma22a|lemma22b|thm1|thm2|thm3")->required();
    add_params(*falsify_cmd, flags, true);
    add_run(*falsify_cmd, flags);
    falsify_cmd->add_option("--budget", falsify.budget, "coefficient budget of the random family");
    falsify_cmd->add_flag("--extremal", falsify.extremal, "trial 0 uses the closed-form extremal");
    falsify_cmd->add_option("--summary", falsify.summary, "summary CSV path");

    auto* transform_cmd = app.add_subcommand("transform", "integral transform F of f");
    add_params(*transform_cmd, flags, true);
    add_run(*transform_cmd, flags);
    transform_cmd->add_option("--f", transform.f, "input function (same sources as verify)");
    transform_cmd->add_option("--K", transform.K, "last coefficient of the identity residual (default N/2)");

    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate bounds over a (mu, |lambda|) grid");
    sweep_cmd->add_option("--n", flags.n, "order of the zero")->check(CLI::PositiveNumber);
    add_run(*sweep_cmd, flags);
    sweep_cmd->add_option("--mu-re", sweep.mu_re, "Re(mu) range min:max:count");
    sweep_cmd->add_option("--mu-im", sweep.mu_im, "Im(mu) range min:max:count");
    sweep_cmd->add_option("--lambda-range", sweep.lambda, "|lambda| range min:max:count");

    auto* config_cmd = app.add_subcommand("config", "print the effective RunConfig");
    add_run(*config_cmd, flags);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    const auto parsed = app.get_subcommands();
    flags.command = parsed.front();
    try {
        if (bounds_cmd->parsed()) {
            return cmd_bounds(flags, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(flags, verify, out);
        }
        if (falsify_cmd->parsed()) {
            return cmd_falsify(flags, falsify, out);
        }
        if (transform_cmd->parsed()) {
            return cmd_transform(flags, transform, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(flags, sweep, out);
        }
        if (config_cmd->parsed()) {
            write_to(resolve(flags).out, json(resolve(flags)).dump(2) + "\n", out);
            return kOk;
        }
    } catch (const GateViolation& e) {
        err << "gate violation: " << e.what() << "\n";
        return kGateViolation;
    } catch (const Resonance& e) {
        err << "gate violation: " << e.what() << "\n";
        return kGateViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}

} // namespace starlike::cli
