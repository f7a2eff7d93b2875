#include "starlike/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

#include "starlike/errors.hpp"
#include "starlike/generators.hpp"
#include "starlike/transforms.hpp"

namespace starlike {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kResidualBound = 1e-9;

const char* const kCaveat = "grid estimate on circles |z| <= max radius of a truncated series; not a proof";

// Sum of |c_k| r^k over the top quarter of coefficients: how much of the value
// at radius r comes from indices near the truncation order.
double tail_mass(const PowerSeries& s, double r) {
    const int start = (3 * s.order()) / 4;
    double rk = std::pow(r, start);
    double sum = 0.0;
    for (int k = start; k <= s.order(); ++k) {
        sum += std::abs(s[static_cast<std::size_t>(k)]) * rk;
        rk *= r;
    }
    return sum;
}

class ReportBuilder {
public:
    ReportBuilder(TheoremId id, const CriterionParams& params, const RadialGrid& grid) {
        report_.theorem = id;
        report_.params = params;
        report_.grid = grid;
        report_.notes.emplace_back(kCaveat);
    }

    void gate(bool ok, const std::string& what) {
        if (!ok) {
            gates_ok_ = false;
            report_.notes.push_back("gate not met: " + what);
        }
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    void value(const std::string& name, double v) { report_.conclusion_values[name] = v; }

    void hypothesis(const std::string& name, const DiskSubordination& sub) {
        value(name + "_sup", sub.estimate.extremum.value);
        hypothesis_ = std::min(hypothesis_, sub.margin);
        monotone(sub.estimate);
    }

    void monotone(const LadderEstimate& est) { report_.ladder_monotone = report_.ladder_monotone && est.monotone; }

    /// value <= bound
    void upper(const std::string& name, double v, double bound) { conclusion(name, v, bound, bound - v); }

    /// value >= bound
    void lower(const std::string& name, double v, double bound) { conclusion(name, v, bound, v - bound); }

    /// Numerical consistency check: violations count as a failed conclusion but
    /// the margin is not scored, since it has no equality case.
    void requirement(const std::string& name, double v, double bound) {
        value(name, v);
        value(name + "_bound", bound);
        if (!(v <= bound)) {
            broken_ = true;
            note(name + " exceeds its bound");
        }
    }

    VerificationReport finish(const Tolerances& tol) {
        report_.hypothesis_margin = hypothesis_;
        report_.conclusion_margin = conclusion_;
        if (!report_.ladder_monotone) {
            report_.notes.emplace_back("radius ladder not monotone: truncation order too low for the outer radii");
        }
        auto& v = report_.verdict;
        if (!gates_ok_ || hypothesis_ < -tol.hypothesis) {
            v = Verdict::hypothesis_not_met;
        } else if (broken_ || conclusion_ < -tol.conclusion) {
            v = hypothesis_ > tol.hypothesis ? Verdict::fail : Verdict::boundary;
        } else if (std::abs(hypothesis_) <= tol.hypothesis || conclusion_ <= tol.hypothesis) {
            v = Verdict::boundary;
        } else {
            v = Verdict::pass;
        }
        return std::move(report_);
    }

private:
    void conclusion(const std::string& name, double v, double bound, double margin) {
        value(name, v);
        value(name + "_bound", bound);
        conclusion_ = std::min(conclusion_, margin);
    }

    VerificationReport report_;
    bool gates_ok_ = true;
    bool broken_ = false;
    double hypothesis_ = kInf;
    double conclusion_ = kInf;
};

PowerSeries one_plus(const PowerSeries& w) { return w + complex{1.0, 0.0}; }

// Shared body of the criterion-based theorems: gates on mu and lambda plus the
// subordination hypothesis on f'(z/f)^{1+mu}.
void criterion_hypothesis(ReportBuilder& b, const AnMember& f, complex mu, complex lambda, const RadialGrid& grid) {
    b.hypothesis("criterion", subordinate_to_disk(criterion_expression(f, mu), lambda, grid, f.n()));
}

double order_of(ReportBuilder& b, const AnMember& f, const RadialGrid& grid) {
    const auto est = starlikeness_order_ladder(f, grid);
    b.monotone(est);
    return est.extremum.value;
}

double deviation_of(ReportBuilder& b, const AnMember& f, const RadialGrid& grid) {
    const auto est = schwarz_ratio(starlike_quotient(f), grid, f.n());
    b.monotone(est);
    return est.extremum.value;
}

} // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::pass:
        return "PASS";
    case Verdict::boundary:
        return "BOUNDARY";
    case Verdict::hypothesis_not_met:
        return "HYPOTHESIS_NOT_MET";
    case Verdict::fail:
        return "FAIL";
    }
    return "UNKNOWN";
}

std::string_view to_string(TheoremId id) {
    switch (id) {
    case TheoremId::lemma21:
        return "lemma21";
    case TheoremId::lemma22_part1:
        return "lemma22a";
    case TheoremId::lemma22_part2:
        return "lemma22b";
    case TheoremId::theorem1:
        return "thm1";
    case TheoremId::theorem2:
        return "thm2";
    case TheoremId::theorem3:
        return "thm3";
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
    for (auto id : {TheoremId::lemma21, TheoremId::lemma22_part1, TheoremId::lemma22_part2, TheoremId::theorem1,
                    TheoremId::theorem2, TheoremId::theorem3}) {
        if (text == to_string(id)) {
            return id;
        }
    }
    return std::nullopt;
}

VerificationReport verify_lemma21(const H1nMember& p, complex mu, complex lambda, const RadialGrid& grid,
                                  const Tolerances& tol) {
    const int n = p.n();
    ReportBuilder b(TheoremId::lemma21, CriterionParams{n, mu, lambda, {}}, grid);
    const double L = std::abs(lambda);
    b.gate(base_gate(mu, n), "mu != 0 and Re(mu) < n");
    b.gate(L > 0.0 && L <= 1.0 + kGateSlack, "0 < |lambda| <= 1");
    if (mu == complex{} || L == 0.0) {
        return b.finish(tol);
    }
    const auto& s = p.series();
    const auto hyp = s - (1.0 / mu) * z_derivative(s);
    b.hypothesis("hypothesis", subordinate_to_disk(hyp, lambda, grid, n));
    b.value("lambda_abs", L);
    if (base_gate(mu, n) && L <= 1.0 + kGateSlack) {
        const auto est = schwarz_ratio(s, grid, n);
        b.monotone(est);
        b.upper("deviation_sup", est.extremum.value, lambda1_bound(lambda, mu, n));
    }
    return b.finish(tol);
}

VerificationReport verify_lemma22_part1(const H1nMember& Q, const H1nMember& p, complex lambda, complex lambda1,
                                        double alpha, const RadialGrid& grid, const Tolerances& tol, bool gate_alpha) {
    const int n = Q.n();
    ReportBuilder b(TheoremId::lemma22_part1, CriterionParams{n, {}, lambda, {}}, grid);
    const double L = std::abs(lambda);
    const double L1 = std::abs(lambda1);
    b.value("lambda1_abs", L1);
    b.value("alpha", alpha);
    b.gate(L1 > 0.0 && L1 < L && L < 1.0, "0 < |lambda1| < |lambda| < 1");
    b.gate(L * L + L1 * L1 <= 1.0 + kGateSlack, "|lambda|^2 + |lambda1|^2 <= 1");
    if (L1 > 0.0 && L1 < L && L < 1.0 && L * L + L1 * L1 <= 1.0 + kGateSlack) {
        const double threshold = alpha_threshold(L, L1).alpha;
        b.value("alpha_threshold", threshold);
        if (alpha > threshold + kGateSlack) {
            if (gate_alpha) {
                b.gate(false, "alpha <= alpha_threshold");
            } else {
                b.note("alpha above alpha_threshold scored on purpose (sharpness probe)");
            }
        }
    }
    if (L == 0.0 || L1 == 0.0) {
        return b.finish(tol);
    }
    b.hypothesis("q", subordinate_to_disk(Q.series(), lambda1, grid, n));
    const auto product = mul(Q.series(), alpha + (1.0 - alpha) * p.series());
    b.hypothesis("product", subordinate_to_disk(product, lambda, grid, n));
    const auto re = inf_real_part(p.series(), grid);
    b.monotone(re);
    b.lower("re_p_inf", re.extremum.value, 0.0);
    b.value("tail_mass", tail_mass(p.series(), grid.max_radius()));
    return b.finish(tol);
}

VerificationReport verify_lemma22_part2(const H1nMember& Q, const PowerSeries& w, complex lambda, complex lambda1,
                                        const RadialGrid& grid, const Tolerances& tol) {
    const int n = Q.n();
    ReportBuilder b(TheoremId::lemma22_part2, CriterionParams{n, {}, lambda, {}}, grid);
    const double L = std::abs(lambda);
    const double L1 = std::abs(lambda1);
    b.value("lambda1_abs", L1);
    const bool gates = L1 > 0.0 && L1 < L && L < 1.0 && L + 2.0 * L1 <= 1.0 + kGateSlack;
    b.gate(L1 > 0.0 && L1 < L && L < 1.0, "0 < |lambda1| < |lambda| < 1");
    b.gate(L + 2.0 * L1 <= 1.0 + kGateSlack, "|lambda| + 2|lambda1| <= 1");
    for (int k = 0; k < n; ++k) {
        if (std::abs(w[static_cast<std::size_t>(k)]) > kUnitTolerance) {
            b.gate(false, "w in H[0,n]");
            break;
        }
    }
    if (L == 0.0 || L1 == 0.0) {
        return b.finish(tol);
    }
    b.hypothesis("q", subordinate_to_disk(Q.series(), lambda1, grid, n));
    b.hypothesis("product", subordinate_to_disk(mul(Q.series(), one_plus(w)), lambda, grid, n));
    const auto est = schwarz_ratio(one_plus(w), grid, n);
    b.monotone(est);
    if (gates) {
        b.upper("w_sup", est.extremum.value, w_bound(L, L1));
    } else {
        b.value("w_sup", est.extremum.value);
    }
    b.value("tail_mass", tail_mass(w, grid.max_radius()));
    return b.finish(tol);
}

VerificationReport verify_theorem1(const AnMember& f, complex mu, complex lambda, const RadialGrid& grid,
                                   const Tolerances& tol) {
    const int n = f.n();
    ReportBuilder b(TheoremId::theorem1, CriterionParams{n, mu, lambda, {}}, grid);
    const bool gates = lambda_gate(lambda, mu, n);
    b.gate(base_gate(mu, n), "mu != 0 and Re(mu) < n");
    b.gate(gates, "0 < |lambda| <= |n-mu|/sqrt(|n-mu|^2+|mu|^2)");
    if (mu == complex{} || lambda == complex{}) {
        return b.finish(tol);
    }
    criterion_hypothesis(b, f, mu, lambda, grid);
    const double order = order_of(b, f, grid);
    if (gates) {
        const double L = std::abs(lambda);
        const double L1 = lambda1_bound(lambda, mu, n);
        b.value("lambda_max", lambda_max_starlike(mu, n));
        b.lower("starlike_order", order, 0.0);
        const auto arg = sup_abs_arg(starlike_quotient(f), grid);
        b.upper("abs_arg_sup", arg.extremum.value, arg_sum_bound(L, L1));
    } else {
        b.value("starlike_order", order);
    }
    return b.finish(tol);
}

VerificationReport verify_theorem2(const AnMember& f, complex mu, complex lambda, const RadialGrid& grid,
                                   const Tolerances& tol) {
    const int n = f.n();
    ReportBuilder b(TheoremId::theorem2, CriterionParams{n, mu, lambda, {}}, grid);
    const bool gates = order_gate(mu, n) && lambda_gate(lambda, mu, n);
    b.gate(order_gate(mu, n), "mu != 0 and Re(mu) < n/2");
    b.gate(lambda_gate(lambda, mu, n), "0 < |lambda| <= |n-mu|/sqrt(|n-mu|^2+|mu|^2)");
    if (mu == complex{} || lambda == complex{}) {
        return b.finish(tol);
    }
    criterion_hypothesis(b, f, mu, lambda, grid);
    const double order = order_of(b, f, grid);
    const double deviation = deviation_of(b, f, grid);
    if (!gates) {
        b.value("starlike_order", order);
        b.value("deviation_sup", deviation);
        return b.finish(tol);
    }
    const CriterionParams params{n, mu, lambda, {}};
    const auto alpha = thm2_order(params);
    b.lower("starlike_order", order, alpha.alpha);
    b.note(std::string("alpha regime ") + std::string(to_string(alpha.regime)) + (alpha.boundary ? " (seam)" : ""));
    if (std::abs(lambda) <= thm2_deviation_gate(mu, n) + kGateSlack) {
        const double bound = thm2_deviation(params);
        b.upper("deviation_sup", deviation, bound);
        const double composed = w_bound(std::abs(lambda), lambda1_bound(lambda, mu, n));
        b.value("deviation_bound_composed", composed);
        b.value("deviation_identity_gap", std::abs(composed - bound) / bound);
    } else {
        b.value("deviation_sup", deviation);
        b.note("deviation conclusion outside its gate |lambda| <= |n-mu|/(|n-mu|+2|mu|)");
    }
    return b.finish(tol);
}

VerificationReport verify_theorem3(const AnMember& f, complex mu, complex c, complex lambda, const RadialGrid& grid,
                                   const Tolerances& tol) {
    const int n = f.n();
    ReportBuilder b(TheoremId::theorem3, CriterionParams{n, mu, lambda, c}, grid);
    const complex shift = c - mu;
    const double L = std::abs(lambda);
    b.gate(base_gate(mu, n), "mu != 0 and Re(mu) < n");
    b.gate(shift != complex{} && shift.real() < n, "c != mu and Re(c-mu) < n");
    b.gate(shift.real() > 0.0, "Re(c-mu) > 0 (convergence of the defining integral at 0)");
    b.gate(L > 0.0 && L <= 1.0 + kGateSlack, "0 < |lambda| <= 1");
    if (mu == complex{} || shift == complex{} || L == 0.0) {
        return b.finish(tol);
    }
    TransformSpec spec;
    try {
        spec = TransformSpec::make(mu, c, f.order());
    } catch (const Resonance& e) {
        b.gate(false, e.what());
        return b.finish(tol);
    }
    criterion_hypothesis(b, f, mu, lambda, grid);
    const auto F = bernardi_transform(f, spec);
    b.requirement("identity_residual", identity_residual(F, f, spec), kResidualBound);

    const bool printed_gates = base_gate(mu, n) && shift.real() < n && L <= 1.0 + kGateSlack;
    if (!printed_gates) {
        return b.finish(tol);
    }
    const auto lambdas = thm3_lambdas(CriterionParams{n, mu, lambda, c});
    const double L1 = lambdas.lambda1_abs;
    const double L2 = lambdas.lambda2_abs;
    b.value("lambda1_abs", L1);
    b.value("lambda2_abs", L2);

    // Intermediate claim of the proof: F'(z/F)^{1+mu} < 1 + lambda1 z.
    const auto transformed = schwarz_ratio(criterion_expression(F, mu), grid, n);
    b.monotone(transformed);
    b.upper("transformed_criterion_sup", transformed.extremum.value, L1);

    const double order = order_of(b, F, grid);
    const double lmax = lambda_max_starlike(mu, n);
    if (L1 <= lmax + kGateSlack) {
        b.lower("starlike_order", order, 0.0);
        if (order_gate(mu, n)) {
            b.lower("starlike_order_alpha", order, alpha_threshold(L1, L2).alpha);
        }
    } else {
        b.value("starlike_order", order);
        b.note("starlikeness conclusions outside their gate |c-mu||lambda| <= |n-mu||n-(c-mu)|/sqrt(...)");
    }
    if (order_gate(mu, n) && L1 <= thm2_deviation_gate(mu, n) + kGateSlack) {
        b.upper("deviation_sup", deviation_of(b, F, grid), w_bound(L1, L2));
    }
    return b.finish(tol);
}

// ---------------------------------------------------------------------------

H1nMember lemma21_extremal(complex mu, complex lambda, int n, int order) {
    const double L1 = lambda1_bound(lambda, mu, n);
    const complex lambda1 = std::polar(L1, std::arg(lambda));
    return H1nMember::make(PowerSeries::constant(1.0, order) + PowerSeries::monomial(lambda1, n, order), n);
}

namespace {

// Coarse estimate used only to scale random inputs; verdicts use the full grid.
double single_radius_ratio(const PowerSeries& p, const RadialGrid& grid, int n) {
    RadialGrid outer{{grid.max_radius()}, std::min(grid.angular_count, 1024)};
    return schwarz_ratio(p, outer, n).extremum.value;
}

// Scales f = z + s (f0 - z) so the criterion deviation sits at `target`.
AnMember scale_to_target(const AnMember& f0, complex mu, double target, const RadialGrid& grid) {
    const auto& base = f0.series();
    const auto identity = PowerSeries::monomial(1.0, 1, base.order());
    const auto at = [&](double s) { return AnMember::make(identity + s * (base - identity), f0.n()); };
    const auto deviation = [&](double s) {
        try {
            return single_radius_ratio(criterion_expression(at(s), mu), grid, f0.n());
        } catch (const Error&) {
            return kInf;
        }
    };
    double hi = 1.0;
    if (deviation(hi) <= target) {
        return at(hi);
    }
    double lo = 0.0;
    for (int i = 0; i < 30; ++i) {
        const double mid = 0.5 * (lo + hi);
        (deviation(mid) <= target ? lo : hi) = mid;
    }
    return at(lo);
}

VerificationReport trial_report(const FamilySpec& family, const CriterionParams& params, TheoremId theorem,
                                std::int64_t trial, const RadialGrid& grid, const Tolerances& tol) {
    TrialRng rng(family.seed, static_cast<std::uint64_t>(trial));
    const int n = family.n;
    const int order = family.order;
    const complex mu = params.mu;
    const complex lambda = params.lambda;
    const double L = std::abs(lambda);
    const double tau = rng.uniform(0.5, 0.99);

    switch (theorem) {
    case TheoremId::lemma21: {
        if (family.include_extremal && trial == 0) {
            return verify_lemma21(lemma21_extremal(mu, lambda, n, order), mu, lambda, grid, tol);
        }
        const auto raw = random_h1n_perturbation(n, family.coefficient_budget, order, rng) - 1.0;
        const auto hyp = raw - (1.0 / mu) * z_derivative(raw);
        const double sup = single_radius_ratio(one_plus(hyp), grid, n);
        const double s = sup > 0.0 ? tau * L / sup : 1.0;
        return verify_lemma21(H1nMember::make(one_plus(s * raw), n), mu, lambda, grid, tol);
    }
    case TheoremId::lemma22_part1:
    case TheoremId::lemma22_part2: {
        const double L1 = lambda1_bound(lambda, mu, n);
        const complex lambda1 = std::polar(L1, rng.angle());
        const auto w0 = random_schwarz(n, order, rng.uniform(0.5, 1.0), rng);
        const auto w1 = random_schwarz(n, order, rng.uniform(0.5, 1.0), rng);
        const auto q = one_plus(lambda1 * w1);
        const auto ratio = mul(one_plus(lambda * w0), reciprocal(q));
        const auto Q = H1nMember::make(q, n);
        if (theorem == TheoremId::lemma22_part2) {
            return verify_lemma22_part2(Q, ratio - 1.0, lambda, lambda1, grid, tol);
        }
        const double alpha = alpha_threshold(L, L1).alpha;
        const auto p = (1.0 / (1.0 - alpha)) * (ratio - alpha);
        return verify_lemma22_part1(Q, H1nMember::make(p, n), lambda, lambda1, alpha, grid, tol);
    }
    case TheoremId::theorem1:
    case TheoremId::theorem2:
    case TheoremId::theorem3: {
        const auto raw = random_an_member(n, family.coefficient_budget, order, rng);
        const auto f = scale_to_target(raw, mu, tau * L, grid);
        if (theorem == TheoremId::theorem1) {
            return verify_theorem1(f, mu, lambda, grid, tol);
        }
        if (theorem == TheoremId::theorem2) {
            return verify_theorem2(f, mu, lambda, grid, tol);
        }
        if (!params.c) {
            throw GateViolation("transform parameter c is required");
        }
        return verify_theorem3(f, mu, *params.c, lambda, grid, tol);
    }
    }
    throw std::invalid_argument("unknown theorem id");
}

} // namespace

VerificationReport run_trial(const FamilySpec& family, const CriterionParams& params, TheoremId theorem,
                             std::int64_t trial, const RadialGrid& grid, const Tolerances& tol) {
    auto report = trial_report(family, params, theorem, trial, grid, tol);
    report.seed = family.seed;
    report.trial = trial;
    return report;
}

FalsifyResult falsify_search(const FamilySpec& family, const CriterionParams& params, TheoremId theorem, int trials,
                             const RadialGrid& grid, const Tolerances& tol) {
    grid.validate();
    // Only verdicts and margins are kept per trial. Holding every report makes
    // long sweeps fragment the heap badly; the closest reports are replayed.
    const auto count = static_cast<std::size_t>(std::max(trials, 0));
    std::vector<Verdict> verdicts(count);
    std::vector<double> margins(count);
    std::map<std::size_t, VerificationReport> kept;
    std::mutex kept_mutex;
    const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16U));
    const auto work = [&](unsigned first) {
        for (std::size_t i = first; i < count; i += workers) {
            auto r = run_trial(family, params, theorem, static_cast<std::int64_t>(i), grid, tol);
            verdicts[i] = r.verdict;
            margins[i] = r.conclusion_margin;
            if (r.verdict == Verdict::boundary || r.verdict == Verdict::fail) {
                std::lock_guard lock(kept_mutex);
                kept.emplace(i, std::move(r));
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    FalsifyResult out;
    std::vector<std::size_t> closest;
    for (std::size_t i = 0; i < count; ++i) {
        switch (verdicts[i]) {
        case Verdict::pass:
            ++out.counts.pass;
            break;
        case Verdict::boundary:
            ++out.counts.boundary;
            break;
        case Verdict::hypothesis_not_met:
            ++out.counts.hypothesis_not_met;
            break;
        case Verdict::fail:
            ++out.counts.fail;
            break;
        }
        if (verdicts[i] != Verdict::hypothesis_not_met) {
            closest.push_back(i);
        }
    }
    std::stable_sort(closest.begin(), closest.end(),
                     [&](std::size_t a, std::size_t b) { return margins[a] < margins[b]; });
    closest.resize(std::min<std::size_t>(closest.size(), 10));
    for (std::size_t i : closest) {
        if (!kept.contains(i)) {
            kept.emplace(i, run_trial(family, params, theorem, static_cast<std::int64_t>(i), grid, tol));
        }
    }
    for (auto& [i, r] : kept) {
        out.reports.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------

SharpnessResult sharpness_search(double L, double L1, SharpnessTarget which, int resolution, double radius, int n) {
    if (resolution < 1 || !(radius > 0.0 && radius < 1.0)) {
        throw std::invalid_argument("sharpness search needs resolution >= 1 and radius in (0,1)");
    }
    constexpr double kMoebius[] = {0.0, 0.5, 0.9, 0.99};
    const double sign = which == SharpnessTarget::alpha ? -1.0 : 1.0;
    SharpnessResult best;
    best.achieved = which == SharpnessTarget::alpha ? kInf : -kInf;
    for (double s : kMoebius) {
        // z^n (z + s)/(1 + s z) at z = radius, real and in (0, 1).
        const double m = std::pow(radius, n) * (radius + s) / (1.0 + s * radius);
        for (int i = 0; i < resolution; ++i) {
            const double t0 = 2.0 * std::numbers::pi * i / resolution;
            const complex a = L * m * std::polar(1.0, t0);
            for (int j = 0; j < resolution; ++j) {
                const double t1 = 2.0 * std::numbers::pi * j / resolution;
                const complex b = L1 * m * std::polar(1.0, t1);
                const double v = which == SharpnessTarget::alpha ? ((1.0 + a) / (1.0 + b)).real()
                                                                 : std::abs((a - b) / (1.0 + b));
                if (sign * v > sign * best.achieved) {
                    best.achieved = v;
                    best.config.theta0 = t0;
                    best.config.theta1 = t1;
                    best.config.s = s;
                }
            }
        }
    }
    const double t0 = best.config.theta0;
    const double t1 = best.config.theta1;
    best.config.system_residual1 = L * std::sin(t0) - L1 * std::sin(t1) + L * L1 * std::sin(t0 - t1);
    best.config.system_residual2 = 2.0 * (1.0 - L1 * L1) * L * std::cos(t0) + 2.0 * L * L * L1 * std::cos(t1) +
                                   2.0 * (1.0 - L1 * L1) * L * L1 * std::cos(t0 - t1) -
                                   (L1 * L1 - 1.0) * (1.0 + L * L - L1 * L1);
    return best;
}

} // namespace starlike
