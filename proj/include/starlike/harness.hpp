#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starlike/classes.hpp"
#include "starlike/criteria.hpp"
#include "starlike/disk.hpp"
#include "starlike/series.hpp"

namespace starlike {

enum class Verdict { pass, boundary, hypothesis_not_met, fail };

enum class TheoremId { lemma21, lemma22_part1, lemma22_part2, theorem1, theorem2, theorem3 };

std::string_view to_string(Verdict verdict);
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

struct Tolerances {
    double hypothesis = kBoundaryBand;  ///< |hypothesis margin| below this is BOUNDARY
    double conclusion = 1e-6;           ///< conclusion violations beyond this are FAIL
};

/// Outcome of checking one implication on one input.
struct VerificationReport {
    TheoremId theorem = TheoremId::theorem1;
    CriterionParams params;
    double hypothesis_margin = 0.0;
    std::map<std::string, double> conclusion_values;
    /// Smallest (bound - value) over the asserted conclusions; +inf when none applied.
    double conclusion_margin = 0.0;
    Verdict verdict = Verdict::pass;
    RadialGrid grid;
    bool ladder_monotone = true;
    std::vector<std::string> notes;
    std::uint64_t seed = 0;
    std::int64_t trial = -1;
};

/// Lemma: p - zp'/mu < 1 + lambda z implies p < 1 + lambda1 z, |lambda1| = lambda1_bound.
VerificationReport verify_lemma21(const H1nMember& p, complex mu, complex lambda, const RadialGrid& grid,
                                  const Tolerances& tol = {});

/// Lemma, part 1: Q < 1 + lambda1 z and Q[alpha + (1-alpha)p] < 1 + lambda z imply Re p > 0.
/// With `gate_alpha` false an alpha above alpha_threshold is still scored,
/// which is how the sharpness of the threshold shows up as FAIL verdicts.
VerificationReport verify_lemma22_part1(const H1nMember& Q, const H1nMember& p, complex lambda, complex lambda1,
                                        double alpha, const RadialGrid& grid, const Tolerances& tol = {},
                                        bool gate_alpha = true);

/// Lemma, part 2: Q < 1 + lambda1 z and Q(1 + w) < 1 + lambda z imply |w| < w_bound.
VerificationReport verify_lemma22_part2(const H1nMember& Q, const PowerSeries& w, complex lambda, complex lambda1,
                                        const RadialGrid& grid, const Tolerances& tol = {});

/// Criterion f'(z/f)^{1+mu} < 1 + lambda z implies f starlike.
VerificationReport verify_theorem1(const AnMember& f, complex mu, complex lambda, const RadialGrid& grid,
                                   const Tolerances& tol = {});

/// Same criterion implies order thm2_order and |zf'/f - 1| < thm2_deviation.
VerificationReport verify_theorem2(const AnMember& f, complex mu, complex lambda, const RadialGrid& grid,
                                   const Tolerances& tol = {});

/// Criterion on f transfers to the integral transform F with the lambda1, lambda2 chain.
VerificationReport verify_theorem3(const AnMember& f, complex mu, complex c, complex lambda, const RadialGrid& grid,
                                   const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Randomised falsification

struct FamilySpec {
    int n = 1;
    double coefficient_budget = 0.5;
    int count = 1000;
    std::uint64_t seed = 42;
    int order = 64;
    /// Trial 0 is replaced by the closed-form extremal input where one exists.
    bool include_extremal = false;
};

struct VerdictCounts {
    int pass = 0;
    int boundary = 0;
    int hypothesis_not_met = 0;
    int fail = 0;
    int total() const { return pass + boundary + hypothesis_not_met + fail; }
};

struct FalsifyResult {
    /// BOUNDARY and FAIL reports plus the ten smallest scored conclusion
    /// margins, without duplicates, ordered by trial index.
    std::vector<VerificationReport> reports;
    VerdictCounts counts;
};

/// Runs `trials` seeded trials of one implication. Trial i draws from a
/// substream keyed by (family.seed, i), so results do not depend on
/// scheduling and any single trial can be replayed with `run_trial`.
FalsifyResult falsify_search(const FamilySpec& family, const CriterionParams& params, TheoremId theorem, int trials,
                             const RadialGrid& grid = {}, const Tolerances& tol = {});

VerificationReport run_trial(const FamilySpec& family, const CriterionParams& params, TheoremId theorem,
                             std::int64_t trial, const RadialGrid& grid = {}, const Tolerances& tol = {});

/// p = 1 + lambda1 z^n with |lambda1| = lambda1_bound(lambda, mu, n).
H1nMember lemma21_extremal(complex mu, complex lambda, int n, int order);

// ---------------------------------------------------------------------------
// Sharpness

enum class SharpnessTarget { alpha, w_bound };

struct SharpnessConfig {
    double theta0 = 0.0;  ///< direction of lambda w0
    double theta1 = 0.0;  ///< direction of lambda1 w1
    double s = 0.0;       ///< Moebius parameter of the boundary concentrator
    /// Residuals of the two stationarity conditions of the second
    /// alpha regime, evaluated at (theta0, theta1).
    double system_residual1 = 0.0;
    double system_residual2 = 0.0;
};

struct SharpnessResult {
    double achieved = 0.0;
    SharpnessConfig config;
};

/// Grid search over directions (theta0, theta1), each on `resolution` equally
/// spaced angles, with w0 and w1 realised as z^n (z + s)/(1 + s z) evaluated at
/// z = radius. ALPHA minimises Re((1 + lambda w0)/(1 + lambda1 w1)); WBOUND
/// maximises |(lambda w0 - lambda1 w1)/(1 + lambda1 w1)|.
SharpnessResult sharpness_search(double L, double L1, SharpnessTarget which, int resolution, double radius = 0.999,
                                 int n = 1);

} // namespace starlike
