#include <gtest/gtest.h>

#include <cmath>

#include "starlike/errors.hpp"
#include "starlike/generators.hpp"
#include "starlike/harness.hpp"
#include "starlike/json_io.hpp"

using namespace starlike;

namespace {

const RadialGrid kGrid{};

AnMember identity(int n = 1, int order = 64) { return AnMember::make(PowerSeries::monomial(1.0, 1, order), n); }

AnMember one_term(complex a, int n = 1, int order = 64) {
    return AnMember::make(PowerSeries::from_terms(order, {{1, 1.0}, {n + 1, a}}), n);
}

H1nMember h1n(std::initializer_list<std::pair<int, complex>> terms, int n, int order = 64) {
    auto s = PowerSeries::from_terms(order, terms) + 1.0;
    return H1nMember::make(s, n);
}

// z + a z^{n+1}, starting from |a| = 0.9 |lambda|/|n - mu| (first-order
// calibration) and shrunk until the criterion sits 5% inside the disk.
AnMember calibrated_one_term(complex mu, double L, int n) {
    double a = 0.9 * L / std::abs(double(n) - mu);
    for (;;) {
        const auto f = one_term(a, n);
        if (subordinate_to_disk(criterion_expression(f, mu), L, kGrid, n).margin > 0.05 * L) {
            return f;
        }
        a *= 0.9;
    }
}

void expect_no_fail(const FalsifyResult& r, const char* what) {
    EXPECT_EQ(r.counts.fail, 0) << what;
    for (const auto& rep : r.reports) {
        EXPECT_NE(rep.verdict, Verdict::fail) << what << " trial " << rep.trial;
    }
}

} // namespace

namespace starlike {
void PrintTo(Verdict v, std::ostream* os) { *os << to_string(v); }
} // namespace starlike

TEST(Names, RoundTrip) {
    for (auto id : {TheoremId::lemma21, TheoremId::lemma22_part1, TheoremId::lemma22_part2, TheoremId::theorem1,
                    TheoremId::theorem2, TheoremId::theorem3}) {
        EXPECT_EQ(parse_theorem_id(to_string(id)), id);
    }
    EXPECT_FALSE(parse_theorem_id("thm9"));
    EXPECT_EQ(to_string(Verdict::hypothesis_not_met), "HYPOTHESIS_NOT_MET");
}

TEST(Lemma21, TrivialPasses) {
    const auto r = verify_lemma21(h1n({}, 1), 0.25, 0.5, kGrid);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_NEAR(r.hypothesis_margin, 0.5, 1e-15);
    EXPECT_NEAR(r.conclusion_margin, lambda1_bound(0.5, 0.25, 1), 1e-15);
}

TEST(Lemma21, ExtremalIsBoundary) {
    for (int n = 1; n <= 3; ++n) {
        for (complex mu : {complex(0.25), complex(-0.5, 0.7), complex(0.9 * n)}) {
            const complex lambda = std::polar(0.6, 0.4);
            const auto r = verify_lemma21(lemma21_extremal(mu, lambda, n, 64), mu, lambda, kGrid);
            EXPECT_EQ(r.verdict, Verdict::boundary) << n << " " << mu;
            EXPECT_LE(std::abs(r.hypothesis_margin), 1e-12);
            EXPECT_LE(std::abs(r.conclusion_margin), 1e-12);
        }
    }
}

TEST(Lemma21, GateFailureIsReported) {
    const auto r = verify_lemma21(h1n({}, 1), 1.5, 0.5, kGrid);
    EXPECT_EQ(r.verdict, Verdict::hypothesis_not_met);
    EXPECT_GE(r.notes.size(), 2U);
}

TEST(Lemma21, RandomSweep) {
    FamilySpec fam;
    fam.seed = 7;
    const auto r = falsify_search(fam, {1, 0.25, 0.5, {}}, TheoremId::lemma21, 500);
    expect_no_fail(r, "lemma21");
    EXPECT_EQ(r.counts.total(), 500);
    EXPECT_GT(r.counts.pass, 450);
}

TEST(Lemma22, TrivialPasses) {
    const auto one = h1n({}, 1);
    EXPECT_EQ(verify_lemma22_part1(one, one, 0.5, 0.25, 0.4, kGrid).verdict, Verdict::pass);
    EXPECT_EQ(verify_lemma22_part2(one, PowerSeries::constant(0.0, 64), 0.4, 0.2, kGrid).verdict, Verdict::pass);
}

TEST(Lemma22, AlphaIsSharp) {
    // Q = 1 - t L1 z and Q times the ratio is 1 + t L z: at z = -1 the ratio is
    // (1 - t L)/(1 + t L1), which tends to the threshold as t -> 1.
    const double L = 0.5;
    const double L1 = 0.25;
    const double t = 0.99;
    const auto Q = h1n({{1, -t * L1}}, 1);
    const auto ratio = mul(PowerSeries::from_terms(64, {{0, 1.0}, {1, t * L}}), reciprocal(Q.series()));
    const double alpha = alpha_threshold(L, L1).alpha;
    const auto at = [&](double a) {
        const auto p = H1nMember::make((1.0 / (1.0 - a)) * (ratio - a), 1);
        return verify_lemma22_part1(Q, p, L, L1, a, kGrid, {}, false);
    };
    const auto exact = at(alpha);
    EXPECT_EQ(exact.verdict, Verdict::pass);
    EXPECT_LT(exact.conclusion_values.at("re_p_inf"), 0.01);
    EXPECT_EQ(at(alpha + 0.05).verdict, Verdict::fail);
    // With gating on, an inflated alpha is outside the hypotheses.
    const auto p = H1nMember::make(ratio, 1);
    EXPECT_EQ(verify_lemma22_part1(Q, p, L, L1, alpha + 0.05, kGrid).verdict, Verdict::hypothesis_not_met);
}

TEST(Lemma22, WBoundApproached) {
    const double L = 0.4;
    const double L1 = 0.2;
    const auto Q = h1n({{1, -L1}}, 1);
    // w = (L + L1) z/(1 - L1 z)
    const auto w = (L + L1) * mul(PowerSeries::monomial(1.0, 1, 64), reciprocal(Q.series()));
    const auto r = verify_lemma22_part2(Q, w, L, L1, kGrid);
    EXPECT_NE(r.verdict, Verdict::fail);
    EXPECT_NEAR(r.conclusion_values.at("w_sup"), w_bound(L, L1), 1e-3);
}

TEST(Lemma22, RandomSweeps) {
    FamilySpec fam;
    fam.seed = 8;
    const CriterionParams params{1, 0.25, 0.5, {}};
    expect_no_fail(falsify_search(fam, params, TheoremId::lemma22_part1, 200), "lemma22a");
    expect_no_fail(falsify_search(fam, {1, 0.2, 0.5, {}}, TheoremId::lemma22_part2, 200), "lemma22b");
}

TEST(Theorem1, Examples) {
    EXPECT_EQ(verify_theorem1(identity(), 0.5, 0.5, kGrid).verdict, Verdict::pass);
    for (int n = 1; n <= 3; ++n) {
        const complex mu{0.3, 0.2};
        const complex lambda = 0.6;
        const auto r = verify_theorem1(calibrated_one_term(mu, std::abs(lambda), n), mu, lambda, kGrid);
        EXPECT_EQ(r.verdict, Verdict::pass) << n;
    }
}

TEST(Theorem1, OutsideGateIsNotScored) {
    const auto r = verify_theorem1(one_term(0.1), 0.5, 0.8, kGrid);
    EXPECT_EQ(r.verdict, Verdict::hypothesis_not_met);
}

TEST(Theorem2, CalibratedOneTermGrid) {
    for (double mu : {-0.5, -0.1, 0.1, 0.25, 0.45}) {
        for (double t : {0.1, 0.3, 0.5, 0.7, 0.95}) {
            const double L = t * lambda_max_starlike(mu, 1);
            const auto r = verify_theorem2(calibrated_one_term(mu, L, 1), mu, L, kGrid);
            EXPECT_EQ(r.verdict, Verdict::pass) << mu << " " << L;
            if (r.conclusion_values.count("deviation_identity_gap")) {
                EXPECT_LE(r.conclusion_values.at("deviation_identity_gap"), 1e-14);
            }
        }
    }
}

TEST(Theorem2, IdentityPasses) {
    const auto r = verify_theorem2(identity(), 0.25, 0.5, kGrid);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(r.conclusion_values.at("starlike_order"), 1.0);
    EXPECT_EQ(r.conclusion_values.at("deviation_sup"), 0.0);
}

TEST(Theorem3, Examples) {
    EXPECT_EQ(verify_theorem3(identity(), 0.3, 0.8, 0.3, kGrid).verdict, Verdict::pass);
    const auto r = verify_theorem3(one_term(0.05), 0.3, 0.8, 0.3, kGrid);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_LE(r.conclusion_values.at("identity_residual"), 1e-9);
}

TEST(Theorem3, NegativeShiftIsGated) {
    const auto r = verify_theorem3(one_term(0.05), 0.3, 0.1, 0.3, kGrid);
    EXPECT_EQ(r.verdict, Verdict::hypothesis_not_met);
}

TEST(Theorems, RandomSweeps) {
    FamilySpec fam;
    fam.seed = 9;
    for (int n = 1; n <= 2; ++n) {
        fam.n = n;
        expect_no_fail(falsify_search(fam, {n, {0.2, 0.1}, 0.6, {}}, TheoremId::theorem1, 100), "thm1");
        expect_no_fail(falsify_search(fam, {n, {0.25, -0.1}, 0.5, {}}, TheoremId::theorem2, 100), "thm2");
        expect_no_fail(falsify_search(fam, {n, 0.3, 0.4, complex(0.8)}, TheoremId::theorem3, 100), "thm3");
    }
}

TEST(Falsify, ExtremalGivesExactlyOneBoundary) {
    FamilySpec fam;
    fam.include_extremal = true;
    const auto r = falsify_search(fam, {1, 0.25, 0.5, {}}, TheoremId::lemma21, 100);
    EXPECT_EQ(r.counts.boundary, 1);
    EXPECT_EQ(r.counts.fail, 0);
    ASSERT_FALSE(r.reports.empty());
    EXPECT_EQ(r.reports.front().trial, 0);
    EXPECT_EQ(r.reports.front().verdict, Verdict::boundary);
}

TEST(Falsify, DeterministicAndReplayable) {
    FamilySpec fam;
    fam.seed = 1234;
    const CriterionParams params{1, 0.25, 0.5, {}};
    const auto a = falsify_search(fam, params, TheoremId::theorem2, 40);
    const auto b = falsify_search(fam, params, TheoremId::theorem2, 40);
    ASSERT_EQ(a.reports.size(), b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        EXPECT_EQ(json(a.reports[i]).dump(), json(b.reports[i]).dump());
        const auto replay = run_trial(fam, params, TheoremId::theorem2, a.reports[i].trial);
        EXPECT_EQ(json(replay).dump(), json(a.reports[i]).dump());
    }
    for (std::size_t i = 1; i < a.reports.size(); ++i) {
        EXPECT_LT(a.reports[i - 1].trial, a.reports[i].trial);
    }
}

TEST(Sharpness, Spots) {
    const auto a = sharpness_search(0.5, 0.25, SharpnessTarget::alpha, 128);
    EXPECT_LE(a.achieved, 0.4 + 2e-3);
    EXPECT_GE(a.achieved, 0.4 - 1e-12);
    const auto w = sharpness_search(0.4, 0.2, SharpnessTarget::w_bound, 128);
    EXPECT_GE(w.achieved, 0.75 - 2e-3);
    EXPECT_LE(w.achieved, 0.75 + 1e-12);
    const auto d = sharpness_search(0.3, 0.0, SharpnessTarget::alpha, 128);
    EXPECT_NEAR(d.achieved, 0.7, 1e-3);
}

TEST(Sharpness, ImprovesAlongLadder) {
    double prev_a = INFINITY;
    double prev_w = -INFINITY;
    for (int res : {32, 64, 128}) {
        const double a = sharpness_search(0.5, 0.25, SharpnessTarget::alpha, res).achieved;
        const double w = sharpness_search(0.4, 0.2, SharpnessTarget::w_bound, res).achieved;
        EXPECT_LE(a, prev_a);
        EXPECT_GE(w, prev_w);
        prev_a = a;
        prev_w = w;
    }
}

TEST(Sharpness, SecondRegimeResidualsReported) {
    const auto r = sharpness_search(0.8, 0.3, SharpnessTarget::alpha, 256);
    EXPECT_NEAR(r.achieved, alpha_threshold(0.8, 0.3).alpha, 5e-3);
    EXPECT_TRUE(std::isfinite(r.config.system_residual1));
    EXPECT_TRUE(std::isfinite(r.config.system_residual2));
}

TEST(Report, JsonShape) {
    const auto r = verify_theorem1(identity(), 0.5, 0.5, kGrid);
    const json j = r;
    EXPECT_EQ(j["theorem_id"], "thm1");
    EXPECT_EQ(j["verdict"], "PASS");
    EXPECT_EQ(j["grid"]["angular_count"], 4096);
    EXPECT_TRUE(j["params"]["c"].is_null());
    EXPECT_FALSE(j["notes"].empty());
}
