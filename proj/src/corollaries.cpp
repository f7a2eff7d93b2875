#include "starlike/corollaries.hpp"

#include <algorithm>
#include <cmath>

#include "starlike/criteria.hpp"

namespace starlike {

namespace {

// The corollaries' own closed forms, written with real parameters only.
double cor_alpha(double lam, double lam1) {
    if (lam + lam1 <= 1.0) {
        return (1.0 - lam) / (1.0 + lam1);
    }
    return (1.0 - (lam * lam + lam1 * lam1)) / (2.0 * (1.0 - lam1 * lam1));
}

double cor_wbound(double lam, double lam1) { return (lam + lam1) / (1.0 - lam1); }

double cor_lambda_max(double mu) { return (1.0 - mu) / std::sqrt((1.0 - mu) * (1.0 - mu) + mu * mu); }

class Tally {
public:
    explicit Tally(CorollaryCheck& out) : out_(out) {}

    void compare(double general, double corollary) {
        ++out_.comparisons;
        const double err = std::abs(general - corollary) / std::max(std::abs(corollary), 1e-300);
        out_.max_rel_error = std::max(out_.max_rel_error, err);
    }

    void compare(bool general, bool corollary) { compare(general ? 1.0 : 2.0, corollary ? 1.0 : 2.0); }

private:
    CorollaryCheck& out_;
};

double frac(int i, int count) { return (i + 0.5) / count; }

void check_c2_3(int points, Tally& tally) {
    for (int i = 0; i < points; ++i) {
        const double lam = 0.05 + 0.9 * frac(i, points);
        const double lam1 = lam * (0.05 + 0.9 * frac((i * 7) % points, points));
        // Arbitrary phases: the general formulas only see moduli.
        const complex l = std::polar(lam, 0.3 * i);
        const complex l1 = std::polar(lam1, -0.7 * i);
        if (lam * lam + lam1 * lam1 <= 1.0) {
            tally.compare(alpha_threshold(std::abs(l), std::abs(l1)).alpha, cor_alpha(lam, lam1));
        }
        if (lam + 2.0 * lam1 <= 1.0) {
            tally.compare(w_bound(std::abs(l), std::abs(l1)), cor_wbound(lam, lam1));
        }
    }
}

void check_c2_5(int points, Tally& tally) {
    for (int i = 0; i < points; ++i) {
        const double mu = frac(i, points);
        tally.compare(lambda_max_starlike(mu, 1), cor_lambda_max(mu));
    }
}

void check_c2_7(int points, Tally& tally) {
    for (int i = 0; i < points; ++i) {
        const double mu = 0.49 * frac(i, points);
        const double lam = cor_lambda_max(mu) * (0.02 + 0.93 * frac((i * 13) % points, points));
        const double lam1 = lam * mu / (1.0 - mu);
        const CriterionParams params{1, mu, lam, {}};
        tally.compare(lambda1_bound(lam, mu, 1), lam1);
        const double alpha = lam <= 1.0 - mu ? (1.0 - lam) / (1.0 + lam1)
                                             : (1.0 - (lam * lam + lam1 * lam1)) / (2.0 * (1.0 - lam1 * lam1));
        tally.compare(thm2_order(params).alpha, alpha);
        tally.compare(thm2_regime_split(mu, 1), 1.0 - mu);
        if (lam <= (1.0 - mu) / (1.0 + mu)) {
            tally.compare(thm2_deviation(params), lam / (1.0 - mu - mu * lam));
        }
    }
}

void check_c2_9(int points, Tally& tally) {
    for (int i = 0; i < points; ++i) {
        const double mu = 0.02 + 0.46 * frac(i, points);
        const double s = 0.05 + 0.85 * frac((i * 7) % points, points);  // c - mu
        const double c = mu + s;
        const double lmax = cor_lambda_max(mu);
        const double lam = std::min(1.0, 0.95 * lmax * (1.0 - s) / s) * (0.05 + 0.9 * frac((i * 11) % points, points));
        const double lam1 = lam * s / (1.0 - s);
        const double lam2 = lam1 * mu / (1.0 - mu);
        const CriterionParams params{1, mu, lam, c};
        const auto general = thm3_lambdas(params);
        tally.compare(general.lambda1_abs, lam1);
        tally.compare(general.lambda2_abs, lam2);

        const bool cor_starlike = s * lam <= (1.0 - mu) * (1.0 - s) / std::sqrt((1.0 - mu) * (1.0 - mu) + mu * mu);
        tally.compare(general.lambda1_abs <= lambda_max_starlike(mu, 1) + kGateSlack, cor_starlike);

        if (lam1 <= lmax) {
            const double alpha = lam1 <= 1.0 - mu ? (1.0 - lam1) / (1.0 + lam2)
                                                  : (1.0 - (lam1 * lam1 + lam2 * lam2)) / (2.0 * (1.0 - lam2 * lam2));
            tally.compare(alpha_threshold(general.lambda1_abs, general.lambda2_abs).alpha, alpha);
        }
        if (lam <= (1.0 - s) * (1.0 - mu) / (s * (1.0 + mu))) {
            const double dev = s * lam / ((1.0 - s) * (1.0 - mu) - s * mu * lam);
            tally.compare(w_bound(general.lambda1_abs, general.lambda2_abs), dev);
        }
    }
}

} // namespace

std::string_view to_string(Corollary which) {
    switch (which) {
    case Corollary::c2_3:
        return "C2_3";
    case Corollary::c2_5:
        return "C2_5";
    case Corollary::c2_7:
        return "C2_7";
    case Corollary::c2_9:
        return "C2_9";
    }
    return "unknown";
}

CorollaryCheck corollary_reduction_check(Corollary which, int points, double tol) {
    CorollaryCheck out;
    out.which = which;
    out.points = points;
    Tally tally(out);
    switch (which) {
    case Corollary::c2_3:
        check_c2_3(points, tally);
        break;
    case Corollary::c2_5:
        check_c2_5(points, tally);
        break;
    case Corollary::c2_7:
        check_c2_7(points, tally);
        break;
    case Corollary::c2_9:
        check_c2_9(points, tally);
        break;
    }
    out.passed = out.comparisons > 0 && out.max_rel_error <= tol;
    return out;
}

} // namespace starlike
