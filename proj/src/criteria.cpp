#include "starlike/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "starlike/errors.hpp"

namespace starlike {

namespace {

void require_mu(complex mu) {
    if (mu == complex{}) {
        throw ZeroMu();
    }
}

void require_base(complex mu, int n) {
    require_mu(mu);
    if (!(mu.real() < n)) {
        throw GateViolation("Re(mu) < n violated");
    }
}

void require_order_gate(complex mu, int n) {
    require_mu(mu);
    if (!(mu.real() < 0.5 * n)) {
        throw GateViolation("Re(mu) < n/2 violated");
    }
}

void require_lambda(complex lambda) {
    const double L = std::abs(lambda);
    if (!(L > 0.0) || L > 1.0 + kGateSlack) {
        throw GateViolation("0 < |lambda| <= 1 violated");
    }
}

} // namespace

std::string_view to_string(Regime regime) {
    return regime == Regime::sum_at_most_one ? "SUM_AT_MOST_ONE" : "SQUARES_AT_MOST_ONE";
}

bool base_gate(complex mu, int n) { return mu != complex{} && mu.real() < n; }

bool order_gate(complex mu, int n) { return mu != complex{} && mu.real() < 0.5 * n; }

bool lambda_gate(complex lambda, complex mu, int n) {
    if (!base_gate(mu, n)) {
        return false;
    }
    const double L = std::abs(lambda);
    return L > 0.0 && L <= lambda_max_starlike(mu, n) + kGateSlack;
}

double lambda1_bound(complex lambda, complex mu, int n) {
    require_base(mu, n);
    require_lambda(lambda);
    return std::abs(lambda) * std::abs(mu) / std::abs(static_cast<double>(n) - mu);
}

double h_function(double phi, double L, double L1) {
    const double c = std::cos(phi);
    return (1.0 - L * L1 * c - std::sqrt(L * L - 2.0 * L * L1 * c + L1 * L1)) / (1.0 - L1 * L1);
}

AlphaResult alpha_threshold(double L, double L1) {
    if (!(L1 >= 0.0 && L1 < L && L < 1.0)) {
        throw GateViolation("0 <= |lambda1| < |lambda| < 1 violated");
    }
    if (L * L + L1 * L1 > 1.0 + kGateSlack) {
        throw GateViolation("|lambda|^2 + |lambda1|^2 <= 1 violated");
    }
    AlphaResult out;
    const double sum = L + L1;
    out.boundary = std::abs(sum - 1.0) <= kGateSlack;
    if (sum <= 1.0 || out.boundary) {
        out.regime = Regime::sum_at_most_one;
        out.alpha = (1.0 - L) / (1.0 + L1);
    } else {
        out.regime = Regime::squares_at_most_one;
        out.alpha = (1.0 - (L * L + L1 * L1)) / (2.0 * (1.0 - L1 * L1));
    }
    // Any smaller alpha is also admissible; report the best one in [0, 1).
    out.alpha = std::clamp(out.alpha, 0.0, std::nextafter(1.0, 0.0));
    return out;
}

double w_bound(double L, double L1) {
    if (L < 0.0 || L1 < 0.0 || L + 2.0 * L1 > 1.0 + kGateSlack) {
        throw GateViolation("|lambda| + 2|lambda1| <= 1 violated");
    }
    return (L + L1) / (1.0 - L1);
}

double lambda_max_starlike(complex mu, int n) {
    require_base(mu, n);
    const double a = std::abs(static_cast<double>(n) - mu);
    const double b = std::abs(mu);
    return a / std::hypot(a, b);
}

double arg_sum_bound(double L, double L1) {
    if (!(L >= 0.0 && L < 1.0 && L1 >= 0.0 && L1 < 1.0)) {
        throw GateViolation("moduli must lie in [0, 1)");
    }
    const double a = L / std::sqrt(1.0 - L * L);
    const double b = L1 / std::sqrt(1.0 - L1 * L1);
    const double denom = 1.0 - a * b;
    if (denom < -kGateSlack) {
        throw GateViolation("argument sum exceeds pi/2");
    }
    // atan a + atan b = atan((a + b)/(1 - ab)) on the admissible side.
    if (std::abs(denom) <= kGateSlack) {
        return std::numbers::pi / 2.0;
    }
    return std::atan2(a + b, denom);
}

double thm2_regime_split(complex mu, int n) {
    const double a = std::abs(static_cast<double>(n) - mu);
    return a / (a + std::abs(mu));
}

double thm2_deviation_gate(complex mu, int n) {
    const double a = std::abs(static_cast<double>(n) - mu);
    return a / (a + 2.0 * std::abs(mu));
}

AlphaResult thm2_order(const CriterionParams& params) {
    require_order_gate(params.mu, params.n);
    require_lambda(params.lambda);
    const double L = std::abs(params.lambda);
    if (L > lambda_max_starlike(params.mu, params.n) + kGateSlack) {
        throw GateViolation("|lambda| exceeds lambda_max");
    }
    return alpha_threshold(L, lambda1_bound(params.lambda, params.mu, params.n));
}

double thm2_deviation(const CriterionParams& params) {
    require_order_gate(params.mu, params.n);
    require_lambda(params.lambda);
    const double L = std::abs(params.lambda);
    if (L > thm2_deviation_gate(params.mu, params.n) + kGateSlack) {
        throw GateViolation("|lambda| exceeds the deviation gate |n-mu|/(|n-mu|+2|mu|)");
    }
    const double a = std::abs(static_cast<double>(params.n) - params.mu);
    const double b = std::abs(params.mu);
    return (a + b) * L / (a - b * L);
}

TransformLambdas thm3_lambdas(const CriterionParams& params) {
    if (!params.c) {
        throw GateViolation("transform parameter c is required");
    }
    require_base(params.mu, params.n);
    require_lambda(params.lambda);
    const complex s = *params.c - params.mu;
    if (s == complex{}) {
        throw GateViolation("c == mu is excluded");
    }
    if (!(s.real() < params.n)) {
        throw GateViolation("Re(c - mu) < n violated");
    }
    const double n = params.n;
    TransformLambdas out;
    out.lambda1_abs = std::abs(params.lambda) * std::abs(s) / std::abs(n - s);
    out.lambda2_abs = out.lambda1_abs * std::abs(params.mu) / std::abs(n - params.mu);
    return out;
}

} // namespace starlike
