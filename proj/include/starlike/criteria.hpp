#pragma once

#include <optional>
#include <string_view>

#include "starlike/series.hpp"

namespace starlike {

/// Parameters shared by the starlikeness criteria. Gates are checked by each
/// calculator, not at construction.
struct CriterionParams {
    int n = 1;
    complex mu{0.5, 0.0};
    complex lambda{0.5, 0.0};
    std::optional<complex> c;
};

enum class Regime { sum_at_most_one, squares_at_most_one };

std::string_view to_string(Regime regime);

struct AlphaResult {
    double alpha = 0.0;
    Regime regime = Regime::sum_at_most_one;
    bool boundary = false;  ///< L + L1 == 1 within 1e-12; both branches agree
};

/// Slack granted to non-strict gate inequalities.
inline constexpr double kGateSlack = 1e-12;

/// |lambda| |mu| / |n - mu|. Gates: Re(mu) < n, mu != 0, 0 < |lambda| <= 1.
double lambda1_bound(complex lambda, complex mu, int n);

/// Lower bound of Re((1 + lambda w0)/(1 + lambda1 w1)) along the direction
/// difference phi, for moduli L = |lambda| and L1 = |lambda1|.
double h_function(double phi, double L, double L1);

/// Best (largest) alpha for which Re p > 0 follows; the minimum of h over phi.
/// Gates: 0 <= L1 < L < 1 and L^2 + L1^2 <= 1.
AlphaResult alpha_threshold(double L, double L1);

/// (L + L1)/(1 - L1), the bound on |w|. Gate: L + 2 L1 <= 1.
double w_bound(double L, double L1);

/// |n - mu| / sqrt(|n - mu|^2 + |mu|^2). Gates: Re(mu) < n, mu != 0.
double lambda_max_starlike(complex mu, int n);

/// asin(L) + asin(L1), combined through the arctan addition formula.
/// Gate: 1 - L L1 / sqrt((1 - L^2)(1 - L1^2)) >= 0, i.e. the sum is <= pi/2.
double arg_sum_bound(double L, double L1);

/// Order of starlikeness for the criterion with |lambda1| = lambda1_bound.
/// Gates: Re(mu) < n/2, 0 < |lambda| <= lambda_max_starlike(mu, n).
AlphaResult thm2_order(const CriterionParams& params);

/// |n - mu| / (|n - mu| + |mu|): the |lambda| at which the alpha regimes meet.
double thm2_regime_split(complex mu, int n);

/// |n - mu| / (|n - mu| + 2|mu|): the largest |lambda| for the deviation bound.
double thm2_deviation_gate(complex mu, int n);

/// (|n - mu| + |mu|)|lambda| / (|n - mu| - |mu||lambda|), bounding |z f'/f - 1|.
/// Gates: Re(mu) < n/2, 0 < |lambda| <= thm2_deviation_gate(mu, n).
double thm2_deviation(const CriterionParams& params);

struct TransformLambdas {
    double lambda1_abs = 0.0;  ///< |lambda| |c - mu| / |n - (c - mu)|
    double lambda2_abs = 0.0;  ///< lambda1_abs |mu| / |n - mu|
};

/// Moduli for the integral-transform theorem, chained as in its statement.
/// Gates: c given, Re(c - mu) < n, c != mu, mu != 0, Re(mu) < n.
TransformLambdas thm3_lambdas(const CriterionParams& params);

/// Gate helpers; each returns true when the printed inequality holds.
bool base_gate(complex mu, int n);                    ///< mu != 0 and Re(mu) < n
bool order_gate(complex mu, int n);                   ///< mu != 0 and Re(mu) < n/2
bool lambda_gate(complex lambda, complex mu, int n);  ///< 0 < |lambda| <= lambda_max_starlike

} // namespace starlike
