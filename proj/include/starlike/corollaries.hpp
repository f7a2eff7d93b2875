#pragma once

#include <string_view>

namespace starlike {

/// Real-parameter, n = 1 specialisations of the general criteria.
///   c2_3 - two-disk product criterion (alpha and |w| bound with real lambda, lambda1)
///   c2_5 - starlikeness radius (1 - mu)/sqrt((1 - mu)^2 + mu^2)
///   c2_7 - order alpha and deviation lambda/(1 - mu - mu lambda)
///   c2_9 - the integral transform chain lambda1 = lambda (c - mu)/(1 - (c - mu))
enum class Corollary { c2_3, c2_5, c2_7, c2_9 };

std::string_view to_string(Corollary which);

struct CorollaryCheck {
    Corollary which = Corollary::c2_3;
    int points = 0;            ///< parameter points evaluated
    int comparisons = 0;       ///< formula pairs compared
    double max_rel_error = 0;  ///< worst |general - corollary| / |corollary|
    bool passed = false;
};

/// Sweeps real parameters and compares each corollary's own closed forms with
/// the general calculators. Passes when every relative error is <= tol.
CorollaryCheck corollary_reduction_check(Corollary which, int points = 100, double tol = 1e-14);

} // namespace starlike
