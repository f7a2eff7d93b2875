#pragma once

#include <cstdint>
#include <random>

#include "starlike/classes.hpp"
#include "starlike/series.hpp"

namespace starlike {

/// Per-trial random stream. Uniform variates are built directly from the raw
/// 64-bit engine output so streams are identical across standard libraries.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    double uniform01();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    int uniform_int(int lo, int hi);  ///< inclusive
    complex uniform_disk(double radius);
    double angle();

private:
    std::mt19937_64 engine_;
};

/// Coefficients a_{n+1+j} uniform in the disk of radius budget * 0.5^j.
AnMember random_an_member(int n, double budget, int order, TrialRng& rng);

/// 1 + sum_{k>=n} b_k z^k with b_{n+j} uniform in the disk of radius budget * 0.5^j.
PowerSeries random_h1n_perturbation(int n, double budget, int order, TrialRng& rng);

/// Random analytic w with an n-fold zero at 0 and sup_{|z|<1} |w| <= max_modulus.
///
/// Either z^n g(z) with g a low-degree polynomial normalised on the unit
/// circle, or a boundary-concentrating z^n e^{i t} (z + s)/(1 + conj(s) z)
/// with |s| <= 0.5, truncated at `order`.
PowerSeries random_schwarz(int n, int order, double max_modulus, TrialRng& rng);

/// z^n e^{i rotation} (z + s)/(1 + conj(s) z) truncated at `order`.
PowerSeries moebius_schwarz(int n, complex s, double rotation, int order);

} // namespace starlike
