#include "starlike/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "starlike/disk.hpp"

namespace starlike {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(splitmix64(splitmix64(seed) ^ trial)) {}

double TrialRng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int TrialRng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

complex TrialRng::uniform_disk(double radius) {
    const double r = radius * std::sqrt(uniform01());
    return std::polar(r, angle());
}

double TrialRng::angle() { return 2.0 * std::numbers::pi * uniform01(); }

AnMember random_an_member(int n, double budget, int order, TrialRng& rng) {
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    c[1] = 1.0;
    double radius = budget;
    for (int k = n + 1; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = rng.uniform_disk(radius);
        radius *= 0.5;
    }
    return AnMember::make(PowerSeries(std::move(c)), n);
}

PowerSeries random_h1n_perturbation(int n, double budget, int order, TrialRng& rng) {
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1.0;
    double radius = budget;
    for (int k = n; k <= order; ++k) {
        c[static_cast<std::size_t>(k)] = rng.uniform_disk(radius);
        radius *= 0.5;
    }
    return PowerSeries(std::move(c));
}

PowerSeries moebius_schwarz(int n, complex s, double rotation, int order) {
    // (z + s) sum_k (-conj(s) z)^k
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    const complex q = -std::conj(s);
    complex qk = std::polar(1.0, rotation);
    for (int k = 0; n + k <= order; ++k) {
        c[static_cast<std::size_t>(n + k)] += s * qk;
        if (n + k + 1 <= order) {
            c[static_cast<std::size_t>(n + k + 1)] += qk;
        }
        qk *= q;
    }
    return PowerSeries(std::move(c));
}

PowerSeries random_schwarz(int n, int order, double max_modulus, TrialRng& rng) {
    if (rng.uniform01() < 0.5) {
        const complex s = rng.uniform_disk(0.5);
        return max_modulus * moebius_schwarz(n, s, rng.angle(), order);
    }
    const int degree = rng.uniform_int(0, std::min(3, order - n));
    std::vector<complex> g(static_cast<std::size_t>(degree) + 1);
    double radius = 1.0;
    for (auto& v : g) {
        v = rng.uniform_disk(radius);
        radius *= 0.5;
    }
    const PowerSeries gs(g);
    const auto values = eval_on_circle(gs, 1.0, 1024);
    double top = 0.0;
    for (complex v : values) {
        top = std::max(top, std::abs(v));
    }
    if (top == 0.0) {
        return max_modulus * PowerSeries::monomial(1.0, n, order);
    }
    // Sampling at 1024 angles underestimates the circle maximum of a degree <= 3
    // polynomial by far less than 1e-4.
    const double scale = max_modulus / (top * (1.0 + 1e-4));
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= degree; ++k) {
        c[static_cast<std::size_t>(n + k)] = scale * g[static_cast<std::size_t>(k)];
    }
    return PowerSeries(std::move(c));
}

} // namespace starlike
