#include "starlike/disk.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "starlike/errors.hpp"

namespace starlike {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMonotoneSlack = 1e-12;

struct FftwFree {
    void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer make_buffer(int m) {
    auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(m)));
    if (p == nullptr) {
        throw std::bad_alloc();
    }
    return FftwBuffer(p);
}

// One backward plan per length. Planning is serialised; fftw_execute_dft on
// fftw_malloc'd buffers is safe from any thread.
fftw_plan backward_plan(int m) {
    static std::mutex mutex;
    static std::map<int, fftw_plan> plans;
    std::lock_guard lock(mutex);
    if (auto it = plans.find(m); it != plans.end()) {
        return it->second;
    }
    auto in = make_buffer(m);
    auto out = make_buffer(m);
    fftw_plan plan = fftw_plan_dft_1d(m, in.get(), out.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
    plans.emplace(m, plan);
    return plan;
}

complex on_circle(double r, double theta) { return std::polar(r, theta); }

// Golden-section search for the maximum of g on [a, b].
double golden_argmax(const std::function<double(double)>& g, double a, double b, int iterations = 60) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int i = 0; i < iterations; ++i) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        }
    }
    return g1 >= g2 ? x1 : x2;
}

// Best sample of `sampled` (maximum of sign * value), then golden-section
// refinement of `exact` over the neighbouring cells.
BoundEstimate circle_extremum(const std::vector<double>& sampled, const std::function<double(double)>& exact,
                              double r, double sign, EstimateKind kind) {
    const int m = static_cast<int>(sampled.size());
    int best = 0;
    for (int j = 1; j < m; ++j) {
        if (sign * sampled[static_cast<std::size_t>(j)] > sign * sampled[static_cast<std::size_t>(best)]) {
            best = j;
        }
    }
    const double step = kTwoPi / m;
    double theta = step * best;
    double value = exact(theta);
    const double refined = golden_argmax([&](double t) { return sign * exact(t); }, theta - step, theta + step);
    if (const double v = exact(refined); sign * v > sign * value) {
        theta = refined;
        value = v;
    }
    return BoundEstimate{value, on_circle(r, theta), r, kind};
}

bool is_sorted_for(const std::vector<BoundEstimate>& est, double sign) {
    for (std::size_t i = 1; i < est.size(); ++i) {
        const double prev = est[i - 1].value;
        const double slack = kMonotoneSlack * std::max(1.0, std::abs(prev));
        if (sign * est[i].value < sign * prev - slack) {
            return false;
        }
    }
    return true;
}

LadderEstimate assemble(std::vector<BoundEstimate> per_radius, std::vector<double> skipped, double sign) {
    LadderEstimate out;
    out.monotone = is_sorted_for(per_radius, sign);
    out.extremum = *std::max_element(per_radius.begin(), per_radius.end(), [sign](const auto& a, const auto& b) {
        return sign * a.value < sign * b.value;
    });
    out.per_radius = std::move(per_radius);
    out.skipped_radii = std::move(skipped);
    return out;
}

void require_unit_constant(const PowerSeries& p) {
    if (std::abs(p[0] - 1.0) > kUnitTolerance) {
        throw NonUnitConstantTerm("deviation estimates need p(0) = 1");
    }
}

LadderEstimate deviation_ladder(const PowerSeries& p, const RadialGrid& grid, int valuation, EstimateKind kind) {
    grid.validate();
    std::vector<BoundEstimate> per_radius;
    for (double r : grid.radii) {
        const double scale = std::pow(r, -valuation);
        const auto values = eval_on_circle(p, r, grid.angular_count);
        std::vector<double> dev(values.size());
        std::transform(values.begin(), values.end(), dev.begin(),
                       [&](complex v) { return std::abs(v - 1.0) * scale; });
        per_radius.push_back(circle_extremum(
            dev, [&](double t) { return std::abs(p(on_circle(r, t)) - 1.0) * scale; }, r, 1.0, kind));
    }
    return assemble(std::move(per_radius), {}, 1.0);
}

// Extremum of value(p(z)) over the grid; sign = +1 for max, -1 for min.
LadderEstimate pointwise_ladder(const PowerSeries& p, const RadialGrid& grid, double (*value)(complex), double sign,
                                EstimateKind kind) {
    grid.validate();
    std::vector<BoundEstimate> per_radius;
    for (double r : grid.radii) {
        const auto values = eval_on_circle(p, r, grid.angular_count);
        std::vector<double> mapped(values.size());
        std::transform(values.begin(), values.end(), mapped.begin(), value);
        per_radius.push_back(circle_extremum(
            mapped, [&](double t) { return value(p(on_circle(r, t))); }, r, sign, kind));
    }
    return assemble(std::move(per_radius), {}, sign);
}

} // namespace

void RadialGrid::validate() const {
    if (radii.empty()) {
        throw std::invalid_argument("radial grid needs at least one radius");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) {
            throw std::invalid_argument("grid radii must lie in (0,1)");
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            throw std::invalid_argument("grid radii must be strictly ascending");
        }
    }
    if (angular_count < 1) {
        throw std::invalid_argument("angular count must be positive");
    }
}

std::string_view to_string(EstimateKind kind) {
    switch (kind) {
    case EstimateKind::sup_abs_deviation:
        return "sup_abs_deviation";
    case EstimateKind::inf_real_part:
        return "inf_real_part";
    case EstimateKind::sup_schwarz_ratio:
        return "sup_schwarz_ratio";
    }
    return "unknown";
}

std::vector<complex> eval_on_circle(const PowerSeries& p, double r, int M) {
    if (M < 1) {
        throw std::invalid_argument("angular count must be positive");
    }
    const auto c = p.coeffs();
    auto in = make_buffer(M);
    auto out = make_buffer(M);
    std::fill_n(&in[0][0], 2 * static_cast<std::size_t>(M), 0.0);
    double rk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto slot = k % static_cast<std::size_t>(M);
        in[slot][0] += c[k].real() * rk;
        in[slot][1] += c[k].imag() * rk;
        rk *= r;
    }
    fftw_execute_dft(backward_plan(M), in.get(), out.get());
    std::vector<complex> values(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        values[static_cast<std::size_t>(j)] = complex(out[j][0], out[j][1]);
    }
    return values;
}

std::vector<complex> eval_on_circle_horner(const PowerSeries& p, double r, int M) {
    std::vector<complex> values(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        values[static_cast<std::size_t>(j)] = p(on_circle(r, kTwoPi * j / M));
    }
    return values;
}

BoundEstimate sup_abs_deviation(const PowerSeries& p, const RadialGrid& grid) {
    return sup_abs_deviation_ladder(p, grid).extremum;
}

LadderEstimate sup_abs_deviation_ladder(const PowerSeries& p, const RadialGrid& grid) {
    require_unit_constant(p);
    return deviation_ladder(p, grid, 0, EstimateKind::sup_abs_deviation);
}

LadderEstimate schwarz_ratio(const PowerSeries& p, const RadialGrid& grid, int valuation) {
    require_unit_constant(p);
    if (valuation <= 0) {
        valuation = std::max(1, (p - 1.0).valuation(1e-13));
    }
    return deviation_ladder(p, grid, valuation, EstimateKind::sup_schwarz_ratio);
}

DiskSubordination subordinate_to_disk(const PowerSeries& p, complex lambda, const RadialGrid& grid, int valuation,
                                      double band) {
    if (lambda == complex{}) {
        throw std::invalid_argument("lambda must be nonzero");
    }
    DiskSubordination out;
    out.estimate = schwarz_ratio(p, grid, valuation);
    out.margin = std::abs(lambda) - out.estimate.extremum.value;
    out.boundary = std::abs(out.margin) <= band;
    out.holds = out.margin >= -band;
    return out;
}

LadderEstimate inf_real_part(const PowerSeries& p, const RadialGrid& grid) {
    return pointwise_ladder(p, grid, [](complex v) { return v.real(); }, -1.0, EstimateKind::inf_real_part);
}

LadderEstimate sup_abs_arg(const PowerSeries& p, const RadialGrid& grid) {
    return pointwise_ladder(p, grid, [](complex v) { return std::abs(std::arg(v)); }, 1.0,
                            EstimateKind::sup_abs_deviation);
}

BoundEstimate starlikeness_order(const AnMember& f, const RadialGrid& grid, double zero_threshold) {
    return starlikeness_order_ladder(f, grid, zero_threshold).extremum;
}

LadderEstimate starlikeness_order_ladder(const AnMember& f, const RadialGrid& grid, double zero_threshold) {
    grid.validate();
    const auto& s = f.series();
    const auto zd = z_derivative(s);
    const auto fprime = derivative(s);
    std::vector<BoundEstimate> per_radius;
    std::vector<double> skipped;
    for (double r : grid.radii) {
        const auto fv = eval_on_circle(s, r, grid.angular_count);
        const auto dv = eval_on_circle(zd, r, grid.angular_count);
        const bool has_zero =
            std::any_of(fv.begin(), fv.end(), [&](complex v) { return std::abs(v) < zero_threshold; });
        if (has_zero) {
            skipped.push_back(r);
            continue;
        }
        std::vector<double> re(fv.size());
        for (std::size_t j = 0; j < fv.size(); ++j) {
            re[j] = (dv[j] / fv[j]).real();
        }
        const auto exact = [&](double t) {
            const complex z = on_circle(r, t);
            return (z * fprime(z) / s(z)).real();
        };
        per_radius.push_back(circle_extremum(re, exact, r, -1.0, EstimateKind::inf_real_part));
    }
    if (per_radius.empty()) {
        throw ZeroOnCircle("f vanishes on every sampled circle");
    }
    return assemble(std::move(per_radius), std::move(skipped), -1.0);
}

complex jack_lemma_witness(const PowerSeries& w, int n, double r, int coarse) {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("radius must lie in (0,1)");
    }
    for (int k = 0; k < n; ++k) {
        if (std::abs(w[static_cast<std::size_t>(k)]) > kUnitTolerance) {
            throw InvalidSeries("Jack witness needs w with an n-fold zero at the origin");
        }
    }
    const int lead = w.valuation();
    if (lead < 0) {
        throw DegenerateMaximum("w vanishes identically");
    }
    bool monomial = true;
    for (int k = lead + 1; k <= w.order(); ++k) {
        monomial = monomial && w[static_cast<std::size_t>(k)] == complex{};
    }
    if (monomial) {
        return complex(static_cast<double>(lead), 0.0);
    }
    const auto values = eval_on_circle(w, r, coarse);
    std::vector<double> mod(values.size());
    std::transform(values.begin(), values.end(), mod.begin(), [](complex v) { return std::abs(v); });
    const auto [lo, hi] = std::minmax_element(mod.begin(), mod.end());
    if (*hi - *lo <= 1e-12 * *hi) {
        throw DegenerateMaximum("|w| is constant on the circle");
    }
    const auto best = circle_extremum(
        mod, [&](double t) { return std::abs(w(on_circle(r, t))); }, r, 1.0, EstimateKind::sup_abs_deviation);
    const complex z0 = best.witness;
    return z0 * derivative(w)(z0) / w(z0);
}

} // namespace starlike
