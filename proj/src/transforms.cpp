#include "starlike/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starlike/errors.hpp"

namespace starlike {

namespace {

constexpr double kResonanceTol = 1e-12;

void check_resonance(complex shift, int order) {
    for (int k = 1; k <= order; ++k) {
        if (std::abs(shift + static_cast<double>(k)) < kResonanceTol) {
            throw Resonance("(c - mu) + " + std::to_string(k) + " vanishes");
        }
    }
}

} // namespace

TransformSpec TransformSpec::make(complex mu, complex c, int order) {
    if (mu == complex{}) {
        throw ZeroMu();
    }
    if (c == mu) {
        throw GateViolation("c == mu is excluded");
    }
    if (order < 1) {
        throw InvalidSeries("transform order must be positive");
    }
    check_resonance(c - mu, order);
    return TransformSpec{mu, c, order};
}

PowerSeries q_series(const AnMember& f, complex mu) { return cpow(z_over_f(f), mu); }

PowerSeries bernardi_kernel(const PowerSeries& q, const TransformSpec& spec) {
    const complex s = spec.shift();
    check_resonance(s, std::max(spec.order, q.order()));
    std::vector<complex> g(q.coeffs().begin(), q.coeffs().end());
    for (std::size_t k = 1; k < g.size(); ++k) {
        g[k] *= s / (s + static_cast<double>(k));
    }
    return PowerSeries(std::move(g));
}

AnMember transform_from_kernel(const PowerSeries& g, const TransformSpec& spec, int n) {
    return AnMember::make(shift_up(cpow(g, -1.0 / spec.mu)), n);
}

AnMember bernardi_transform(const AnMember& f, const TransformSpec& spec) {
    return transform_from_kernel(bernardi_kernel(q_series(f, spec.mu), spec), spec, f.n());
}

double identity_residual(const AnMember& transformed, const AnMember& f, const TransformSpec& spec, int K) {
    const auto q = criterion_expression(transformed, spec.mu);
    const auto lhs = q + (1.0 / spec.shift()) * z_derivative(q);
    const auto rhs = criterion_expression(f, spec.mu);
    const int top = std::min({K < 0 ? f.order() / 2 : K, lhs.order(), rhs.order()});
    double worst = 0.0;
    for (int k = 0; k <= top; ++k) {
        worst = std::max(worst, std::abs(lhs[static_cast<std::size_t>(k)] - rhs[static_cast<std::size_t>(k)]));
    }
    return worst;
}

double transform_identity_residual(const AnMember& f, const TransformSpec& spec, int K) {
    return identity_residual(bernardi_transform(f, spec), f, spec, K);
}

} // namespace starlike
