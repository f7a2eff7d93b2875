#pragma once

#include "starlike/classes.hpp"
#include "starlike/series.hpp"

namespace starlike {

/// Parameters of the weighted-antiderivative transform
///   F(z) = z [ (c-mu) z^{-(c-mu)} \int_0^z (t/f(t))^mu t^{c-mu-1} dt ]^{-1/mu}.
struct TransformSpec {
    complex mu;
    complex c;
    int order = 64;

    /// Throws GateViolation for mu == 0 or c == mu, Resonance when
    /// (c - mu) + k == 0 for some 1 <= k <= order.
    static TransformSpec make(complex mu, complex c, int order);

    complex shift() const noexcept { return c - mu; }
};

/// Q = (z/f)^mu.
PowerSeries q_series(const AnMember& f, complex mu);

/// G = (c-mu) z^{-(c-mu)} \int_0^z Q(t) t^{c-mu-1} dt, coefficientwise
/// g_k = q_k (c-mu)/((c-mu)+k).
PowerSeries bernardi_kernel(const PowerSeries& q, const TransformSpec& spec);

/// F = z G^{-1/mu}; keeps the order and n of f.
AnMember bernardi_transform(const AnMember& f, const TransformSpec& spec);

/// Builds F from an already computed kernel G.
AnMember transform_from_kernel(const PowerSeries& g, const TransformSpec& spec, int n);

/// max_{k <= K} |[Q + zQ'/(c-mu) - f'(z/f)^{1+mu}]_k| with Q the criterion
/// expression of `transformed`. K < 0 selects N/2.
double identity_residual(const AnMember& transformed, const AnMember& f, const TransformSpec& spec, int K = -1);

/// identity_residual for F = bernardi_transform(f, spec).
double transform_identity_residual(const AnMember& f, const TransformSpec& spec, int K = -1);

} // namespace starlike
