#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace starlike {

using complex = std::complex<double>;

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N with complex coefficients.
///
/// Coefficients are stored densely from index 0. Every coefficient is finite.
/// Binary operations truncate to the smaller of the two orders, so coefficient k
/// of a result depends only on coefficients <= k of the operands and is never
/// contaminated by truncation.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<complex> coeffs);

    static PowerSeries constant(complex value, int order);
    static PowerSeries monomial(complex value, int power, int order);

    /// Builds a dense series from (index, coefficient) pairs; indices above
    /// `order` are dropped and repeated indices accumulate.
    static PowerSeries from_terms(int order, std::initializer_list<std::pair<int, complex>> terms);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient k, zero beyond the truncation order.
    complex operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : complex{}; }

    /// Horner evaluation of the truncated polynomial.
    complex operator()(complex z) const noexcept;

    PowerSeries truncated(int order) const;

    /// Index of the first coefficient with modulus above `tol`, or -1 if none.
    int valuation(double tol = 0.0) const noexcept;

    /// Max |c_k| over k = 1..N.
    double tail_norm() const noexcept;

private:
    std::vector<complex> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(complex s, const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, complex s);
PowerSeries operator+(const PowerSeries& a, complex s);
PowerSeries operator-(const PowerSeries& a, complex s);
inline PowerSeries operator+(complex s, const PowerSeries& a) { return a + s; }
inline PowerSeries operator-(complex s, const PowerSeries& a) { return -a + s; }

/// Truncated Cauchy product.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

/// f' with order N-1.
PowerSeries derivative(const PowerSeries& f);

/// z f'(z), same order as f.
PowerSeries z_derivative(const PowerSeries& f);

/// z f(z), order N+1.
PowerSeries shift_up(const PowerSeries& f);

/// f(z)/z, order N-1. Requires c_0 == 0 (exactly, or below `tol`).
PowerSeries shift_down(const PowerSeries& f, double tol = 1e-12);

inline constexpr double kDefaultZeroThreshold = 1e-12;
inline constexpr double kUnitTolerance = 1e-12;

/// 1/f. Throws ZeroConstantTerm if |c_0| < zero_threshold.
PowerSeries reciprocal(const PowerSeries& f, double zero_threshold = kDefaultZeroThreshold);

/// Principal log of a series with c_0 == 1.
PowerSeries log(const PowerSeries& f, double unit_tol = kUnitTolerance);

/// exp of a series; the constant term enters as the scalar factor e^{c_0}.
PowerSeries exp(const PowerSeries& g);

/// f^mu = exp(mu log f) for c_0 == 1; the result has constant term exactly 1.
/// Throws NonUnitConstantTerm otherwise.
PowerSeries cpow(const PowerSeries& f, complex mu, double unit_tol = kUnitTolerance);

} // namespace starlike
