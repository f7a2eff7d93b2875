#pragma once

#include "starlike/series.hpp"

namespace starlike {

/// f(z) = z + a_{n+1} z^{n+1} + ... normalised on the disk.
///
/// The identity f(z) = z (a_{n+1} = 0) is accepted as the degenerate member so
/// that it can serve as the fixed point of the transforms; `degenerate()` tells
/// it apart.
class AnMember {
public:
    static AnMember make(PowerSeries series, int n, double tol = kUnitTolerance);

    const PowerSeries& series() const noexcept { return series_; }
    int n() const noexcept { return n_; }
    int order() const noexcept { return series_.order(); }
    bool degenerate() const noexcept;

private:
    AnMember(PowerSeries series, int n) : series_(std::move(series)), n_(n) {}

    PowerSeries series_;
    int n_;
};

/// p(z) = 1 + p_n z^n + p_{n+1} z^{n+1} + ...
class H1nMember {
public:
    static H1nMember make(PowerSeries series, int n, double tol = kUnitTolerance);

    const PowerSeries& series() const noexcept { return series_; }
    int n() const noexcept { return n_; }

private:
    H1nMember(PowerSeries series, int n) : series_(std::move(series)), n_(n) {}

    PowerSeries series_;
    int n_;
};

/// z/f(z) = 1/(f(z)/z). Order N-1, constant term 1, coefficients 1..n-1 vanish.
PowerSeries z_over_f(const AnMember& f);

/// f'(z) (z/f(z))^{1+mu}.
PowerSeries criterion_expression(const AnMember& f, complex mu);

/// z f'(z)/f(z) as a series of order N-1.
PowerSeries starlike_quotient(const AnMember& f);

} // namespace starlike
