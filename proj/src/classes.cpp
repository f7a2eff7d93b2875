#include "starlike/classes.hpp"

#include <cmath>
#include <string>

#include "starlike/errors.hpp"

namespace starlike {

AnMember AnMember::make(PowerSeries series, int n, double tol) {
    if (n < 1) {
        throw MembershipError("A_n needs n >= 1");
    }
    if (series.order() < n + 1) {
        throw MembershipError("A_n member needs order >= n + 1");
    }
    if (std::abs(series[0]) > tol || std::abs(series[1] - 1.0) > tol) {
        throw MembershipError("A_n member must start z + ...");
    }
    for (int k = 2; k <= n; ++k) {
        if (std::abs(series[static_cast<std::size_t>(k)]) > tol) {
            throw MembershipError("A_n member has nonzero coefficient at z^" + std::to_string(k));
        }
    }
    return AnMember(std::move(series), n);
}

bool AnMember::degenerate() const noexcept { return series_[static_cast<std::size_t>(n_) + 1] == complex{}; }

H1nMember H1nMember::make(PowerSeries series, int n, double tol) {
    if (n < 1) {
        throw MembershipError("H[1,n] needs n >= 1");
    }
    if (std::abs(series[0] - 1.0) > tol) {
        throw MembershipError("H[1,n] member must have constant term 1");
    }
    for (int k = 1; k < n; ++k) {
        if (std::abs(series[static_cast<std::size_t>(k)]) > tol) {
            throw MembershipError("H[1,n] member has nonzero coefficient at z^" + std::to_string(k));
        }
    }
    return H1nMember(std::move(series), n);
}

PowerSeries z_over_f(const AnMember& f) { return reciprocal(shift_down(f.series())); }

PowerSeries criterion_expression(const AnMember& f, complex mu) {
    return mul(derivative(f.series()), cpow(z_over_f(f), 1.0 + mu));
}

PowerSeries starlike_quotient(const AnMember& f) { return mul(derivative(f.series()), z_over_f(f)); }

} // namespace starlike
