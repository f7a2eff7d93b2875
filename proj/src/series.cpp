#include "starlike/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starlike/errors.hpp"

namespace starlike {

namespace {

bool finite(complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

int common_order(const PowerSeries& a, const PowerSeries& b) { return std::min(a.order(), b.order()); }

} // namespace

PowerSeries::PowerSeries(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InvalidSeries("series needs at least one coefficient");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!finite(coeffs_[k])) {
            throw InvalidSeries("non-finite coefficient at index " + std::to_string(k));
        }
    }
}

PowerSeries PowerSeries::constant(complex value, int order) {
    return monomial(value, 0, order);
}

PowerSeries PowerSeries::monomial(complex value, int power, int order) {
    if (order < 0 || power < 0) {
        throw InvalidSeries("negative order or power");
    }
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    if (power <= order) {
        c[static_cast<std::size_t>(power)] = value;
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::from_terms(int order, std::initializer_list<std::pair<int, complex>> terms) {
    if (order < 0) {
        throw InvalidSeries("negative order");
    }
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    for (const auto& [k, v] : terms) {
        if (k < 0) {
            throw InvalidSeries("negative coefficient index");
        }
        if (k <= order) {
            c[static_cast<std::size_t>(k)] += v;
        }
    }
    return PowerSeries(std::move(c));
}

complex PowerSeries::operator()(complex z) const noexcept {
    complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order < 0) {
        throw InvalidSeries("negative order");
    }
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
    return PowerSeries(std::move(c));
}

int PowerSeries::valuation(double tol) const noexcept {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (std::abs(coeffs_[k]) > tol) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

double PowerSeries::tail_norm() const noexcept {
    double m = 0.0;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        m = std::max(m, std::abs(coeffs_[k]));
    }
    return m;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = common_order(a, b);
    std::vector<complex> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] + b[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = common_order(a, b);
    std::vector<complex> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] - b[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a) { return complex{-1.0, 0.0} * a; }

PowerSeries operator*(complex s, const PowerSeries& a) {
    std::vector<complex> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : c) {
        v *= s;
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, complex s) { return s * a; }

PowerSeries operator+(const PowerSeries& a, complex s) {
    std::vector<complex> c(a.coeffs().begin(), a.coeffs().end());
    c[0] += s;
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, complex s) { return a + (-s); }

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    const auto n = static_cast<std::size_t>(common_order(a, b));
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        complex acc{};
        for (std::size_t j = 0; j <= k; ++j) {
            acc += ac[j] * bc[k - j];
        }
        c[k] = acc;
    }
    return PowerSeries(std::move(c));
}

PowerSeries derivative(const PowerSeries& f) {
    if (f.order() == 0) {
        return PowerSeries::constant(0.0, 0);
    }
    const auto fc = f.coeffs();
    std::vector<complex> c(fc.size() - 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = static_cast<double>(k + 1) * fc[k + 1];
    }
    return PowerSeries(std::move(c));
}

PowerSeries z_derivative(const PowerSeries& f) {
    std::vector<complex> c(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] *= static_cast<double>(k);
    }
    return PowerSeries(std::move(c));
}

PowerSeries shift_up(const PowerSeries& f) {
    std::vector<complex> c;
    c.reserve(f.coeffs().size() + 1);
    c.push_back(0.0);
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return PowerSeries(std::move(c));
}

PowerSeries shift_down(const PowerSeries& f, double tol) {
    if (std::abs(f[0]) > tol) {
        throw InvalidSeries("shift_down needs a vanishing constant term");
    }
    if (f.order() == 0) {
        return PowerSeries::constant(0.0, 0);
    }
    return PowerSeries(std::vector<complex>(f.coeffs().begin() + 1, f.coeffs().end()));
}

PowerSeries reciprocal(const PowerSeries& f, double zero_threshold) {
    const auto fc = f.coeffs();
    if (std::abs(fc[0]) < zero_threshold) {
        throw ZeroConstantTerm("reciprocal of a series with |c0| < threshold");
    }
    const complex inv0 = 1.0 / fc[0];
    std::vector<complex> r(fc.size());
    r[0] = inv0;
    for (std::size_t k = 1; k < r.size(); ++k) {
        complex acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += fc[j] * r[k - j];
        }
        r[k] = -inv0 * acc;
    }
    return PowerSeries(std::move(r));
}

PowerSeries log(const PowerSeries& f, double unit_tol) {
    const complex c0 = f[0];
    if (std::abs(c0 - 1.0) > unit_tol) {
        throw NonUnitConstantTerm("log needs constant term 1");
    }
    // Work with f/c0 so the recurrence sees an exact unit constant.
    const auto g = (1.0 / c0) * f;
    const auto gc = g.coeffs();
    std::vector<complex> l(gc.size());
    l[0] = std::log(c0);
    for (std::size_t k = 1; k < l.size(); ++k) {
        complex acc{};
        for (std::size_t j = 1; j < k; ++j) {
            acc += static_cast<double>(j) * l[j] * gc[k - j];
        }
        l[k] = gc[k] - acc / static_cast<double>(k);
    }
    return PowerSeries(std::move(l));
}

PowerSeries exp(const PowerSeries& g) {
    const auto gc = g.coeffs();
    std::vector<complex> e(gc.size());
    e[0] = 1.0;
    for (std::size_t k = 1; k < e.size(); ++k) {
        complex acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * gc[j] * e[k - j];
        }
        e[k] = acc / static_cast<double>(k);
    }
    if (gc[0] != complex{}) {
        const complex s = std::exp(gc[0]);
        for (auto& v : e) {
            v *= s;
        }
    }
    return PowerSeries(std::move(e));
}

PowerSeries cpow(const PowerSeries& f, complex mu, double unit_tol) {
    if (std::abs(f[0] - 1.0) > unit_tol) {
        throw NonUnitConstantTerm("complex power needs constant term 1");
    }
    // Drop the O(tol) constant of mu * log(c0) so the result starts at exactly 1.
    auto g = mu * log(f, unit_tol);
    std::vector<complex> gc(g.coeffs().begin(), g.coeffs().end());
    gc[0] = 0.0;
    return exp(PowerSeries(std::move(gc)));
}

} // namespace starlike
