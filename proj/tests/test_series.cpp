#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "starlike/classes.hpp"
#include "starlike/errors.hpp"
#include "starlike/series.hpp"
#include "test_support.hpp"

using namespace starlike;
using starlike::testing::max_coeff_diff;
using starlike::testing::naive_eval;
using starlike::testing::random_series;

namespace {

constexpr int N = 16;

PowerSeries poly(std::vector<complex> c) { return PowerSeries(std::move(c)); }

} // namespace

TEST(PowerSeries, RejectsEmptyAndNonFinite) {
    EXPECT_THROW(PowerSeries(std::vector<complex>{}), InvalidSeries);
    EXPECT_THROW(poly({1.0, {NAN, 0.0}}), InvalidSeries);
    EXPECT_THROW(poly({1.0, INFINITY}), InvalidSeries);
}

TEST(PowerSeries, FromTermsIsDense) {
    const auto s = PowerSeries::from_terms(5, {{0, 1.0}, {3, 2.0}, {3, 1.0}, {9, 7.0}});
    EXPECT_EQ(s.order(), 5);
    EXPECT_EQ(s[3], complex(3.0));
    EXPECT_EQ(s[1], complex(0.0));
    EXPECT_EQ(s[40], complex(0.0));
}

TEST(PowerSeries, ArithmeticTakesSmallerOrder) {
    const auto a = PowerSeries::constant(1.0, 8);
    const auto b = PowerSeries::constant(1.0, 5);
    EXPECT_EQ((a + b).order(), 5);
    EXPECT_EQ(mul(a, b).order(), 5);
    EXPECT_EQ((a - b).order(), 5);
}

TEST(Mul, DifferenceOfSquares) {
    const auto p = mul(poly({1.0, 1.0, 0.0}), poly({1.0, -1.0, 0.0}));
    EXPECT_EQ(p[0], complex(1.0));
    EXPECT_EQ(p[1], complex(0.0));
    EXPECT_EQ(p[2], complex(-1.0));
}

TEST(Mul, UnitIsIdentity) {
    std::mt19937_64 rng(1);
    const auto f = random_series(rng, N, 1.0, {0.3, 0.2});
    EXPECT_EQ(max_coeff_diff(mul(f, PowerSeries::constant(1.0, N)), f, N), 0.0);
}

TEST(Mul, MatchesPointwiseProductOfPolynomials) {
    // Degree 7 each, order 14: the truncated product is the exact product.
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 7, 1.0, {0.5, -0.1}).truncated(14);
        const auto b = random_series(rng, 7, 1.0, {-0.2, 0.4}).truncated(14);
        const auto ab = mul(a, b);
        double err = 0.0;
        for (int j = 0; j < 32; ++j) {
            const complex z = std::polar(0.5, 2.0 * std::numbers::pi * j / 32);
            err = std::max(err, std::abs(ab(z) - a(z) * b(z)));
        }
        EXPECT_LE(err, 1e-12);
    }
}

TEST(Mul, Distributive) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, N, 1.0, {1.0, 0.3});
        const auto b = random_series(rng, N, 1.0, {0.2, 0.0});
        const auto c = random_series(rng, N, 1.0, {-0.7, 0.1});
        EXPECT_LE(max_coeff_diff(mul(a + b, c), mul(a, c) + mul(b, c), N), 1e-12);
    }
}

TEST(Derivative, Basics) {
    const auto d = derivative(PowerSeries::monomial(1.0, 2, 4));
    EXPECT_EQ(d.order(), 3);
    EXPECT_EQ(d[1], complex(2.0));
    EXPECT_EQ(d[0], complex(0.0));
    const auto c = derivative(PowerSeries::constant(3.0, 4));
    for (int k = 0; k <= c.order(); ++k) {
        EXPECT_EQ(c[static_cast<std::size_t>(k)], complex(0.0));
    }
}

TEST(Derivative, MatchesCentralDifference) {
    std::mt19937_64 rng(4);
    const auto f = random_series(rng, N, 1.0, {0.1, 0.0});
    const double h = 1e-5;
    const complex z = 0.3;
    const complex fd = (f(z + h) - f(z - h)) / (2.0 * h);
    EXPECT_LE(std::abs(derivative(f)(z) - fd), 1e-8);
}

TEST(Derivative, ZDerivativeAndShifts) {
    const auto f = poly({0.0, 1.0, 2.0, 3.0});
    const auto zd = z_derivative(f);
    EXPECT_EQ(zd[3], complex(9.0));
    EXPECT_EQ(shift_up(f).order(), 4);
    EXPECT_EQ(shift_up(f)[4], complex(3.0));
    EXPECT_EQ(shift_down(f)[0], complex(1.0));
    EXPECT_THROW(shift_down(poly({1.0, 1.0})), InvalidSeries);
}

TEST(Reciprocal, GeometricSeries) {
    const auto r = reciprocal(poly({1.0, -1.0, 0.0, 0.0, 0.0, 0.0}));
    for (int k = 0; k <= 5; ++k) {
        EXPECT_EQ(r[static_cast<std::size_t>(k)], complex(1.0));
    }
    EXPECT_EQ(reciprocal(PowerSeries::constant(1.0, 3))[0], complex(1.0));
}

TEST(Reciprocal, RandomResidual) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_series(rng, N, 1.0, 1.0);
        const auto one = mul(f, reciprocal(f));
        EXPECT_LE(max_coeff_diff(one, PowerSeries::constant(1.0, N), N), 1e-12);
    }
}

TEST(Reciprocal, ZeroConstantTermThrows) {
    EXPECT_THROW(reciprocal(poly({0.0, 1.0})), ZeroConstantTerm);
    EXPECT_THROW(reciprocal(poly({1e-13, 1.0})), ZeroConstantTerm);
    EXPECT_NO_THROW(reciprocal(poly({1e-13, 1.0}), 1e-14));
}

TEST(Cpow, IntegerPower) {
    const auto p = cpow(poly({1.0, 1.0, 0.0, 0.0}), 2.0);
    EXPECT_LE(std::abs(p[0] - 1.0), 1e-15);
    EXPECT_LE(std::abs(p[1] - 2.0), 1e-15);
    EXPECT_LE(std::abs(p[2] - 1.0), 1e-15);
    EXPECT_LE(std::abs(p[3]), 1e-15);
}

TEST(Cpow, ZeroExponentIsOne) {
    std::mt19937_64 rng(6);
    const auto p = cpow(random_series(rng, N, 1.0, 1.0), 0.0);
    EXPECT_EQ(max_coeff_diff(p, PowerSeries::constant(1.0, N), N), 0.0);
}

TEST(Cpow, ImaginaryExponentMatchesPrincipalBranch) {
    constexpr int order = 80;
    auto onez = PowerSeries::constant(1.0, order) + PowerSeries::monomial(1.0, 1, order);
    const auto p = cpow(onez, complex(0.0, 1.0));
    double err = 0.0;
    for (int j = 0; j < 64; ++j) {
        const complex z = std::polar(0.4, 2.0 * std::numbers::pi * j / 64);
        err = std::max(err, std::abs(p(z) - std::exp(complex(0.0, 1.0) * std::log(1.0 + z))));
    }
    EXPECT_LE(err, 1e-10);
}

TEST(Cpow, ConstantTermIsExactlyOne) {
    std::mt19937_64 rng(7);
    const auto p = cpow(random_series(rng, N, 1.0, {1.0, 1e-14}), {0.3, -2.0});
    EXPECT_EQ(p[0], complex(1.0));
}

TEST(Cpow, ExponentsAdd) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_series(rng, N, 0.8, 1.0);
        const complex a{u(rng), u(rng)};
        const complex b{u(rng), u(rng)};
        EXPECT_LE(max_coeff_diff(mul(cpow(f, a), cpow(f, b)), cpow(f, a + b), N), 1e-10);
    }
}

TEST(Cpow, NonUnitConstantThrows) {
    EXPECT_THROW(cpow(poly({2.0, 1.0}), 0.5), NonUnitConstantTerm);
    EXPECT_THROW(log(poly({0.5, 1.0})), NonUnitConstantTerm);
}

TEST(ExpLog, RoundTrip) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_series(rng, N, 1.0, 1.0);
        EXPECT_LE(max_coeff_diff(exp(log(f)), f, N), 1e-11);
    }
}

TEST(ZOverF, Examples) {
    const auto id = AnMember::make(PowerSeries::monomial(1.0, 1, 8), 1);
    EXPECT_TRUE(id.degenerate());
    EXPECT_EQ(max_coeff_diff(z_over_f(id), PowerSeries::constant(1.0, 7), 7), 0.0);

    // z/(1-z) = z + z^2 + ...
    std::vector<complex> c(9, 1.0);
    c[0] = 0.0;
    const auto half = AnMember::make(poly(c), 1);
    const auto q = z_over_f(half);
    EXPECT_LE(std::abs(q[0] - 1.0), 1e-15);
    EXPECT_LE(std::abs(q[1] + 1.0), 1e-15);
    for (int k = 2; k <= q.order(); ++k) {
        EXPECT_LE(std::abs(q[static_cast<std::size_t>(k)]), 1e-15);
    }
}

TEST(ZOverF, OneTermLeadingCoefficient) {
    const complex a{0.2, -0.1};
    for (int n = 1; n <= 4; ++n) {
        const auto f = AnMember::make(PowerSeries::from_terms(20, {{1, 1.0}, {n + 1, a}}), n);
        const auto q = z_over_f(f);
        EXPECT_LE(std::abs(q[static_cast<std::size_t>(n)] + a), 1e-15);
        for (int k = 1; k < n; ++k) {
            EXPECT_EQ(q[static_cast<std::size_t>(k)], complex(0.0));
        }
        // 1/(1 + a z^n) = 1 - a z^n + a^2 z^{2n} - ...
        EXPECT_LE(std::abs(q[static_cast<std::size_t>(2 * n)] - a * a), 1e-15);
    }
}

TEST(Membership, Checks) {
    EXPECT_THROW(AnMember::make(poly({0.0, 2.0, 0.1}), 1), MembershipError);
    EXPECT_THROW(AnMember::make(poly({0.1, 1.0, 0.1}), 1), MembershipError);
    EXPECT_THROW(AnMember::make(poly({0.0, 1.0, 0.1, 0.1}), 2), MembershipError);
    EXPECT_THROW(AnMember::make(poly({0.0, 1.0}), 1), MembershipError);
    EXPECT_NO_THROW(AnMember::make(poly({0.0, 1.0, 0.0, 0.1}), 2));
    EXPECT_THROW(H1nMember::make(poly({0.9, 0.0}), 1), MembershipError);
    EXPECT_THROW(H1nMember::make(poly({1.0, 0.1, 0.2}), 2), MembershipError);
    EXPECT_NO_THROW(H1nMember::make(poly({1.0, 0.0, 0.2}), 2));
}

TEST(CriterionExpression, IdentityGivesOne) {
    const auto f = AnMember::make(PowerSeries::monomial(1.0, 1, 12), 1);
    const auto e = criterion_expression(f, {0.3, 0.7});
    EXPECT_EQ(e[0], complex(1.0));
    EXPECT_LE(max_coeff_diff(e, PowerSeries::constant(1.0, e.order()), e.order()), 1e-15);
}

TEST(CriterionExpression, LeadingDeviation) {
    // f = z + a z^{n+1}: f' (z/f)^{1+mu} = 1 + (n - mu) a z^n + ...
    for (int n = 1; n <= 3; ++n) {
        for (complex mu : {complex(0.5), complex(0.2, 0.4), complex(-1.0, 0.3)}) {
            const complex a{0.07, 0.03};
            const auto f = AnMember::make(PowerSeries::from_terms(16, {{1, 1.0}, {n + 1, a}}), n);
            const auto e = criterion_expression(f, mu);
            EXPECT_LE(std::abs(e[static_cast<std::size_t>(n)] - (double(n) - mu) * a), 1e-15);
            for (int k = 1; k < n; ++k) {
                EXPECT_LE(std::abs(e[static_cast<std::size_t>(k)]), 1e-15);
            }
        }
    }
    const auto f = AnMember::make(PowerSeries::from_terms(16, {{1, 1.0}, {2, 0.1}}), 1);
    EXPECT_NEAR(criterion_expression(f, 0.5)[1].real(), 0.05, 1e-15);
}

TEST(CriterionExpression, MatchesDirectArithmeticInBranchSafeRegion) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    constexpr int order = 64;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<complex> c(order + 1);
        c[1] = 1.0;
        double r = 0.1;
        for (int k = 2; k <= order; ++k) {
            c[static_cast<std::size_t>(k)] = r * complex{u(rng), u(rng)} / std::sqrt(2.0);
            r *= 0.5;
        }
        const auto f = AnMember::make(poly(c), 1);
        const complex mu{2.0 * u(rng), 2.0 * u(rng)};
        const auto e = criterion_expression(f, mu);
        const auto fs = f.series();
        const auto df = derivative(fs);
        for (int j = 0; j < 16; ++j) {
            const complex z = std::polar(0.5, 2.0 * std::numbers::pi * j / 16);
            const complex fz = naive_eval(fs, z);
            ASSERT_GT((fz / z).real(), 0.0);
            const complex direct = df(z) * std::pow(z / fz, 1.0 + mu);
            EXPECT_LE(std::abs(e(z) - direct), 1e-9);
        }
    }
}

TEST(StarlikeQuotient, HalfPlane) {
    std::vector<complex> c(33, 1.0);
    c[0] = 0.0;
    const auto q = starlike_quotient(AnMember::make(poly(c), 1));
    // z f'/f = 1/(1 - z)
    for (int k = 0; k <= q.order(); ++k) {
        EXPECT_LE(std::abs(q[static_cast<std::size_t>(k)] - 1.0), 1e-12);
    }
}
