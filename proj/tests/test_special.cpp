#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <bcsq/bessel.hpp>
#include <bcsq/quadrature.hpp>

using namespace bcsq;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Bessel, ValuesAtZero)
{
    EXPECT_EQ(special::bessel_i0(0.0), 1.0);
    EXPECT_EQ(special::bessel_i1(0.0), 0.0);
    EXPECT_EQ(special::bessel_i0_minus_one(0.0), 0.0);
}

TEST(Bessel, AgreesWithBoostAcrossCrossover)
{
    // Boost is the oracle only here; the library carries its own series/asymptotic pair
    for (double x = 0.01; x < 200.0; x *= 1.13) {
        EXPECT_LT(rel(special::bessel_i0(x), boost::math::cyl_bessel_i(0, x)), 1e-12) << x;
        EXPECT_LT(rel(special::bessel_i1(x), boost::math::cyl_bessel_i(1, x)), 1e-12) << x;
    }
    for (double x : {29.999, 30.0, 30.001}) {
        EXPECT_LT(rel(special::bessel_i0(x), boost::math::cyl_bessel_i(0, x)), 1e-12);
        EXPECT_LT(rel(special::bessel_i1(x), boost::math::cyl_bessel_i(1, x)), 1e-12);
    }
}

TEST(Bessel, ScaledVariantsSurviveLargeArguments)
{
    for (double x : {50.0, 700.0, 5000.0, 1e6}) {
        const double i0e = special::bessel_i0e(x);
        const double i1e = special::bessel_i1e(x);
        EXPECT_TRUE(std::isfinite(i0e));
        EXPECT_NEAR(i0e * std::sqrt(2.0 * pi * x), 1.0 + 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x), 1.0 / (x * x * x));
        EXPECT_LT(i1e, i0e);
    }
    EXPECT_LT(rel(special::bessel_i0e(20.0), std::exp(-20.0) * boost::math::cyl_bessel_i(0, 20.0)), 1e-12);
}

TEST(Bessel, I0MinusOneHasNoCancellation)
{
    for (double x : {1e-8, 1e-5, 1e-3, 0.1}) {
        // sum_{k>=1} (x^2/4)^k/(k!)^2, summed until the terms vanish
        double expect = 0.0, term = 1.0;
        for (int k = 1; k < 12; ++k) {
            term *= x * x / (4.0 * k * k);
            expect += term;
        }
        EXPECT_LT(rel(special::bessel_i0_minus_one(x), expect), 1e-12) << x;
    }
}

TEST(Bessel, DerivativeRecurrence)
{
    // I1'(x) = I0(x) - I1(x)/x, central differences
    for (double x = 0.1; x <= 30.0; x += 0.37) {
        const double h = 1e-4;
        const double fd = (special::bessel_i1(x + h) - special::bessel_i1(x - h)) / (2.0 * h);
        const double exact = special::bessel_i0(x) - special::bessel_i1(x) / x;
        EXPECT_LT(rel(fd, exact), 1e-8) << x;
    }
}

TEST(Quadrature, SmoothAndSingular)
{
    const auto s = quad::smooth([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    EXPECT_NEAR(s.value, std::sqrt(pi), 1e-13);
    const auto e = quad::endpoint_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    EXPECT_NEAR(e.value, 2.0, 1e-12);
}

TEST(Quadrature, ReportsNonConvergence)
{
    // oscillation far below the Gauss-Kronrod resolution at the allowed depth
    auto wild = [](double x) { return std::sin(1e9 * x) + 1.0; };
    EXPECT_THROW(quad::smooth(wild, 0.0, 1.0, 1e-12, 3), NumericalError);
}
