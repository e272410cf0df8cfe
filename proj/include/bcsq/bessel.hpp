#pragma once

#include <cmath>

namespace bcsq::special {

namespace detail {

// Power series; every term is positive so there is no cancellation at any x.
inline double bessel_i_series(int nu, double x)
{
    const double q = 0.25 * x * x;
    double term = std::pow(0.5 * x, nu);
    for (int k = 2; k <= nu; ++k)
        term /= k;
    double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= q / (double(k) * double(k + nu));
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum;
}

// e^{-x} I_nu(x) from the Hankel expansion, stopped at the smallest term.
// Truncation error is ~e^{-2x}, so it is only used well past the crossover.
inline double bessel_i_asymptotic_scaled(int nu, double x)
{
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double last = 1.0;
    for (int k = 1; k < 80; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (k * 8.0 * x);
        if (std::abs(term) > last)
            break;
        sum += term;
        last = std::abs(term);
        if (last < 1e-17 * std::abs(sum))
            break;
    }
    return sum / std::sqrt(2.0 * 3.14159265358979323846 * x);
}

inline constexpr double crossover = 30.0;

inline double bessel_i_scaled(int nu, double x)
{
    if (x < crossover)
        return std::exp(-x) * bessel_i_series(nu, x);
    return bessel_i_asymptotic_scaled(nu, x);
}

} // namespace detail

inline double bessel_i0(double x)
{
    x = std::abs(x);
    return x < detail::crossover ? detail::bessel_i_series(0, x)
                                 : std::exp(x) * detail::bessel_i_asymptotic_scaled(0, x);
}

inline double bessel_i1(double x)
{
    const double s = x < 0 ? -1.0 : 1.0;
    x = std::abs(x);
    return s * (x < detail::crossover ? detail::bessel_i_series(1, x)
                                      : std::exp(x) * detail::bessel_i_asymptotic_scaled(1, x));
}

// I0(x) - 1 without cancellation at small x.
inline double bessel_i0_minus_one(double x)
{
    x = std::abs(x);
    if (x >= 1.0)
        return bessel_i0(x) - 1.0;
    const double q = 0.25 * x * x;
    double term = q;
    double sum = q;
    for (int k = 2; k < 40 && term > 1e-18 * sum; ++k) {
        term *= q / (double(k) * k);
        sum += term;
    }
    return sum;
}

// Exponentially scaled e^{-|x|} I_nu(|x|), safe for large arguments.
inline double bessel_i0e(double x) { return detail::bessel_i_scaled(0, std::abs(x)); }
inline double bessel_i1e(double x) { return detail::bessel_i_scaled(1, std::abs(x)); }

} // namespace bcsq::special
