#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "common.hpp"

namespace bcsq::quad {

namespace detail {

inline std::string not_converged(double value, double error)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "quadrature did not converge: estimate %.6g, error %.3g", value, error);
    return buf;
}

} // namespace detail

struct Result {
    double value = 0.0;
    double error = 0.0;
};

// Adaptive Gauss-Kronrod on a smooth integrand over a finite interval.
template <class F>
Result smooth(F&& f, double a, double b, double rel_tol = 1e-10, unsigned max_depth = 20)
{
    Result r;
    double l1 = 0.0;
    r.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, a, b, max_depth, rel_tol, &r.error, &l1);
    if (!std::isfinite(r.value) || r.error > 100.0 * rel_tol * std::max(l1, 1e-300))
        throw NumericalError(detail::not_converged(r.value, r.error));
    return r;
}

// Double-exponential rule; tolerates integrable endpoint singularities.
template <class F>
Result endpoint_singular(F&& f, double a, double b, double rel_tol = 1e-10)
{
    // integrate() is not const in Boost 1.74; one rule per thread keeps it thread-safe
    thread_local boost::math::quadrature::tanh_sinh<double> rule;
    Result r;
    double l1 = 0.0;
    r.value = rule.integrate(f, a, b, rel_tol, &r.error, &l1);
    if (!std::isfinite(r.value) || r.error > 1e3 * rel_tol * std::max(l1, 1e-300))
        throw NumericalError(detail::not_converged(r.value, r.error));
    return r;
}

} // namespace bcsq::quad
