#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "common.hpp"
#include "core_model.hpp"
#include "quadrature.hpp"

namespace bcsq {

// Which band is held fixed when the gap varies.
//  kinetic: n modes with kinetic energy in [-B, B] (the band_grid model); E runs to sqrt(B^2 + Delta^2).
//  energy:  Bogoliubov energies in [Delta, B] with the normalised density `dos` (b = B/Delta).
enum class BandConvention { kinetic, energy };

namespace detail {

// Both conventions become eps = Delta sinh t, measure weight * cosh t dt, t in [-T, T].
struct BandMeasure {
    double weight = 0.0;
    double T = 0.0;
};

inline BandMeasure band_measure(long n, double b, BandConvention conv)
{
    if (conv == BandConvention::kinetic)
        return {double(n) / (2.0 * b), std::asinh(b)};
    return {double(n) / (2.0 * std::sqrt(b * b - 1.0)), std::acosh(b)};
}

// sum over modes of f(t) with the band measure, f even or not; split at t = 0 for the |t| kink
template <class F>
double band_sum(const BandMeasure& m, F&& f, double rel_tol)
{
    auto g = [&](double t) { return f(t) * std::cosh(t); };
    return m.weight * (quad::smooth(g, -m.T, 0.0, rel_tol).value + quad::smooth(g, 0.0, m.T, rel_tol).value);
}

} // namespace detail

struct KV {
    cplx K;
    cplx V;
};

// K(phi) = W e^{i phi} sum 2 eps v^2/(u^2 + v^2 e^{i phi}),  V(phi) = W e^{i phi} (sum uv/(u^2 + v^2 e^{i phi}))^2,
// each band sum done by quadrature; W itself is the quadrature of sum log(u^2 + v^2 e^{i phi}).
inline KV kv_matrix_elements(double phi, const MaterialParams& p, BandConvention conv = BandConvention::kinetic,
                             double rel_tol = 1e-10)
{
    const double b = p.b();
    const double gap = p.gap;
    const auto m = detail::band_measure(p.n, b, conv);
    const cplx eiphi = std::polar(1.0, phi);
    const double s2 = std::sin(0.5 * phi) * std::sin(0.5 * phi);

    auto coeffs = [](double t, double& u2, double& v2) {
        const double c = 2.0 * std::cosh(t);
        u2 = std::exp(t) / c;
        v2 = std::exp(-t) / c;
    };
    auto log_re = [&](double t) {
        double u2, v2;
        coeffs(t, u2, v2);
        return 0.5 * std::log1p(-4.0 * u2 * v2 * s2);
    };
    auto log_im = [&](double t) {
        double u2, v2;
        coeffs(t, u2, v2);
        return std::atan2(v2 * std::sin(phi), u2 + v2 * std::cos(phi));
    };
    auto kin = [&](double t, bool imag) {
        double u2, v2;
        coeffs(t, u2, v2);
        const cplx val = 2.0 * gap * std::sinh(t) * v2 / (u2 + v2 * eiphi);
        return imag ? val.imag() : val.real();
    };
    auto pair = [&](double t, bool imag) {
        double u2, v2;
        coeffs(t, u2, v2);
        const cplx val = (0.5 / std::cosh(t)) / (u2 + v2 * eiphi);
        return imag ? val.imag() : val.real();
    };

    const double lre = detail::band_sum(m, log_re, rel_tol);
    const double lim = phi == 0.0 ? 0.0 : detail::band_sum(m, log_im, rel_tol);
    const cplx w = std::polar(std::exp(lre), lim);
    const cplx ksum(detail::band_sum(m, [&](double t) { return kin(t, false); }, rel_tol),
                    phi == 0.0 ? 0.0 : detail::band_sum(m, [&](double t) { return kin(t, true); }, rel_tol));
    const cplx psum(detail::band_sum(m, [&](double t) { return pair(t, false); }, rel_tol),
                    phi == 0.0 ? 0.0 : detail::band_sum(m, [&](double t) { return pair(t, true); }, rel_tol));
    return {w * eiphi * ksum, w * eiphi * psum * psum};
}

inline double k0_closed_form(long n, double gap, double b) { return n * gap * (std::log(2.0 * b) - b * b) / (2.0 * b); }
inline double v0_closed_form(long n, double b)
{
    const double x = double(n) * std::log(2.0 * b) / (2.0 * b);
    return x * x;
}

inline double coupling_g_sq(long n, double bandwidth, double coupling) { return 2.0 * bandwidth * coupling / double(n); }

struct IslandEnergy {
    double energy_exact = 0.0;           // K(0) - |g|^2 V(0) + E_F
    double energy_approx = 0.0;          // (n D^2/2B)(l - 1/2 - lambda l^2), l = ln(2B/D)
    double energy_approx_literal = 0.0;  // printed form, (n D^2/2B)(l - lambda l^2)
    double fermi_energy = 0.0;           // B n/2, separated out of every energy above
    double delta_min = 0.0;              // 2B e^{-1/lambda}
    double e_min = 0.0;                  // -n B e^{-2/lambda}
};

// Diagonal island energy with the Fermi energy separated. The phi = 0 band sums have the
// cancellation-free integrands |eps| - eps^2/E (kinetic) and uv (pairing).
inline IslandEnergy island_energy(double gap, long n, double bandwidth, double coupling,
                                  BandConvention conv = BandConvention::kinetic, double rel_tol = 1e-12)
{
    require(gap > 0 && gap < bandwidth, "island_energy: need 0 < gap < bandwidth");
    require(coupling > 0 && coupling < 1, "island_energy: coupling must lie in (0,1)");
    require(n >= 2, "island_energy: n must be >= 2");
    const double b = bandwidth / gap;
    const auto m = detail::band_measure(n, b, conv);
    // (|eps| - eps^2/E) cosh t = Delta |sinh t| e^{-|t|}; band_sum multiplies by cosh t itself
    const double kin = detail::band_sum(
        m, [&](double t) { return gap * std::abs(std::sinh(t)) * std::exp(-std::abs(t)) / std::cosh(t); }, rel_tol);
    const double pair = detail::band_sum(m, [&](double t) { return 0.5 / std::cosh(t); }, rel_tol);
    // sum of |eps| over the band in closed form: weight * Delta * sinh^2 T (= B n/2 for the kinetic band)
    const double abs_eps = m.weight * gap * std::sinh(m.T) * std::sinh(m.T);
    IslandEnergy r;
    r.fermi_energy = 0.5 * bandwidth * double(n);
    // kinetic band: sum |eps| is exactly B n/2, so the correction vanishes identically
    const double band_offset = conv == BandConvention::kinetic ? 0.0 : r.fermi_energy - abs_eps;
    r.energy_exact = kin + band_offset - coupling_g_sq(n, bandwidth, coupling) * pair * pair;
    const double l = std::log(2.0 * bandwidth / gap);
    const double pref = double(n) * gap * gap / (2.0 * bandwidth);
    r.energy_approx = pref * (l - 0.5 - coupling * l * l);
    r.energy_approx_literal = pref * (l - coupling * l * l);
    r.delta_min = gap_from_coupling(bandwidth, coupling);
    r.e_min = -double(n) * bandwidth * std::exp(-2.0 / coupling);
    return r;
}

struct GapMinimum {
    double delta_min = 0.0;
    double e_min = 0.0;
    double delta_min_closed = 0.0;
    double e_min_closed = 0.0;
};

// Coarse log-spaced scan to bracket the minimum, then 60 golden-section steps on log(Delta).
inline GapMinimum gap_minimum(long n, double bandwidth, double coupling, BandConvention conv = BandConvention::kinetic)
{
    require(coupling > 0 && coupling <= 0.5, "gap_minimum: coupling must lie in (0, 0.5]");
    auto energy = [&](double log_gap) { return island_energy(std::exp(log_gap), n, bandwidth, coupling, conv).energy_exact; };
    const double lo = std::log(std::max(gap_from_coupling(bandwidth, coupling) * 1e-3, bandwidth * 1e-12));
    const double hi = std::log(bandwidth * 0.99);
    const int samples = 240;
    std::vector<double> xs(samples), ys(samples);
    for (int i = 0; i < samples; ++i) {
        xs[i] = lo + (hi - lo) * i / (samples - 1);
        ys[i] = energy(xs[i]);
    }
    int best = 0;
    for (int i = 0; i < samples; ++i)
        if (ys[i] < ys[best])
            best = i;
    // local minima that stand out from rounding noise; the energy spans many decades, so the
    // noise floor is taken from the neighbours rather than from the whole scan
    int local_minima = 0;
    for (int i = 1; i + 1 < samples; ++i) {
        const double noise = 1e-9 * std::max({std::abs(ys[i - 1]), std::abs(ys[i]), std::abs(ys[i + 1])});
        if (ys[i] < ys[i - 1] - noise && ys[i] < ys[i + 1] - noise)
            ++local_minima;
    }
    if (best == 0 || best == samples - 1 || local_minima != 1)
        throw NumericalError("gap_minimum: energy landscape not unimodal on the sampled range");
    double a = xs[best - 1];
    double c = xs[best + 1];
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = c - g * (c - a);
    double x2 = a + g * (c - a);
    double f1 = energy(x1);
    double f2 = energy(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            c = x2;
            x2 = x1;
            f2 = f1;
            x1 = c - g * (c - a);
            f1 = energy(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (c - a);
            f2 = energy(x2);
        }
    }
    GapMinimum r;
    const double x = 0.5 * (a + c);
    r.delta_min = std::exp(x);
    r.e_min = energy(x);
    r.delta_min_closed = gap_from_coupling(bandwidth, coupling);
    r.e_min_closed = -double(n) * bandwidth * std::exp(-2.0 / coupling);
    return r;
}

} // namespace bcsq
