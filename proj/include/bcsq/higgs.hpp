#pragma once

#include <cmath>
#include <vector>

#include "common.hpp"
#include "core_model.hpp"

namespace bcsq {

// E/|E_min| = d^2 (-1 + 2 ln d - 2 lambda ln^2 d), d = Delta/Delta_min
inline double higgs_landscape(double d, double lambda)
{
    require(d > 0, "higgs_landscape: d must be positive");
    const double l = std::log(d);
    return d * d * (-1.0 + 2.0 * l - 2.0 * lambda * l * l);
}

inline double higgs_quadratic(double d, double lambda) { return -1.0 + 2.0 * (1.0 - lambda) * (d - 1.0) * (d - 1.0); }

inline std::vector<double> landscape(const std::vector<double>& d_values, double lambda)
{
    std::vector<double> out;
    out.reserve(d_values.size());
    for (double d : d_values)
        out.push_back(higgs_landscape(d, lambda));
    return out;
}

// Gaussian estimate exp(-3 n pi (D' - D)^2/(64 sqrt2 b D^2)), b = B/D_r.
inline double radial_overlap(double delta_r, double delta_rp, const MaterialParams& p)
{
    require(delta_r > 0 && delta_rp > 0, "radial_overlap: gaps must be positive");
    const double b = p.bandwidth / delta_r;
    const double x = delta_rp - delta_r;
    return std::exp(-3.0 * double(p.n) * pi * x * x / (64.0 * std::sqrt(2.0) * b * delta_r * delta_r));
}

// prod_k (u_k u'_k + v_k v'_k) over the band grid with coefficients at the two gaps.
inline double radial_overlap_exact(double delta_r, double delta_rp, const MaterialParams& p)
{
    require(delta_r > 0 && delta_rp > 0, "radial_overlap_exact: gaps must be positive");
    double log_sum = 0.0;
    for (double eps : band_grid(p)) {
        const auto a = bogoliubov(eps, p.chemical_potential, delta_r);
        const auto c = bogoliubov(eps, p.chemical_potential, delta_rp);
        log_sum += std::log(std::sqrt(a.u_sq * c.u_sq) + std::sqrt(a.v_sq * c.v_sq));
    }
    return std::exp(log_sum);
}

struct HiggsLandscape {
    double curvature = 0.0;       // 2(1 - lambda), coefficient of (d - 1)^2
    double effective_mass = 0.0;  // (hbar^2/4)/(rho_F^2 |E_min|)
    double frequency = 0.0;       // 2 Delta_min/hbar
    double bound_states = 0.0;    // |E_min|/(hbar omega)
    double delta_min = 0.0;
    double e_min = 0.0;
};

// Closed-form minimum (Delta_min = 2B e^{-1/lambda}, E_min = -n B e^{-2/lambda}); hbar in the caller's units.
inline HiggsLandscape oscillator(long n, double bandwidth, double coupling, double hbar = 1.0)
{
    require(n >= 2 && bandwidth > 0, "oscillator: need n >= 2 and positive bandwidth");
    require(coupling > 0 && coupling < 1, "oscillator: coupling must lie in (0,1)");
    require(hbar > 0, "oscillator: hbar must be positive");
    HiggsLandscape h;
    h.delta_min = gap_from_coupling(bandwidth, coupling);
    h.e_min = -double(n) * bandwidth * std::exp(-2.0 / coupling);
    h.curvature = 2.0 * (1.0 - coupling);
    const double rho_f = double(n) / (2.0 * bandwidth);
    h.effective_mass = hbar * hbar / 4.0 / (rho_f * rho_f * std::abs(h.e_min));
    h.frequency = 2.0 * h.delta_min / hbar;
    h.bound_states = std::abs(h.e_min) / (hbar * h.frequency);
    return h;
}

} // namespace bcsq
