#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "common.hpp"
#include "constants.hpp"
#include "junction.hpp"

namespace bcsq {

struct WkbParams {
    double barrier_height = 2.0;        // U0, eV
    double barrier_width = 1e-9;        // l_b, m
    double well_width = 30e-9;          // l_w, m
    double effective_mass_ratio = 0.4;  // m*/m_e
    double fermi_velocity = 2e6;        // v_F, m/s
    double fudge = 1.0;                 // xi

    void validate() const
    {
        require(barrier_height > 0 && barrier_width > 0 && well_width > 0, "wkb: barrier and well must be positive");
        require(effective_mass_ratio > 0 && fermi_velocity > 0, "wkb: mass ratio and Fermi velocity must be positive");
        require(fudge > 0, "wkb: fudge factor must be positive");
    }

    // l_b sqrt(2 m* U0)/hbar, the dimensionless barrier action per unit fudge
    double barrier_action() const
    {
        using namespace constants;
        return barrier_width * std::sqrt(2.0 * effective_mass_ratio * m_e * barrier_height * eV) / hbar;
    }
};

struct TunnelElement {
    double attempt_freq = 0.0;  // Hz
    double amplitude = 0.0;     // T_WKB
    double t = 0.0;             // eV
};

// f = v_F/(2 l_w), T = exp(-2 xi l_b sqrt(2 m* U0)/hbar), t = h f T.
inline TunnelElement tunnel_element(const WkbParams& p)
{
    p.validate();
    TunnelElement r;
    r.attempt_freq = p.fermi_velocity / (2.0 * p.well_width);
    r.amplitude = std::exp(-2.0 * p.fudge * p.barrier_action());
    r.t = constants::h_eVs * r.attempt_freq * r.amplitude;
    return r;
}

struct EjPoint {
    double xi = 0.0;
    double t = 0.0;    // eV
    double e_j = 0.0;  // eV
};

inline std::vector<EjPoint> ej_vs_xi(const WkbParams& p, const JunctionParams& junction, double xi_min, double xi_max,
                                     int steps)
{
    require(steps >= 2, "ej_vs_xi: steps must be >= 2");
    require(xi_min > 0 && xi_max > xi_min, "ej_vs_xi: need 0 < xi_min < xi_max");
    std::vector<EjPoint> table;
    for (int i = 0; i < steps; ++i) {
        WkbParams q = p;
        q.fudge = xi_min + (xi_max - xi_min) * i / (steps - 1);
        JunctionParams j = junction;
        j.tunnel_element = tunnel_element(q).t;
        table.push_back({q.fudge, j.tunnel_element, josephson_energy(j)});
    }
    return table;
}

// xi where E_J crosses `target`, by log-linear interpolation between table rows.
inline std::optional<double> ej_crossing(const std::vector<EjPoint>& table, double target)
{
    for (std::size_t i = 1; i < table.size(); ++i) {
        const double a = std::log(table[i - 1].e_j) - std::log(target);
        const double b = std::log(table[i].e_j) - std::log(target);
        if (a == 0)
            return table[i - 1].xi;
        if ((a > 0) != (b > 0))
            return table[i - 1].xi + (table[i].xi - table[i - 1].xi) * a / (a - b);
    }
    return std::nullopt;
}

// t' = t exp(i Phi_b l_b/(2 l_w Phi0)); the phase is invisible in |t|.
inline cplx field_phase_shift(cplx t, double flux_bias, double l_b, double l_w)
{
    require(l_w > 0, "field_phase_shift: well width must be positive");
    return t * std::polar(1.0, flux_bias * l_b / (2.0 * l_w * constants::phi0));
}

// Aluminium junction numbers as listed in the device-estimate section; loaded by the CLI from
// examples/aluminium.toml, mirrored here for tests.
struct AluminiumPreset {
    double gap = 340e-6;            // eV
    double bandwidth = 10.6;        // eV
    double well_width = 30e-9;      // m
    double barrier_width = 1e-9;    // m
    double junction_area = 0.02e-12;  // m^2
    double fermi_velocity = 2e6;    // m/s
    double barrier_height = 2.0;    // eV
    double effective_mass_ratio = 0.4;
    double lattice_constant = 0.4e-9;  // l_c, m
    double measured_e_j = 270e-6;   // eV

    double electrons_per_island() const
    {
        return 4.0 * well_width * junction_area / (lattice_constant * lattice_constant * lattice_constant);
    }

    WkbParams wkb(double xi) const
    {
        WkbParams p;
        p.barrier_height = barrier_height;
        p.barrier_width = barrier_width;
        p.well_width = well_width;
        p.effective_mass_ratio = effective_mass_ratio;
        p.fermi_velocity = fermi_velocity;
        p.fudge = xi;
        return p;
    }

    JunctionParams junction() const
    {
        JunctionParams j;
        j.electrons_a = j.electrons_b = electrons_per_island();
        j.gap = gap;
        j.bandwidth = bandwidth;
        return j;
    }
};

} // namespace bcsq
