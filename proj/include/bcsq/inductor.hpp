#pragma once

#include <cmath>
#include <vector>

#include "bessel.hpp"
#include "common.hpp"
#include "constants.hpp"
#include "quadrature.hpp"

namespace bcsq {

inline double london_depth(double electron_density)
{
    using namespace constants;
    require(electron_density > 0, "london_depth: electron density must be positive");
    return std::sqrt(m_e / (mu0 * electron_density * e * e));
}

struct WireGeometry {
    double radius = 0.0;            // r_w, m
    double length = 0.0;            // l, m
    double electron_density = 0.0;  // D, m^-3
    double cutoff_radius = 0.0;     // R, m

    double penetration_depth() const { return london_depth(electron_density); }
    double ratio() const { return radius / penetration_depth(); }

    void validate() const
    {
        require(radius > 0 && length > 0, "wire: radius and length must be positive");
        require(electron_density > 0, "wire: electron density must be positive");
        require(cutoff_radius > radius, "wire: cutoff radius must exceed the wire radius");
    }

    // Wire with r_w = ratio * lambda_L for a given density; default cutoff R = 10 r_w.
    static WireGeometry from_ratio(double ratio, double length, double electron_density, double cutoff_ratio = 10.0)
    {
        WireGeometry g;
        g.electron_density = electron_density;
        g.radius = ratio * london_depth(electron_density);
        g.length = length;
        g.cutoff_radius = cutoff_ratio * g.radius;
        g.validate();
        return g;
    }
};

namespace detail {

// I_nu(x)/I_1(a) ratios through scaled Bessel functions so thick wires do not overflow.
inline double i1_ratio(double x, double a) { return special::bessel_i1e(x) / special::bessel_i1e(a) * std::exp(x - a); }
inline double i0_over_i1a(double x, double a) { return special::bessel_i0e(x) / special::bessel_i1e(a) * std::exp(x - a); }

} // namespace detail

struct WireFields {
    double H_theta = 0.0;   // A/m
    double J_z = 0.0;       // A/m^2
    double A_int_z = 0.0;   // T m
};

inline WireFields wire_fields(double r, const WireGeometry& g, double current)
{
    g.validate();
    require(r >= 0 && r <= g.radius, "wire_fields: r must lie inside the wire");
    const double lam = g.penetration_depth();
    const double a = g.radius / lam;
    const double h0 = current / (2.0 * pi * g.radius);
    const double x = r / lam;
    WireFields f;
    f.H_theta = h0 * detail::i1_ratio(x, a);
    f.J_z = h0 / lam * detail::i0_over_i1a(x, a);
    // (1 - I0(x))/I1(a); above the Bessel crossover I0(x) e^{-a} is formed from scaled values
    const double inv_i1a = std::exp(-a) / special::bessel_i1e(a);
    const double ratio = x < 30.0 ? -special::bessel_i0_minus_one(x) * inv_i1a : inv_i1a - detail::i0_over_i1a(x, a);
    f.A_int_z = current * constants::mu0 * lam / (2.0 * pi * g.radius) * ratio;
    return f;
}

struct InductanceBreakdown {
    double kinetic_density = 0.0;       // Lbar_K = m/(D e^2 sigma_eff), sigma_eff = 2 pi r_w lambda_L
    double geometric_density = 0.0;     // Lbar_G = mu0/(8 pi)
    double kinetic = 0.0;               // L_K = Lbar_K l
    double geometric = 0.0;             // L_G = mu0 l ln(R/r_w)/(2 pi)
    double total = 0.0;                 // L_K + L_G
    double kinetic_density_cross = 0.0; // m/(D e^2 pi r_w^2)
    double internal_density_exact = 0.0;  // mu0 lambda (2 lambda - r_w/I1(a))/(2 pi r_w^2)
    double constitutive_exact = 0.0;    // exact solve of the Bessel constitutive law
    double constitutive_asymptotic = 0.0;  // kinetic_density_cross + mu0/(8 pi)
    bool asymptotic_unreliable = false; // r_w/lambda_L < 10
};

inline InductanceBreakdown inductances(const WireGeometry& g)
{
    using namespace constants;
    g.validate();
    const double lam = g.penetration_depth();
    const double a = g.radius / lam;
    const double m_over_de2 = m_e / (g.electron_density * e * e);
    InductanceBreakdown r;
    r.kinetic_density = m_over_de2 / (2.0 * pi * g.radius * lam);
    r.geometric_density = mu0 / (8.0 * pi);
    r.kinetic = r.kinetic_density * g.length;
    r.geometric = mu0 * g.length * std::log(g.cutoff_radius / g.radius) / (2.0 * pi);
    r.total = r.kinetic + r.geometric;
    r.kinetic_density_cross = m_over_de2 / (pi * g.radius * g.radius);
    const double rw_over_i1 = g.radius * std::exp(-a) / special::bessel_i1e(a);
    r.internal_density_exact = mu0 * lam * (2.0 * lam - rw_over_i1) / (2.0 * pi * g.radius * g.radius);
    r.constitutive_exact = r.kinetic_density_cross + r.internal_density_exact;
    r.constitutive_asymptotic = r.kinetic_density_cross + r.geometric_density;
    r.asymptotic_unreliable = a < 10.0;
    return r;
}

struct FluxEnergyAudit {
    double flux_int = 0.0;          // Wb
    double flux_ext = 0.0;          // Wb
    double energy_ext = 0.0;        // J
    double energy_kinetic = 0.0;    // J
    double energy_field_int = 0.0;  // J
    double inductance_flux = 0.0;   // (flux_int + flux_ext)/i
    double inductance_energy = 0.0; // 2 (E_ext + E_kin + E_int)/i^2
};

// All five quantities by radial quadrature of the Bessel profiles. The internal flux follows the
// paper's surface, which starts one penetration depth in from the axis.
inline FluxEnergyAudit flux_energy_audit(const WireGeometry& g, double current, double rel_tol = 1e-11)
{
    using namespace constants;
    g.validate();
    require(current != 0, "flux_energy_audit: current must be non-zero");
    const double lam = g.penetration_depth();
    const double a = g.radius / lam;
    const double h0 = current / (2.0 * pi * g.radius);
    const double l = g.length;
    FluxEnergyAudit r;
    // internal B = mu0 H, flux through the strip [lambda, r_w] x l, integrated in x = r/lambda
    auto b_int = [&](double x) { return mu0 * h0 * detail::i1_ratio(x, a); };
    r.flux_int = l * lam * quad::smooth(b_int, std::min(1.0, a), a, rel_tol).value;
    // external integrals in u = r/r_w so the quadrature sees an O(1) interval
    const double u_max = g.cutoff_radius / g.radius;
    auto b_ext = [&](double u) { return mu0 * current / (2.0 * pi * u * g.radius); };
    r.flux_ext = l * g.radius * quad::smooth(b_ext, 1.0, u_max, rel_tol).value;
    auto e_ext = [&](double u) {
        const double b = b_ext(u);
        return b * b / (2.0 * mu0) * 2.0 * pi * u * g.radius * g.radius;
    };
    r.energy_ext = l * quad::smooth(e_ext, 1.0, u_max, rel_tol).value;
    const double m_over_de2 = m_e / (g.electron_density * e * e);
    auto e_kin = [&](double x) {
        const double j = h0 / lam * detail::i0_over_i1a(x, a);
        return 0.5 * m_over_de2 * j * j * 2.0 * pi * x * lam * lam;
    };
    r.energy_kinetic = l * quad::smooth(e_kin, 0.0, a, rel_tol).value;
    auto e_int = [&](double x) {
        const double b = b_int(x);
        return b * b / (2.0 * mu0) * 2.0 * pi * x * lam * lam;
    };
    r.energy_field_int = l * quad::smooth(e_int, 0.0, a, rel_tol).value;
    r.inductance_flux = (r.flux_int + r.flux_ext) / current;
    r.inductance_energy = 2.0 * (r.energy_ext + r.energy_kinetic + r.energy_field_int) / (current * current);
    return r;
}

struct ChainResult {
    std::vector<double> phases;     // phi_0 = phi_a, ..., phi_M = phi_b
    std::vector<double> gradients;  // phi_{m+1} - phi_m
    double energy = 0.0;
};

// Minimises (E_L M/2) sum_m (phi_{m+1} - phi_m)^2 over the interior phases with the ends fixed.
inline ChainResult lumped_chain(int segments, double phi_a, double phi_b, double e_l)
{
    require(segments >= 1, "lumped_chain: need at least one segment");
    const int interior = segments - 1;
    ChainResult r;
    r.phases.assign(static_cast<std::size_t>(segments + 1), 0.0);
    r.phases.front() = phi_a;
    r.phases.back() = phi_b;
    if (interior > 0) {
        // stationarity: 2 phi_m - phi_{m-1} - phi_{m+1} = 0
        Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(interior, interior);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(interior);
        for (int i = 0; i < interior; ++i) {
            lap(i, i) = 2.0;
            if (i > 0)
                lap(i, i - 1) = -1.0;
            if (i + 1 < interior)
                lap(i, i + 1) = -1.0;
        }
        rhs(0) += phi_a;
        rhs(interior - 1) += phi_b;
        const Eigen::VectorXd x = lap.ldlt().solve(rhs);
        for (int i = 0; i < interior; ++i)
            r.phases[i + 1] = x(i);
    }
    for (int m = 0; m < segments; ++m) {
        const double g = r.phases[m + 1] - r.phases[m];
        r.gradients.push_back(g);
        r.energy += 0.5 * e_l * segments * g * g;
    }
    return r;
}

// M_max = floor(i_c L/(pi Phi0)), the largest phase window the critical current allows.
inline int m_max(double critical_current, double inductance)
{
    require(critical_current > 0 && inductance > 0, "m_max: current and inductance must be positive");
    return static_cast<int>(std::floor(critical_current * inductance / (pi * constants::phi0)));
}

inline double supercurrent(double phi_a, double phi_b, double inductance)
{
    require(inductance > 0, "supercurrent: inductance must be positive");
    return constants::phi0 / (2.0 * pi) * (phi_b - phi_a) / inductance;
}

} // namespace bcsq
