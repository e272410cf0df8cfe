#pragma once

#include <cmath>
#include <vector>

#include "common.hpp"

namespace bcsq {

// Microscopic island parameters. Energies are in whatever unit the caller uses.
struct MaterialParams {
    long n = 0;                    // single-particle modes (electron count at half filling is n/2)
    double bandwidth = 0.0;        // half-bandwidth B
    double gap = 0.0;              // Delta
    double coupling = 0.0;         // lambda, 0 when unknown
    double chemical_potential = 0.0;

    double b() const { return bandwidth / gap; }

    static MaterialParams from_gap(long n, double bandwidth, double gap, double coupling = 0.0)
    {
        require(n >= 2, "MaterialParams: n must be >= 2");
        require(bandwidth > 0 && gap > 0, "MaterialParams: bandwidth and gap must be positive");
        require(bandwidth > gap, "MaterialParams: b = bandwidth/gap must exceed 1");
        require(coupling >= 0 && coupling < 1, "MaterialParams: coupling must lie in [0,1)");
        MaterialParams p;
        p.n = n;
        p.bandwidth = bandwidth;
        p.gap = gap;
        p.coupling = coupling;
        return p;
    }

    static MaterialParams from_b(long n, double b, double gap = 1.0)
    {
        return from_gap(n, b * gap, gap);
    }

    static MaterialParams from_coupling(long n, double bandwidth, double coupling);
};

inline double gap_from_coupling(double bandwidth, double coupling)
{
    require(bandwidth > 0, "gap_from_coupling: bandwidth must be positive");
    require(coupling > 0 && coupling < 1, "gap_from_coupling: coupling must lie in (0,1)");
    return 2.0 * bandwidth * std::exp(-1.0 / coupling);
}

inline MaterialParams MaterialParams::from_coupling(long n, double bandwidth, double coupling)
{
    return from_gap(n, bandwidth, gap_from_coupling(bandwidth, coupling), coupling);
}

struct BogoliubovPoint {
    double u_sq = 0.0;
    double v_sq = 0.0;
    double quasiparticle_energy = 0.0;
};

inline BogoliubovPoint bogoliubov(double kinetic_energy, double mu, double gap)
{
    require(gap > 0, "bogoliubov: gap must be positive");
    const double xi = kinetic_energy - mu;
    const double E = std::hypot(xi, gap);
    // The small coefficient is Delta^2/(2E(E+|xi|)); forming it as (1 -/+ xi/E)/2 would cancel.
    const double small = gap * gap / (2.0 * E * (E + std::abs(xi)));
    BogoliubovPoint p;
    p.quasiparticle_energy = E;
    if (xi >= 0) {
        p.v_sq = small;
        p.u_sq = 1.0 - small;
    } else {
        p.u_sq = small;
        p.v_sq = 1.0 - small;
    }
    return p;
}

// Density of Bogoliubov energies over E in [Delta, bDelta], both signs, normalised to n modes.
inline double dos(double E, const MaterialParams& p)
{
    const double a = std::abs(E);
    if (a <= p.gap)
        return 0.0;
    const double b = p.b();
    return p.n / (2.0 * p.gap * std::sqrt(b * b - 1.0)) * a / std::sqrt(a * a - p.gap * p.gap);
}

// n kinetic energies, uniform on [-B, B] inclusive, symmetric about zero.
inline std::vector<double> band_grid(const MaterialParams& p)
{
    require(p.n >= 2, "band_grid: n must be >= 2");
    std::vector<double> eps(static_cast<std::size_t>(p.n));
    const double step = 2.0 * p.bandwidth / double(p.n - 1);
    for (long k = 0; k < p.n; ++k) {
        // mirror the upper half so the grid is symmetric to the last bit
        const long mirror = p.n - 1 - k;
        eps[k] = k < mirror ? -p.bandwidth + step * k : p.bandwidth - step * mirror;
    }
    return eps;
}

} // namespace bcsq
