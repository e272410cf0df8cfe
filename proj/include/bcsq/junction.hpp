#pragma once

#include <cmath>
#include <optional>

#include "common.hpp"
#include "quadrature.hpp"

namespace bcsq {

struct JunctionParams {
    double tunnel_element = 0.0;   // t
    double electrons_a = 0.0;      // N_A^e
    double electrons_b = 0.0;      // N_B^e
    double gap = 0.0;
    double bandwidth = 0.0;
    double coulomb_strength = 0.0; // lambda_C
    double e0 = 0.0;               // unperturbed denominator scale E0

    void validate() const
    {
        require(tunnel_element >= 0, "junction: tunnel element must be non-negative");
        require(electrons_a > 0 && electrons_b > 0, "junction: electron counts must be positive");
        require(gap > 0 && bandwidth > 0, "junction: gap and bandwidth must be positive");
        require(coulomb_strength >= 0 && e0 >= 0, "junction: coulomb strength and E0 must be non-negative");
    }
};

// Diagonal lambda_C (n_tot^2 - (N_AB - n_g)^2) on consecutive charge-difference labels first_label + j.
inline ComplexMatrix capacitive_term(long n_tot, double lambda_c, double n_g, int dim, long first_label)
{
    require(dim >= 2, "capacitive_term: dim must be >= 2");
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    const double nt = double(n_tot);
    for (int j = 0; j < dim; ++j) {
        const double x = double(first_label + j) - n_g;
        h(j, j) = lambda_c * (nt * nt - x * x);
    }
    return h;
}

inline ComplexMatrix capacitive_term(long n_tot, double lambda_c, double n_g, int dim)
{
    return capacitive_term(n_tot, lambda_c, n_g, dim, -long(dim / 2));
}

// beta -> infinity contour result of the Matsubara sum for one pair of quasiparticle energies.
inline double pair_propagator_sum(double e0, double gap, double ea, double eb)
{
    require(ea >= gap && eb >= gap, "pair_propagator_sum: energies must be >= gap");
    const double s = ea + eb;
    return gap * gap / (2.0 * ea * eb) * s / (e0 * e0 + s * s);
}

inline double first_order_tunnelling() { return 0.0; }

struct JosephsonIntegral {
    double numeric = 0.0;
    double error = 0.0;
    std::optional<double> small_e0;   // pi^2/(4 Delta) (1 - E0^2/16 Delta^2), E0/Delta <= 0.5
    std::optional<double> large_e0;   // pi ln(2 E0/Delta)/(2 E0), E0/Delta >= 20
};

inline double josephson_small_e0(double e0, double gap) { return pi * pi / (4.0 * gap) * (1.0 - e0 * e0 / (16.0 * gap * gap)); }
inline double josephson_large_e0(double e0, double gap) { return pi * std::log(2.0 * e0 / gap) / (2.0 * e0); }

// I(E0, Delta) = int int (Ea + Eb) dEa dEb / (sqrt(Ea^2 - D^2) sqrt(Eb^2 - D^2) (E0^2 + (Ea + Eb)^2)) over [D, inf)^2.
// With E = D/sin(theta), dE/sqrt(E^2 - D^2) = dtheta/sin(theta), and the integrand becomes
// D (sa + sb)/(E0^2 (sa sb)^2 + D^2 (sa + sb)^2) on the compact square (0, pi/2]^2. It still behaves
// like 1/(D (ta + tb)) at the corner ta = tb = 0, so the square is integrated in polar coordinates
// about that corner (the Jacobian r cancels the singularity), using the ta <-> tb symmetry.
inline JosephsonIntegral josephson_integral(double e0, double gap, double rel_tol = 1e-9)
{
    require(e0 >= 0, "josephson_integral: E0 must be non-negative");
    require(gap > 0, "josephson_integral: gap must be positive");
    const double e02 = e0 * e0;
    const double g2 = gap * gap;
    double inner_err = 0.0;
    auto radial = [&](double psi) {
        const double c = std::cos(psi);
        const double s = std::sin(psi);
        auto f = [&](double r) {
            const double sa = std::sin(r * c);
            const double sb = std::sin(r * s);
            const double sum = sa + sb;
            const double p = sa * sb;
            return r * gap * sum / (e02 * p * p + g2 * sum * sum);
        };
        // the radial profile is flat up to E0 r^2 c s ~ Delta (c + s), then falls as 1/r^3;
        // splitting there keeps large E0 from hiding the plateau inside one panel
        const double r_max = 0.5 * pi / c;
        const double r_knee = e0 > 0 ? std::sqrt(gap * (c + s) / (e0 * c * std::max(s, 1e-300))) : r_max;
        double value = 0.0;
        double lo = 0.0;
        for (double hi : {0.25 * r_knee, r_knee, 4.0 * r_knee, r_max}) {
            hi = std::min(hi, r_max);
            if (hi <= lo)
                continue;
            const auto res = quad::smooth(f, lo, hi, rel_tol);
            inner_err = std::max(inner_err, res.error);
            value += res.value;
            lo = hi;
        }
        return value;
    };
    const auto outer = quad::smooth(radial, 0.0, 0.25 * pi, rel_tol);
    JosephsonIntegral r;
    r.numeric = 2.0 * outer.value;
    r.error = 2.0 * (outer.error + 0.25 * pi * inner_err);
    const double x = e0 / gap;
    if (x <= 0.5)
        r.small_e0 = josephson_small_e0(e0, gap);
    if (x >= 20.0)
        r.large_e0 = josephson_large_e0(e0, gap);
    return r;
}

// E_J = t^2 2 pi^2 N_A N_B Delta/B^2 (small-E0 limit of the second-order term).
inline double josephson_energy(const JunctionParams& p)
{
    p.validate();
    const double t = p.tunnel_element;
    return t * t * 2.0 * pi * pi * p.electrons_a * p.electrons_b * p.gap / (p.bandwidth * p.bandwidth);
}

// The E_J formula assumes E0 << Delta; callers warn when this is false.
inline bool josephson_formula_applicable(const JunctionParams& p) { return p.e0 <= 0.1 * p.gap; }

} // namespace bcsq
