#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <bcsq/inductor.hpp>

using namespace bcsq;
using boost::math::cyl_bessel_i;
using boost::math::quadrature::gauss_kronrod;

namespace {

constexpr double density = 1e29;
constexpr double length = 1e-6;
constexpr double current = 1e-6;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// radial integral with Boost Bessel functions, in x = r/lambda
template <class F>
double radial(F f, double lo, double hi)
{
    return gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-13);
}

} // namespace

TEST(LondonDepth, AtMetallicDensity)
{
    EXPECT_NEAR(london_depth(density), 1.6805e-8, 0.0005e-8);
    // lambda ~ D^{-1/2}
    EXPECT_NEAR(london_depth(4.0 * density), 0.5 * london_depth(density), 1e-20);
    EXPECT_THROW(london_depth(0.0), ValidationError);
}

TEST(WireFields, BoundaryValues)
{
    const auto g = WireGeometry::from_ratio(5.0, length, density);
    const auto axis = wire_fields(0.0, g, current);
    const auto edge = wire_fields(g.radius, g, current);
    EXPECT_EQ(axis.H_theta, 0.0);
    EXPECT_EQ(axis.A_int_z, 0.0);
    EXPECT_NEAR(edge.H_theta, current / (2.0 * pi * g.radius), 1e-12 * edge.H_theta);
    EXPECT_THROW(wire_fields(1.1 * g.radius, g, current), ValidationError);
}

TEST(WireFields, AmpereLawAndCurrentConservation)
{
    for (double ratio : {0.5, 2.0, 20.0, 100.0}) {
        const auto g = WireGeometry::from_ratio(ratio, length, density);
        const double lam = g.penetration_depth();
        // (1/r) d(r H)/dr = J at interior points
        for (double f : {0.3, 0.6, 0.9}) {
            const double r = f * g.radius;
            const double h = 1e-5 * g.radius;
            const double d = ((r + h) * wire_fields(r + h, g, current).H_theta -
                              (r - h) * wire_fields(r - h, g, current).H_theta) / (2.0 * h * r);
            EXPECT_LT(rel(d, wire_fields(r, g, current).J_z), 1e-6) << ratio << " " << f;
        }
        const double total = radial([&](double x) { return wire_fields(x * lam, g, current).J_z * 2.0 * pi * x * lam * lam; },
                                    0.0, ratio);
        EXPECT_LT(rel(total, current), 1e-10) << ratio;
    }
}

TEST(WireFields, CurrentCrowdsTowardsSurface)
{
    const auto g = WireGeometry::from_ratio(10.0, length, density);
    double prev = 0.0;
    for (int i = 0; i <= 50; ++i) {
        const double j = wire_fields(g.radius * i / 50.0, g, current).J_z;
        EXPECT_GT(j, prev);
        prev = j;
    }
}

TEST(WireFields, MatchBoostBessel)
{
    const auto g = WireGeometry::from_ratio(3.0, length, density);
    const double lam = g.penetration_depth();
    for (double x : {0.1, 1.0, 2.5}) {
        const auto f = wire_fields(x * lam, g, current);
        const double h0 = current / (2.0 * pi * g.radius);
        EXPECT_LT(rel(f.H_theta, h0 * cyl_bessel_i(1, x) / cyl_bessel_i(1, 3.0)), 1e-12);
        EXPECT_LT(rel(f.J_z, h0 / lam * cyl_bessel_i(0, x) / cyl_bessel_i(1, 3.0)), 1e-12);
        const double a = current * constants::mu0 * lam / (2.0 * pi * g.radius) * (1.0 - cyl_bessel_i(0, x)) / cyl_bessel_i(1, 3.0);
        EXPECT_LT(rel(f.A_int_z, a), 1e-10);
    }
}

TEST(WireFields, ThickWireDoesNotOverflow)
{
    const auto g = WireGeometry::from_ratio(2000.0, length, density);
    const auto f = wire_fields(g.radius, g, current);
    EXPECT_TRUE(std::isfinite(f.J_z));
    EXPECT_TRUE(std::isfinite(f.A_int_z));
    EXPECT_GT(f.J_z, 0.0);
}

TEST(Inductances, TotalIsKineticPlusGeometric)
{
    for (double ratio : {0.5, 1.0, 5.0, 20.0, 100.0}) {
        const auto g = WireGeometry::from_ratio(ratio, length, density);
        const auto l = inductances(g);
        EXPECT_DOUBLE_EQ(l.total, l.kinetic + l.geometric);
        EXPECT_NEAR(l.geometric, constants::mu0 * length * std::log(10.0) / (2.0 * pi), 1e-25);
        EXPECT_DOUBLE_EQ(l.geometric_density, constants::mu0 / (8.0 * pi));
        EXPECT_EQ(l.asymptotic_unreliable, ratio < 10.0);
    }
    const auto l = inductances(WireGeometry::from_ratio(20.0, length, density));
    EXPECT_NEAR(l.total, 4.705170e-13, 1e-18);
}

TEST(Inductances, ExactConstitutiveReachesUniformCurrentLimitForThinWires)
{
    // lambda >> r_w: the current is uniform and the internal part tends to mu0/(8 pi)
    double prev = 1e300;
    for (double ratio : {0.5, 0.2, 0.05}) {
        const auto l = inductances(WireGeometry::from_ratio(ratio, length, density, 100.0));
        const double internal = l.internal_density_exact;
        const double gap = rel(internal, constants::mu0 / (8.0 * pi));
        EXPECT_LT(gap, prev) << ratio;
        prev = gap;
    }
    EXPECT_LT(prev, 0.01);
    const auto l = inductances(WireGeometry::from_ratio(0.05, length, density, 100.0));
    EXPECT_LT(rel(l.constitutive_exact, l.constitutive_asymptotic), 1e-4);
}

TEST(FluxEnergyAudit, ExternalPartsAnalytic)
{
    const auto g = WireGeometry::from_ratio(20.0, length, density);
    const auto a = flux_energy_audit(g, current);
    const double ln = std::log(g.cutoff_radius / g.radius);
    EXPECT_LT(rel(a.flux_ext, constants::mu0 * current * length * ln / (2.0 * pi)), 1e-10);
    EXPECT_LT(rel(a.energy_ext, constants::mu0 * current * current * length * ln / (4.0 * pi)), 1e-10);
}

TEST(FluxEnergyAudit, InternalEnergiesAgreeWithBoostQuadrature)
{
    for (double ratio : {1.0, 20.0}) {
        const auto g = WireGeometry::from_ratio(ratio, length, density);
        const double lam = g.penetration_depth();
        const double h0 = current / (2.0 * pi * g.radius);
        const double i1a = cyl_bessel_i(1, ratio);
        const double mde2 = constants::m_e / (density * constants::e * constants::e);
        const double ek = length * radial([&](double x) {
            const double j = h0 / lam * cyl_bessel_i(0, x) / i1a;
            return 0.5 * mde2 * j * j * 2.0 * pi * x * lam * lam;
        }, 0.0, ratio);
        const double ei = length * radial([&](double x) {
            const double b = constants::mu0 * h0 * cyl_bessel_i(1, x) / i1a;
            return b * b / (2.0 * constants::mu0) * 2.0 * pi * x * lam * lam;
        }, 0.0, ratio);
        const auto a = flux_energy_audit(g, current);
        EXPECT_LT(rel(a.energy_kinetic, ek), 1e-9) << ratio;
        EXPECT_LT(rel(a.energy_field_int, ei), 1e-9) << ratio;
    }
}

TEST(FluxEnergyAudit, FluxAndEnergyInductancesConvergeForThickWires)
{
    double prev = 1e300;
    for (double ratio : {1.0, 5.0, 20.0, 100.0}) {
        const auto a = flux_energy_audit(WireGeometry::from_ratio(ratio, length, density), current);
        const double gap = rel(a.inductance_flux, a.inductance_energy);
        EXPECT_LT(gap, prev) << ratio;
        prev = gap;
    }
    EXPECT_LT(prev, 1e-6);
}

TEST(LumpedChain, LinearProfileAndSegmentIndependentEnergy)
{
    const double phi_a = 0.2, phi_b = 3.0, e_l = 0.7;
    const double expect = 0.5 * e_l * (phi_b - phi_a) * (phi_b - phi_a);
    for (int m : {1, 4, 16}) {
        const auto c = lumped_chain(m, phi_a, phi_b, e_l);
        ASSERT_EQ(c.phases.size(), static_cast<std::size_t>(m + 1));
        for (int k = 0; k <= m; ++k)
            EXPECT_NEAR(c.phases[k], phi_a + (phi_b - phi_a) * k / m, 1e-12);
        for (double grad : c.gradients)
            EXPECT_NEAR(grad, (phi_b - phi_a) / m, 1e-12);
        EXPECT_NEAR(c.energy, expect, 1e-12);
    }
    EXPECT_THROW(lumped_chain(0, 0.0, 1.0, 1.0), ValidationError);
}

TEST(CriticalCurrent, PhaseWindowBound)
{
    EXPECT_EQ(m_max(1e-6, 100e-9), 15);
    EXPECT_EQ(m_max(1e-9, 1e-9), 0);
    EXPECT_THROW(m_max(0.0, 1e-9), ValidationError);
}

TEST(CriticalCurrent, SupercurrentFromPhaseDrop)
{
    const double l = 1e-9;
    EXPECT_NEAR(supercurrent(0.0, 2.0 * pi, l), constants::phi0 / l, 1e-20);
    EXPECT_DOUBLE_EQ(supercurrent(1.0, 0.5, l), -supercurrent(0.5, 1.0, l));
    EXPECT_THROW(supercurrent(0.0, 1.0, 0.0), ValidationError);
}
