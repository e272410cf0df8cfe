#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <bcsq/circuit.hpp>

using namespace bcsq;

namespace {

// open-ended charge basis, wide enough that truncation is invisible
std::vector<double> transmon_oracle(double e_c, double e_j, double n_g, int k)
{
    const int half = 30;
    const int size = 2 * half + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
    for (int j = 0; j < size; ++j) {
        const double x = double(j - half) - n_g;
        h(j, j) = e_c * x * x;
        if (j + 1 < size)
            h(j, j + 1) = h(j + 1, j) = -0.5 * e_j;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    return std::vector<double>(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
}

CircuitSpec transmon(int dim, double phi0)
{
    CircuitSpec s;
    s.e_c = 1.0;
    s.e_j = 1.0;
    s.dim = dim;
    s.phi0 = phi0;
    return s;
}

double max_corner_spread(int dim)
{
    const auto a = ng_sweep(transmon(dim, 0.0), -2.0, 2.0, 201, 4);
    const auto b = ng_sweep(transmon(dim, pi), -2.0, 2.0, 201, 4);
    return (a.levels - b.levels).cwiseAbs().maxCoeff();
}

} // namespace

TEST(BuildCj, ChargeStatesWithoutJunction)
{
    CircuitSpec s;
    s.e_c = 2.0;
    s.dim = 6;
    s.n_g = 0.3;
    const auto h = build_cj(s);
    const auto labels = cj_charge_labels(s);
    for (int j = 0; j <= s.dim; ++j) {
        EXPECT_NEAR(h(j, j).real(), 2.0 * (labels[j] - 0.3) * (labels[j] - 0.3), 1e-12);
        for (int k = 0; k <= s.dim; ++k)
            if (k != j)
                EXPECT_EQ(h(j, k), cplx(0.0));
    }
}

TEST(BuildCj, HermitianForAnyCornerPhase)
{
    for (double phi0 : {0.0, 0.4, pi, -2.0}) {
        auto s = transmon(8, phi0);
        s.n_g = 0.37;
        EXPECT_LT(hermiticity_residue(build_cj(s)), 1e-15);
    }
}

TEST(BuildCj, RejectsInductiveOrBadSpecs)
{
    auto s = transmon(8, 0.0);
    s.e_l = 0.1;
    EXPECT_THROW(build_cj(s), ValidationError);
    s = transmon(1, 0.0);
    EXPECT_THROW(build_cj(s), ValidationError);
    s = transmon(8, 0.0);
    s.e_c = 0.0;
    EXPECT_THROW(build_cj(s), ValidationError);
}

TEST(Transmon, PeriodicInGateCharge)
{
    for (double phi0 : {0.0, 1.1, pi}) {
        for (double n_g : {-0.4, 0.1, 0.5, 0.73}) {
            auto a = transmon(8, phi0);
            a.n_g = n_g;
            auto b = a;
            b.n_g = n_g + 1.0;
            const auto ea = spectrum(build_cj(a), 4);
            const auto eb = spectrum(build_cj(b), 4);
            for (int m = 0; m < 4; ++m)
                EXPECT_NEAR(ea[m], eb[m], 1e-12) << phi0 << " " << n_g;
        }
    }
}

TEST(Transmon, EvenInGateChargeForRealCornerPhase)
{
    for (double phi0 : {0.0, pi})
        for (double n_g : {0.1, 0.3, 0.45}) {
            auto a = transmon(8, phi0);
            a.n_g = n_g;
            auto b = a;
            b.n_g = -n_g;
            const auto ea = spectrum(build_cj(a), 4);
            const auto eb = spectrum(build_cj(b), 4);
            for (int m = 0; m < 4; ++m)
                EXPECT_NEAR(ea[m], eb[m], 1e-12);
        }
}

TEST(Transmon, ConvergesToOpenChargeBasis)
{
    for (double phi0 : {0.0, pi})
        for (double n_g : {0.0, 0.25, 0.5}) {
            auto s = transmon(20, phi0);
            s.n_g = n_g;
            const auto got = spectrum(build_cj(s), 4);
            const auto ref = transmon_oracle(1.0, 1.0, n_g, 4);
            for (int m = 0; m < 4; ++m)
                EXPECT_NEAR(got[m], ref[m], 1e-10) << phi0 << " " << n_g << " " << m;
        }
}

TEST(Transmon, CornerPhaseDependenceDiesWithDimension)
{
    // frozen from an independent dense diagonalisation of the same truncated matrices
    const double d8 = max_corner_spread(8);
    const double d10 = max_corner_spread(10);
    const double d12 = max_corner_spread(12);
    EXPECT_NEAR(d8, 1.72e-5, 0.05e-5);
    EXPECT_NEAR(d10, 9.8e-9, 0.5e-9);
    EXPECT_LT(d12, 1e-11);
    EXPECT_GT(d8, d10);
    EXPECT_GT(d10, d12);
}

TEST(NgSweep, ScalesByJosephsonEnergy)
{
    auto s = transmon(8, 0.0);
    s.e_j = 2.0;
    const auto r = ng_sweep(s, -1.0, 1.0, 5, 3);
    EXPECT_TRUE(r.scaled_by_e_j);
    s.n_g = r.n_g_values[1];
    const auto raw = spectrum(build_cj(s), 3);
    for (int m = 0; m < 3; ++m)
        EXPECT_NEAR(r.levels(1, m), raw[m] / 2.0, 1e-12);
    EXPECT_THROW(ng_sweep(s, 0.0, 1.0, 1, 3), ValidationError);
}

TEST(NgSweep, ThreadCountDoesNotChangeResult)
{
    const auto a = ng_sweep(transmon(8, pi), -2.0, 2.0, 41, 4, 1);
    const auto b = ng_sweep(transmon(8, pi), -2.0, 2.0, 41, 4, 4);
    EXPECT_EQ((a.levels - b.levels).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Spectrum, RejectsNonHermitian)
{
    ComplexMatrix h = ComplexMatrix::Identity(3, 3);
    h(0, 1) = cplx(0.0, 1e-6);
    EXPECT_THROW(spectrum(h, 2), ValidationError);
    EXPECT_THROW(spectrum(ComplexMatrix::Identity(3, 3), 4), ValidationError);
}

TEST(Spectrum, PauliAndIdentity)
{
    ComplexMatrix sy(2, 2);
    sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    const auto e = spectrum(sy, 2);
    EXPECT_NEAR(e[0], -1.0, 1e-15);
    EXPECT_NEAR(e[1], 1.0, 1e-15);
    const auto es = eigensystem(3.0 * ComplexMatrix::Identity(4, 4));
    EXPECT_NEAR(es.values.maxCoeff(), 3.0, 1e-15);
    EXPECT_NEAR(es.values.minCoeff(), 3.0, 1e-15);
}

namespace {

CircuitSpec lcj(int window)
{
    CircuitSpec s;
    s.e_c = 1.0;
    s.e_l = 0.02;
    s.dim = 64;
    s.phase_window = window;
    return s;
}

} // namespace

TEST(BuildLcj, HermitianAndSized)
{
    auto s = lcj(2);
    s.e_j = 0.3;
    s.n_g = 0.2;
    const auto h = build_lcj(s);
    EXPECT_EQ(h.rows(), 128);
    EXPECT_EQ(hermiticity_residue(h), 0.0);
}

TEST(BuildLcj, HarmonicLimit)
{
    // E_J = 0: oscillator with omega = sqrt(2 E_C E_L)
    const double omega = std::sqrt(2.0 * 1.0 * 0.02);
    const auto e = spectrum(build_lcj(lcj(4)), 3);
    for (int k = 0; k < 3; ++k)
        EXPECT_NEAR(e[k], omega * (k + 0.5), 0.01 * omega * (k + 0.5)) << k;
}

TEST(BuildLcj, ConvergesWithPhaseWindow)
{
    // each window is a periodic rotor of circumference 2 pi M; the ground state settles onto the oscillator
    const double exact = 0.5 * std::sqrt(2.0 * 0.02);
    double prev_err = 1e300;
    for (int m : {1, 2, 4}) {
        const double err = std::abs(spectrum(build_lcj(lcj(m)), 1)[0] - exact);
        EXPECT_LT(err, prev_err) << m;
        prev_err = err;
    }
    EXPECT_LT(prev_err, 1e-5);
}

TEST(BuildLcj, WindowBoundedByCriticalCurrent)
{
    auto s = lcj(4);
    s.m_max = 3;
    EXPECT_THROW(build_lcj(s), ValidationError);
    s.m_max = 4;
    EXPECT_NO_THROW(build_lcj(s));
    s.e_l = 0.0;
    EXPECT_THROW(build_lcj(s), ValidationError);
}
