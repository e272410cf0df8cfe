#pragma once

#include <cmath>
#include <vector>

#include "common.hpp"
#include "operators.hpp"
#include "parallel.hpp"

namespace bcsq {

struct CircuitSpec {
    double e_c = 1.0;
    double e_j = 0.0;
    double e_l = 0.0;
    double n_g = 0.0;
    int dim = 8;
    double phi0 = 0.0;
    int phase_window = 1;   // M, extended phase support [-M pi, M pi) for inductive circuits
    int m_max = 0;          // critical-current bound on M from the inductor model, 0 = not supplied

    void validate() const
    {
        require(e_c > 0, "circuit: e_c must be positive");
        require(e_j >= 0 && e_l >= 0, "circuit: e_j and e_l must be non-negative");
        require(dim >= 2, "circuit: dim must be >= 2");
        require(phase_window >= 1, "circuit: phase_window must be >= 1");
    }
};

// Charge labels of the (dim+1)-state CJ basis, centred on round(n_g) so shifting n_g by one
// relabels the basis exactly.
inline std::vector<long> cj_charge_labels(const CircuitSpec& s)
{
    const int size = s.dim + 1;
    const long first = std::lround(s.n_g) - size / 2;
    std::vector<long> labels(static_cast<std::size_t>(size));
    for (int j = 0; j < size; ++j)
        labels[j] = first + j;
    return labels;
}

// H = E_C (N - n_g)^2 - (E_J/2)(S + S^dag), S = raising_operator(dim, phi0).
inline ComplexMatrix build_cj(const CircuitSpec& s)
{
    s.validate();
    require(s.e_l == 0, "build_cj: e_l must be zero for the CJ circuit");
    const auto labels = cj_charge_labels(s);
    const ComplexMatrix raise = raising_operator(s.dim, s.phi0);
    ComplexMatrix h = -0.5 * s.e_j * (raise + raise.adjoint());
    const double centre_offset = double(std::lround(s.n_g)) - s.n_g;
    for (int j = 0; j <= s.dim; ++j) {
        const double x = double(labels[j] - std::lround(s.n_g)) + centre_offset;
        h(j, j) += s.e_c * x * x;
    }
    return h;
}

// H = E_C (N - n_g)^2 - E_J cos(phi) + (E_L/2) phi^2 on dim*M phase points phi_j = -M pi + 2 pi j/dim.
// N is the DFT conjugate on the extended grid, with charge labels k/M; its kinetic term is a
// circulant in the phase basis.
inline ComplexMatrix build_lcj(const CircuitSpec& s)
{
    s.validate();
    require(s.e_l > 0, "build_lcj: e_l must be positive");
    if (s.m_max > 0 && s.phase_window > s.m_max)
        throw ValidationError("build_lcj: phase_window " + std::to_string(s.phase_window) +
                              " exceeds the critical-current bound M_max = " + std::to_string(s.m_max));
    const int M = s.phase_window;
    const int size = s.dim * M;
    const double step = 2.0 * pi / s.dim;
    // column c(r) = (1/size) sum_k E_C (N_k - n_g)^2 e^{-i N_k r step}, r = j - j'
    std::vector<cplx> column(static_cast<std::size_t>(size), 0.0);
    for (int r = 0; r < size; ++r) {
        cplx acc = 0.0;
        for (int k = 0; k < size; ++k) {
            const long label = k - size / 2;
            const double x = double(label) / M - s.n_g;
            // N_k r step = 2 pi label r/size; reduce label*r mod size in integers
            const long phase = ((label * r) % size + size) % size;
            acc += s.e_c * x * x * std::polar(1.0, -2.0 * pi * double(phase) / size);
        }
        column[r] = acc / double(size);
    }
    ComplexMatrix h(size, size);
    for (int j = 0; j < size; ++j)
        for (int jp = 0; jp < size; ++jp)
            h(j, jp) = column[static_cast<std::size_t>(((j - jp) % size + size) % size)];
    for (int j = 0; j < size; ++j) {
        const double phi = -M * pi + j * step;
        h(j, j) += -s.e_j * std::cos(phi) + 0.5 * s.e_l * phi * phi;
    }
    // remove rounding asymmetry so the matrix is Hermitian to the last bit
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    return sym;
}

inline double hermiticity_residue(const ComplexMatrix& h)
{
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    return (h - h.adjoint()).cwiseAbs().maxCoeff() / scale;
}

struct Eigensystem {
    RealVector values;
    ComplexMatrix vectors;
};

inline Eigensystem eigensystem(const ComplexMatrix& h)
{
    require(h.rows() == h.cols(), "spectrum: matrix must be square");
    require(hermiticity_residue(h) <= 1e-12, "spectrum: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("spectrum: Hermitian eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// k lowest eigenvalues, ascending.
inline std::vector<double> spectrum(const ComplexMatrix& h, int k)
{
    require(k >= 1 && k <= h.rows(), "spectrum: k must lie in [1, dim]");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver;
    require(h.rows() == h.cols(), "spectrum: matrix must be square");
    require(hermiticity_residue(h) <= 1e-12, "spectrum: matrix is not Hermitian");
    solver.compute(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("spectrum: Hermitian eigensolver did not converge");
    return std::vector<double>(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
}

struct SpectrumResult {
    std::vector<double> n_g_values;
    Eigen::MatrixXd levels;   // rows: n_g points, columns: eigenvalue index, ascending
    bool scaled_by_e_j = false;
};

inline SpectrumResult ng_sweep(const CircuitSpec& spec, double n_g_min, double n_g_max, int steps, int k,
                               unsigned jobs = 1)
{
    require(steps >= 2, "ng_sweep: steps must be >= 2");
    spec.validate();
    SpectrumResult r;
    r.levels.resize(steps, k);
    r.scaled_by_e_j = spec.e_j > 0;
    for (int i = 0; i < steps; ++i)
        r.n_g_values.push_back(n_g_min + (n_g_max - n_g_min) * i / (steps - 1));
    parallel_for(static_cast<std::size_t>(steps), jobs, [&](std::size_t i) {
        CircuitSpec s = spec;
        s.n_g = r.n_g_values[i];
        const auto ev = spectrum(s.e_l > 0 ? build_lcj(s) : build_cj(s), k);
        for (int m = 0; m < k; ++m)
            r.levels(static_cast<Eigen::Index>(i), m) = r.scaled_by_e_j ? ev[m] / spec.e_j : ev[m];
    });
    return r;
}

} // namespace bcsq
