#pragma once

#include <cmath>
#include <vector>

#include "common.hpp"
#include "subspace.hpp"

namespace bcsq {

// Phase and number operators on a D-point grid phi_j = phi0 + 2 pi j/D. The phase states are
// treated as orthonormal (large-n limit), so the number states |N> = D^{-1/2} sum_j e^{-i N phi_j}|phi_j>
// form the unitary change of basis `dft`.
struct OperatorSet {
    int dim = 0;
    double phi0 = 0.0;
    double delta_phi = 0.0;
    std::vector<double> phases;   // phi_j
    std::vector<long> labels;     // N_k, consecutive, first = round(n/2) - D/2
    ComplexMatrix phase_op;       // diagonal, phase basis
    ComplexMatrix number_op;      // diagonal, number basis
    ComplexMatrix dft;            // column k = |N_k> in phase-basis coordinates

    ComplexMatrix phase_in_number_basis() const { return dft.adjoint() * phase_op * dft; }
    ComplexMatrix number_in_phase_basis() const { return dft * number_op * dft.adjoint(); }

    // e^{i phi} in the number basis; lowers the label by one with wrap phase e^{i D phi0}.
    ComplexMatrix exp_i_phase() const
    {
        ComplexVector diag(dim);
        for (int j = 0; j < dim; ++j)
            diag[j] = std::polar(1.0, phases[j]);
        return dft.adjoint() * diag.asDiagonal() * dft;
    }
};

inline OperatorSet build_operators(int dim, long n, double phi0)
{
    require(dim >= 2, "build_operators: dim must be >= 2");
    require(n >= 2, "build_operators: n must be >= 2");
    OperatorSet ops;
    ops.dim = dim;
    ops.phi0 = phi0;
    ops.delta_phi = 2.0 * pi / dim;
    const long centre = std::lround(0.5 * double(n));
    for (int j = 0; j < dim; ++j) {
        ops.phases.push_back(phi0 + j * ops.delta_phi);
        ops.labels.push_back(centre - dim / 2 + j);
    }
    ops.phase_op = ComplexMatrix::Zero(dim, dim);
    ops.number_op = ComplexMatrix::Zero(dim, dim);
    ops.dft.resize(dim, dim);
    const double norm = 1.0 / std::sqrt(double(dim));
    for (int j = 0; j < dim; ++j) {
        ops.phase_op(j, j) = ops.phases[j];
        ops.number_op(j, j) = double(ops.labels[j]);
        // e^{-i N_k phi_j} = e^{-i N_first phi_j} e^{-i k phi_j}; the large common factor is a
        // row phase that cancels exactly in every similarity transform.
        const cplx common = std::polar(1.0, -double(ops.labels[0]) * ops.phases[j]);
        for (int k = 0; k < dim; ++k)
            ops.dft(j, k) = common * std::polar(norm, -double(k) * ops.phases[j]);
    }
    return ops;
}

inline OperatorSet build_operators(const Discretization& d, double phi0)
{
    return build_operators(d.dim, d.n, phi0);
}

// <N|[phi, N]|N'> written as the geometric-sum closed form on the grid's own spacing:
// (N' - N) dphi e^{i phi0 m}/(e^{i dphi m} - 1), m = N - N'.
inline cplx commutator_closed_form(long N, long Np, double delta_phi, double phi0)
{
    const long m = N - Np;
    if (m == 0)
        return 0.0;
    const cplx kernel = std::polar(1.0, phi0 * double(m)) / (std::polar(1.0, delta_phi * double(m)) - 1.0);
    return double(Np - N) * delta_phi * kernel;
}

// The same element with the coefficients exactly as printed in the paper (alpha, n), kept for the
// deviation report; it is not consistent with any single grid spacing.
inline cplx commutator_closed_form_literal(long N, long Np, long n, double alpha, double phi0)
{
    const long m = N - Np;
    if (m == 0)
        return 0.0;
    const double sn1 = std::sqrt(double(n) - 1.0);
    const double pref = 2.0 * pi * alpha * sn1 / (std::sqrt(double(n)) * (sn1 + alpha));
    const cplx z = std::polar(1.0, 2.0 * pi * alpha * double(m) / sn1);
    return pref * double(Np - N) * std::polar(1.0, phi0 * double(m)) * z / (z - 1.0);
}

// Large-n commutator: i (1 - delta_NN') e^{i phi0 (N - N')}.
inline ComplexMatrix commutator_large_n(const OperatorSet& ops)
{
    ComplexMatrix c(ops.dim, ops.dim);
    for (int a = 0; a < ops.dim; ++a)
        for (int b = 0; b < ops.dim; ++b)
            c(a, b) = a == b ? cplx(0.0)
                             : cplx(0.0, 1.0) * std::polar(1.0, ops.phi0 * double(ops.labels[a] - ops.labels[b]));
    return c;
}

struct CommutatorRecord {
    ComplexMatrix matrix;       // [phi, N] in the number basis by direct matrix algebra
    cplx trace = 0.0;
    double max_closed_form_deviation = 0.0;   // max relative entrywise deviation from the closed form
};

inline CommutatorRecord commutator(const OperatorSet& ops)
{
    CommutatorRecord r;
    const ComplexMatrix phi = ops.phase_in_number_basis();
    r.matrix = phi * ops.number_op - ops.number_op * phi;
    r.trace = r.matrix.trace();
    for (int a = 0; a < ops.dim; ++a)
        for (int b = 0; b < ops.dim; ++b) {
            if (a == b)
                continue;
            const cplx ref = commutator_closed_form(ops.labels[a], ops.labels[b], ops.delta_phi, ops.phi0);
            r.max_closed_form_deviation = std::max(r.max_closed_form_deviation, std::abs(r.matrix(a, b) - ref) / std::abs(ref));
        }
    return r;
}

// <Psi(phi)|[phi, N]|Psi(phi)> ~ -i(1 - D |W(phi0 - phi)|^2)
inline cplx phase_expectation(const OperatorSet& ops, const BandCoefficients& band, double phi)
{
    return cplx(0.0, -1.0) * (1.0 - ops.dim * std::norm(overlap_exact(ops.phi0 - phi, band)));
}

// Symmetric two-island junction: -2i(1 - D |W(phi0_AB - phi_AB)|^2)
inline cplx junction_expectation(const OperatorSet& ops, const BandCoefficients& band, double phi_ab, double phi0_ab)
{
    return cplx(0.0, -2.0) * (1.0 - ops.dim * std::norm(overlap_exact(phi0_ab - phi_ab, band)));
}

// D_s |phi_j> = |phi_{j+k}>, s = k delta_phi; a cyclic permutation with no wrap phase because the
// number labels are integers.
inline ComplexMatrix displacement(const Discretization& d, double shift)
{
    const double steps = shift / d.delta_phi;
    const double k_real = std::round(steps);
    if (std::abs(steps - k_real) > 1e-9 * std::max(1.0, std::abs(steps)))
        throw ValidationError("displacement: shift is not an integer multiple of delta_phi");
    const long k = static_cast<long>(k_real);
    ComplexMatrix p = ComplexMatrix::Zero(d.dim, d.dim);
    for (int j = 0; j < d.dim; ++j)
        p(static_cast<int>(((j + k) % d.dim + d.dim) % d.dim), j) = 1.0;
    return p;
}

// e^{i phi} in a (dim+1)-state number basis: sum_{j=1}^{dim} |j-1><j| + e^{i(dim+1)phi0}|dim><0|.
inline ComplexMatrix raising_operator(int dim, double phi0)
{
    require(dim >= 2, "raising_operator: dim must be >= 2");
    ComplexMatrix s = ComplexMatrix::Zero(dim + 1, dim + 1);
    for (int j = 1; j <= dim; ++j)
        s(j - 1, j) = 1.0;
    s(dim, 0) = std::polar(1.0, (dim + 1) * phi0);
    return s;
}

} // namespace bcsq
