#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "common.hpp"
#include "core_model.hpp"

namespace bcsq {

// Bogoliubov coefficients on the band grid, cached for repeated overlap evaluations.
struct BandCoefficients {
    std::vector<double> u_sq;
    std::vector<double> v_sq;

    explicit BandCoefficients(const MaterialParams& p)
    {
        for (double eps : band_grid(p)) {
            const auto c = bogoliubov(eps, p.chemical_potential, p.gap);
            u_sq.push_back(c.u_sq);
            v_sq.push_back(c.v_sq);
        }
    }
};

inline double wrap_phase(double phi)
{
    double w = std::fmod(phi + pi, 2.0 * pi);
    if (w < 0)
        w += 2.0 * pi;
    return w - pi;
}

// W(phi) = prod_k (u_k^2 + v_k^2 e^{i phi}) as a sum of logs. The phase of each factor is
// taken with atan2, which is continuous on (-pi, pi) starting from 0 at phi = 0.
inline cplx overlap_exact(double phi, const BandCoefficients& band)
{
    phi = wrap_phase(phi);
    const double s2 = std::sin(0.5 * phi) * std::sin(0.5 * phi);
    const double sn = std::sin(phi);
    const double cs = std::cos(phi);
    double log_mag = 0.0;
    double arg = 0.0;
    for (std::size_t k = 0; k < band.u_sq.size(); ++k) {
        const double u2 = band.u_sq[k];
        const double v2 = band.v_sq[k];
        log_mag += 0.5 * std::log1p(-4.0 * u2 * v2 * s2);
        arg += std::atan2(v2 * sn, u2 + v2 * cs);
    }
    return std::polar(std::exp(log_mag), arg);
}

inline cplx overlap_exact(double phi, const MaterialParams& p)
{
    return overlap_exact(phi, BandCoefficients(p));
}

inline cplx overlap_gaussian(double phi, long n, double b)
{
    require(b > 1, "overlap_gaussian: b must exceed 1");
    return std::polar(std::exp(-pi * double(n) * phi * phi / (16.0 * b)), 0.5 * double(n) * phi);
}

struct Discretization {
    long n = 0;
    double b = 0.0;
    double alpha = 0.0;
    double alpha0 = 0.0;
    double delta_phi = 0.0;
    int dim = 0;
    std::vector<double> grid;

    // dim * delta_phi == 2 pi, required for the circulant/DFT constructions
    bool commensurate() const { return std::abs(dim * delta_phi - 2.0 * pi) < 1e-12; }

    static double alpha0_of(double b) { return std::sqrt(2.0 * b) / pi; }

    // Grid with exactly dim points spaced 2 pi/dim; alpha follows from delta_phi.
    static Discretization from_dim(const MaterialParams& p, int dim)
    {
        require(dim >= 2, "discretization: dim must be >= 2");
        Discretization d;
        d.n = p.n;
        d.b = p.b();
        d.alpha0 = alpha0_of(d.b);
        d.dim = dim;
        d.delta_phi = 2.0 * pi / dim;
        d.alpha = d.delta_phi * std::sqrt(double(p.n)) / (2.0 * pi);
        d.fill_grid();
        return d;
    }

    void fill_grid()
    {
        grid.resize(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j)
            grid[j] = -pi + j * delta_phi;
    }
};

// alpha = alpha_ratio * alpha0, delta_phi = 2 pi alpha/sqrt(n), dim = floor(2 pi/delta_phi).
inline Discretization discretize(const MaterialParams& p, double alpha_ratio)
{
    require(alpha_ratio > 0, "discretize: alpha_ratio must be positive");
    Discretization d;
    d.n = p.n;
    d.b = p.b();
    d.alpha0 = Discretization::alpha0_of(d.b);
    d.alpha = alpha_ratio * d.alpha0;
    d.delta_phi = 2.0 * pi * d.alpha / std::sqrt(double(p.n));
    const double ratio = 2.0 * pi / d.delta_phi;
    // guard floor() against ratio landing a hair under an integer
    d.dim = static_cast<int>(std::floor(ratio * (1.0 + 1e-14)));
    if (d.dim < 2)
        throw ValidationError("discretize: grid too coarse (dim < 2)");
    d.fill_grid();
    return d;
}

inline double formula_deff1(long n, double b) { return 0.5 * pi * std::sqrt(double(n) / (2.0 * b)); }
inline double formula_deff(long n, double b) { return pi * std::sqrt(double(n) / (2.0 * b)); }

struct ProjectionRecord {
    double distance_bound = 0.0;
    double k_n = 0.0;
    double k_n_mean = 0.0;
};

inline double distance_bound(const Discretization& d)
{
    const double r = d.alpha / d.alpha0;
    return std::sqrt(2.0 * (1.0 - std::exp(-pi * r * r / 2.0)));
}

// Continuum mean of K_n: the grid sum of the Gaussian |W|^2 replaced by an integral over a 2 pi range.
inline double projection_mean(const Discretization& d, double phi)
{
    const double sn = std::sqrt(double(d.n));
    const double scale = 2.0 * d.alpha0 * std::sqrt(pi);
    return d.alpha0 / (2.0 * d.alpha) *
           (std::erf(sn * (pi + phi) / scale) - std::erf((sn * (pi + phi) - 2.0 * pi * sn) / scale));
}

inline ProjectionRecord completeness_and_projection(const Discretization& d, const BandCoefficients& band,
                                                    double phi)
{
    require(phi >= -pi && phi < pi, "completeness_and_projection: phi must lie in [-pi, pi)");
    ProjectionRecord r;
    r.distance_bound = distance_bound(d);
    for (double pj : d.grid)
        r.k_n += std::norm(overlap_exact(phi - pj, band));
    r.k_n_mean = projection_mean(d, phi);
    return r;
}

inline ProjectionRecord completeness_and_projection(const Discretization& d, const MaterialParams& p, double phi)
{
    return completeness_and_projection(d, BandCoefficients(p), phi);
}

enum class OverlapModel { exact, gaussian };

struct OverlapMatrix {
    std::vector<cplx> first_column;   // w_j = W(j delta_phi)
    int dim = 0;

    // Hermitian circulant with entry (l, m) = W(phi_l - phi_m) = w_{(l - m) mod dim}.
    ComplexMatrix full() const
    {
        ComplexMatrix m(dim, dim);
        for (int l = 0; l < dim; ++l)
            for (int k = 0; k < dim; ++k)
                m(l, k) = first_column[static_cast<std::size_t>(((l - k) % dim + dim) % dim)];
        return m;
    }
};

inline OverlapMatrix build_overlap_matrix(const Discretization& d, const MaterialParams& p,
                                          OverlapModel model = OverlapModel::exact)
{
    require(d.commensurate(), "overlap matrix: grid must satisfy dim * delta_phi = 2 pi to be circulant");
    OverlapMatrix w;
    w.dim = d.dim;
    w.first_column.resize(static_cast<std::size_t>(d.dim));
    const BandCoefficients band(p);
    for (int j = 0; j < d.dim; ++j) {
        const double x = j * d.delta_phi;
        w.first_column[j] = model == OverlapModel::exact ? overlap_exact(x, band)
                                                         : overlap_gaussian(wrap_phase(x), p.n, p.b());
    }
    // exact diagonal and exact Hermitian pairing w_{d-j} = conj(w_j)
    w.first_column[0] = 1.0;
    for (int j = 1; j < d.dim; ++j)
        if (2 * j > d.dim)
            w.first_column[j] = std::conj(w.first_column[d.dim - j]);
        else if (2 * j == d.dim)
            w.first_column[j] = w.first_column[j].real();
    return w;
}

// Unitary DFT, F_{lm} = e^{2 pi i l m/d}/sqrt(d).
inline ComplexMatrix dft_matrix(int d)
{
    ComplexMatrix f(d, d);
    const double norm = 1.0 / std::sqrt(double(d));
    for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m)
            f(l, m) = std::polar(norm, 2.0 * pi * double((long(l) * m) % d) / d);
    return f;
}

struct SubspaceSpectrum {
    std::vector<double> eigenvalues;        // Lambda_k = sqrt(d) (F w)_k
    std::vector<double> significances;      // sqrt(Lambda_k / Lambda_max)
    std::vector<double> gaussian_model;     // alias-summed Gaussian eigenvalue model per DFT bin
    double d_eff = 0.0;
    double d_eff_model = 0.0;
    double formula_deff1 = 0.0;
    double formula_deff = 0.0;
    double max_imag_residue = 0.0;          // max |Im Lambda_k| / Lambda_max before truncation
    bool indefinite = false;                // some Lambda_k < -1e-10 Lambda_max
    int peak_index = 0;
    int model_peak_index = 0;
};

inline std::vector<double> gaussian_eigenvalue_model(int d, long n, double b)
{
    const double amp = 2.0 * d / pi * std::sqrt(b / double(n));
    const double c = 4.0 * b / (pi * double(n));
    const double half_n = 0.5 * double(n);
    const double reach = 8.0 / std::sqrt(c);   // exponent below -64 beyond this
    std::vector<double> model(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
        const long jlo = static_cast<long>(std::floor((-half_n - reach - k) / d));
        const long jhi = static_cast<long>(std::ceil((-half_n + reach - k) / d));
        for (long j = jlo; j <= jhi; ++j) {
            const double x = double(k) + double(j) * d + half_n;
            model[k] += amp * std::exp(-c * x * x);
        }
    }
    return model;
}

inline SubspaceSpectrum circulant_spectrum(const OverlapMatrix& w, long n, double b)
{
    require(w.dim >= 2, "circulant_spectrum: dim must be >= 2");
    const int d = w.dim;
    SubspaceSpectrum s;
    std::vector<cplx> lam(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        cplx acc = 0.0;
        for (int m = 0; m < d; ++m)
            acc += w.first_column[m] * std::polar(1.0, 2.0 * pi * double((long(k) * m) % d) / d);
        lam[k] = acc;
    }
    double lmax = 0.0;
    for (int k = 0; k < d; ++k)
        if (lam[k].real() > lmax) {
            lmax = lam[k].real();
            s.peak_index = k;
        }
    if (!(lmax > 0))
        throw NumericalError("circulant_spectrum: no positive eigenvalue");
    for (int k = 0; k < d; ++k) {
        s.max_imag_residue = std::max(s.max_imag_residue, std::abs(lam[k].imag()) / lmax);
        s.eigenvalues.push_back(lam[k].real());
        if (lam[k].real() < -1e-10 * lmax)
            s.indefinite = true;
        const double sk = std::sqrt(std::max(lam[k].real(), 0.0) / lmax);
        s.significances.push_back(k == s.peak_index ? 1.0 : sk);
        s.d_eff += s.significances.back();
    }
    s.gaussian_model = gaussian_eigenvalue_model(d, n, b);
    const auto mit = std::max_element(s.gaussian_model.begin(), s.gaussian_model.end());
    s.model_peak_index = static_cast<int>(mit - s.gaussian_model.begin());
    for (double m : s.gaussian_model)
        s.d_eff_model += std::sqrt(m / *mit);
    s.formula_deff1 = formula_deff1(n, b);
    s.formula_deff = formula_deff(n, b);
    return s;
}

inline SubspaceSpectrum circulant_spectrum(const Discretization& d, const MaterialParams& p,
                                           OverlapModel model = OverlapModel::exact)
{
    return circulant_spectrum(build_overlap_matrix(d, p, model), p.n, p.b());
}

// E = (W^T)^{-1/2} built from the DFT diagonalisation W = F diag(L) F^dag, so that conj(E) W E^T = I.
inline ComplexMatrix orthonormalize(const OverlapMatrix& w)
{
    const int d = w.dim;
    const ComplexMatrix f = dft_matrix(d);
    // W F = F diag(L) with L_k = sum_j w_j e^{-2 pi i j k/d}
    RealVector lam(d);
    for (int k = 0; k < d; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < d; ++j)
            acc += w.first_column[j] * std::polar(1.0, -2.0 * pi * double((long(j) * k) % d) / d);
        lam[k] = acc.real();
    }
    const double lmax = lam.maxCoeff();
    const double floor = 1e-13 * lmax;
    int rank = 0;
    for (int k = 0; k < d; ++k)
        rank += lam[k] > floor;
    if (rank < d)
        throw NumericalError("orthonormalize: overlap matrix ill-conditioned, effective rank " +
                             std::to_string(rank) + " of " + std::to_string(d));
    const RealVector inv_sqrt = lam.array().rsqrt();
    const ComplexMatrix w_inv_sqrt = f * inv_sqrt.cast<cplx>().asDiagonal() * f.adjoint();
    return w_inv_sqrt.transpose();
}

} // namespace bcsq
