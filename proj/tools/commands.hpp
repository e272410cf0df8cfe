#pragma once

// One function per CLI subcommand. Each takes a config already merged over its defaults and
// returns a table; formatting and file handling live in main.cpp.

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <bcsq/bcsq.hpp>

#include "config.hpp"

namespace bcsq::cli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;   // NaN marks an empty field

    void add(std::vector<double> row)
    {
        require(row.size() == columns.size(), "table: row width does not match the header");
        rows.push_back(std::move(row));
    }
};

inline constexpr double blank = std::numeric_limits<double>::quiet_NaN();

// 12 significant digits, '.' decimal, no negative zero
inline std::string format_number(double x)
{
    if (std::isnan(x))
        return {};
    if (x == 0.0)
        return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string to_csv(const Table& t)
{
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out += (c ? "," : "") + t.columns[c];
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

// JSON mirrors the CSV: an array of records, numbers rounded through the same 12-digit text.
inline std::string to_json(const Table& t)
{
    json arr = json::array();
    for (const auto& row : t.rows) {
        json rec = json::object();
        for (std::size_t c = 0; c < row.size(); ++c)
            rec[t.columns[c]] = std::isnan(row[c]) ? json(nullptr) : json(std::stod(format_number(row[c])));
        arr.push_back(rec);
    }
    return arr.dump(1) + "\n";
}

namespace detail {

inline std::vector<double> linspace(double a, double b, long points)
{
    require(points >= 2, "sweep needs at least 2 points");
    std::vector<double> v(static_cast<std::size_t>(points));
    for (long i = 0; i < points; ++i)
        v[i] = a + (b - a) * double(i) / double(points - 1);
    return v;
}

inline std::vector<double> logspace(double a, double b, long points)
{
    require(a > 0 && b > a, "log sweep needs 0 < min < max");
    auto v = linspace(std::log(a), std::log(b), points);
    for (auto& x : v)
        x = std::exp(x);
    return v;
}

inline MaterialParams material_nb(const json& cfg)
{
    const long n = get_integer(cfg, "material", "n");
    const double b = get_number(cfg, "material", "b");
    require(n >= 2, "material.n must be >= 2");
    require(b > 1, "material.b must exceed 1");
    return MaterialParams::from_b(n, b);
}

inline BandConvention convention(const json& cfg, const std::string& sec)
{
    const std::string c = get_string(cfg, sec, "convention");
    if (c == "kinetic")
        return BandConvention::kinetic;
    if (c == "energy")
        return BandConvention::energy;
    throw ValidationError(sec + ".convention must be \"kinetic\" or \"energy\"");
}

} // namespace detail

// ---- overlap: W(phi) exact and Gaussian

inline json overlap_defaults()
{
    return {{"material", {{"n", 1000}, {"b", 10.0}}},
            {"overlap", {{"phi_min", -1.0}, {"phi_max", 1.0}, {"points", 401}}}};
}

inline Table run_overlap(const json& cfg, unsigned jobs)
{
    const auto p = detail::material_nb(cfg);
    const auto phis = detail::linspace(get_number(cfg, "overlap", "phi_min"), get_number(cfg, "overlap", "phi_max"),
                                       get_integer(cfg, "overlap", "points"));
    const BandCoefficients band(p);
    std::vector<std::vector<double>> rows(phis.size());
    parallel_for(phis.size(), jobs, [&](std::size_t i) {
        const cplx w = overlap_exact(phis[i], band);
        rows[i] = {phis[i], w.real(), w.imag(), std::abs(w), std::abs(overlap_gaussian(phis[i], p.n, p.b()))};
    });
    Table t{{"phi", "re_W", "im_W", "abs_W", "abs_W_gauss"}, {}};
    for (auto& r : rows)
        t.add(std::move(r));
    return t;
}

// ---- subspace: circulant eigenvalues and effective dimension

inline json subspace_defaults()
{
    return {{"material", {{"n", 1000}, {"b", 10.0}}},
            {"subspace", {{"dims", {80, 160}}, {"model", "exact"}}}};
}

inline Table run_subspace(const json& cfg, unsigned jobs)
{
    const auto p = detail::material_nb(cfg);
    const std::string model_name = get_string(cfg, "subspace", "model");
    if (model_name != "exact" && model_name != "gaussian")
        throw ValidationError("subspace.model must be \"exact\" or \"gaussian\"");
    const auto model = model_name == "exact" ? OverlapModel::exact : OverlapModel::gaussian;
    std::vector<int> dims;
    for (double d : get_numbers(cfg, "subspace", "dims")) {
        if (d != std::floor(d) || d < 2 || d > 4096)
            throw ValidationError("subspace.dims entries must be integers in [2, 4096]");
        dims.push_back(static_cast<int>(d));
    }
    std::vector<SubspaceSpectrum> spectra(dims.size());
    parallel_for(dims.size(), jobs, [&](std::size_t i) {
        spectra[i] = circulant_spectrum(Discretization::from_dim(p, dims[i]), p, model);
    });
    Table t{{"dim", "k", "lambda", "lambda_model", "significance", "d_eff", "d_eff_model", "d_eff_formula"}, {}};
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const auto& s = spectra[i];
        for (int k = 0; k < dims[i]; ++k)
            t.add({double(dims[i]), double(k), s.eigenvalues[k], s.gaussian_model[k], s.significances[k], s.d_eff,
                   s.d_eff_model, s.formula_deff});
    }
    return t;
}

// ---- proj-error: K_n(phi) and its continuum mean

inline json proj_error_defaults()
{
    return {{"material", {{"n", 1000}, {"b", 10.0}}},
            {"projection", {{"alpha_ratios", {1.0, 2.0}}, {"points", 401}}}};
}

inline Table run_proj_error(const json& cfg, unsigned jobs)
{
    const auto p = detail::material_nb(cfg);
    const long points = get_integer(cfg, "projection", "points");
    require(points >= 2, "projection.points must be >= 2");
    const BandCoefficients band(p);
    Table t{{"alpha_ratio", "phi", "k_n", "k_n_mean", "distance_bound"}, {}};
    for (double ratio : get_numbers(cfg, "projection", "alpha_ratios")) {
        const auto d = discretize(p, ratio);
        std::vector<ProjectionRecord> recs(static_cast<std::size_t>(points));
        std::vector<double> phis(recs.size());
        for (long i = 0; i < points; ++i)
            phis[i] = -pi + 2.0 * pi * double(i) / double(points);
        parallel_for(recs.size(), jobs, [&](std::size_t i) { recs[i] = completeness_and_projection(d, band, phis[i]); });
        for (std::size_t i = 0; i < recs.size(); ++i)
            t.add({ratio, phis[i], recs[i].k_n, recs[i].k_n_mean, recs[i].distance_bound});
    }
    return t;
}

// ---- operators: phase-number commutator elements

inline json operators_defaults()
{
    return {{"operators", {{"n", 1000000}, {"dim", 8}, {"phi0", 0.0}}}};
}

inline Table run_operators(const json& cfg, unsigned)
{
    const long n = get_integer(cfg, "operators", "n");
    const long dim = get_integer(cfg, "operators", "dim");
    require(n >= 2, "operators.n must be >= 2");
    require(dim >= 2 && dim <= 1024, "operators.dim must lie in [2, 1024]");
    const auto ops = build_operators(static_cast<int>(dim), n, get_number(cfg, "operators", "phi0"));
    const auto rec = commutator(ops);
    const double alpha = ops.delta_phi * std::sqrt(double(n)) / (2.0 * pi);
    Table t{{"N", "Np", "re_comm", "im_comm", "re_closed", "im_closed", "re_literal", "im_literal"}, {}};
    for (int a = 0; a < ops.dim; ++a)
        for (int b = 0; b < ops.dim; ++b) {
            const cplx c = rec.matrix(a, b);
            const cplx ref = commutator_closed_form(ops.labels[a], ops.labels[b], ops.delta_phi, ops.phi0);
            const cplx lit = commutator_closed_form_literal(ops.labels[a], ops.labels[b], n, alpha, ops.phi0);
            t.add({double(ops.labels[a]), double(ops.labels[b]), c.real(), c.imag(), ref.real(), ref.imag(),
                   lit.real(), lit.imag()});
        }
    return t;
}

// ---- island-energy: E(Delta) landscape

inline json island_energy_defaults()
{
    return {{"material", {{"n", 1000}, {"bandwidth", 1.0}, {"coupling", 0.25}}},
            {"island", {{"d_min", 0.05}, {"d_max", 3.0}, {"points", 120}, {"convention", "kinetic"}}}};
}

inline Table run_island_energy(const json& cfg, unsigned jobs)
{
    const long n = get_integer(cfg, "material", "n");
    const double bandwidth = get_number(cfg, "material", "bandwidth");
    const double coupling = get_number(cfg, "material", "coupling");
    require(n >= 2 && bandwidth > 0, "material: need n >= 2 and bandwidth > 0");
    require(coupling > 0 && coupling < 1, "material.coupling must lie in (0,1)");
    const auto conv = detail::convention(cfg, "island");
    const double delta_min = gap_from_coupling(bandwidth, coupling);
    const auto ds = detail::linspace(get_number(cfg, "island", "d_min"), get_number(cfg, "island", "d_max"),
                                     get_integer(cfg, "island", "points"));
    for (double d : ds)
        require(d > 0 && d * delta_min < bandwidth, "island: d range must keep 0 < Delta < bandwidth");
    std::vector<IslandEnergy> es(ds.size());
    parallel_for(ds.size(), jobs, [&](std::size_t i) { es[i] = island_energy(ds[i] * delta_min, n, bandwidth, coupling, conv); });
    Table t{{"gap", "d", "energy_exact", "energy_approx", "energy_approx_literal", "rescaled_exact", "landscape"}, {}};
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& e = es[i];
        t.add({ds[i] * delta_min, ds[i], e.energy_exact, e.energy_approx, e.energy_approx_literal,
               e.energy_exact / std::abs(e.e_min), higgs_landscape(ds[i], coupling)});
    }
    return t;
}

// ---- josephson-integral: I(E0, Delta) and its limits

inline json josephson_defaults()
{
    return {{"josephson", {{"gap", 1.0}, {"x_min", 0.01}, {"x_max", 100.0}, {"points", 30}}}};
}

inline Table run_josephson(const json& cfg, unsigned jobs)
{
    const double gap = get_number(cfg, "josephson", "gap");
    require(gap > 0, "josephson.gap must be positive");
    const auto xs = detail::logspace(get_number(cfg, "josephson", "x_min"), get_number(cfg, "josephson", "x_max"),
                                     get_integer(cfg, "josephson", "points"));
    std::vector<JosephsonIntegral> r(xs.size());
    parallel_for(xs.size(), jobs, [&](std::size_t i) { r[i] = josephson_integral(xs[i] * gap, gap); });
    Table t{{"e0_over_gap", "numeric", "error", "small_e0", "large_e0"}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i)
        t.add({xs[i], r[i].numeric, r[i].error, r[i].small_e0.value_or(blank), r[i].large_e0.value_or(blank)});
    return t;
}

// ---- transmon: CJ spectrum versus offset charge

inline json transmon_defaults()
{
    return {{"circuit", {{"e_c", 1.0}, {"e_j", 1.0}, {"dim", 8}, {"phi0", {0.0, pi}}}},
            {"sweep", {{"n_g_min", -2.0}, {"n_g_max", 2.0}, {"steps", 201}}}};
}

inline Table run_transmon(const json& cfg, unsigned jobs)
{
    CircuitSpec s;
    s.e_c = get_number(cfg, "circuit", "e_c");
    s.e_j = get_number(cfg, "circuit", "e_j");
    const long dim = get_integer(cfg, "circuit", "dim");
    require(dim >= 3 && dim <= 2048, "circuit.dim must lie in [3, 2048] (four levels are reported)");
    s.dim = static_cast<int>(dim);
    s.validate();
    const long steps = get_integer(cfg, "sweep", "steps");
    require(steps >= 2, "sweep.steps must be >= 2");
    Table t{{"n_g", "E0", "E1", "E2", "E3", "phi0"}, {}};
    for (double phi0 : get_numbers(cfg, "circuit", "phi0")) {
        s.phi0 = phi0;
        const auto res = ng_sweep(s, get_number(cfg, "sweep", "n_g_min"), get_number(cfg, "sweep", "n_g_max"),
                                  static_cast<int>(steps), 4, jobs);
        for (std::size_t i = 0; i < res.n_g_values.size(); ++i) {
            const auto row = static_cast<Eigen::Index>(i);
            t.add({res.n_g_values[i], res.levels(row, 0), res.levels(row, 1), res.levels(row, 2), res.levels(row, 3), phi0});
        }
    }
    return t;
}

// ---- lcj: inductively shunted junction on extended phase windows

inline json lcj_defaults()
{
    return {{"circuit", {{"e_c", 1.0}, {"e_j", 0.0}, {"e_l", 0.02}, {"n_g", 0.0}, {"dim", 64},
                         {"phase_windows", {1, 2, 4}}, {"levels", 4}, {"m_max", 0}}}};
}

inline Table run_lcj(const json& cfg, unsigned jobs)
{
    CircuitSpec s;
    s.e_c = get_number(cfg, "circuit", "e_c");
    s.e_j = get_number(cfg, "circuit", "e_j");
    s.e_l = get_number(cfg, "circuit", "e_l");
    s.n_g = get_number(cfg, "circuit", "n_g");
    const long dim = get_integer(cfg, "circuit", "dim");
    const long levels = get_integer(cfg, "circuit", "levels");
    const long m_max = get_integer(cfg, "circuit", "m_max");
    require(dim >= 2 && dim <= 512, "circuit.dim must lie in [2, 512]");
    require(m_max >= 0, "circuit.m_max must be >= 0");
    s.dim = static_cast<int>(dim);
    s.m_max = static_cast<int>(m_max);
    std::vector<int> windows;
    for (double m : get_numbers(cfg, "circuit", "phase_windows")) {
        if (m != std::floor(m) || m < 1 || m * double(dim) > 2048)
            throw ValidationError("circuit.phase_windows entries must be integers >= 1 with dim * M <= 2048");
        windows.push_back(static_cast<int>(m));
    }
    require(levels >= 1 && levels <= dim, "circuit.levels must lie in [1, dim]");
    s.validate();
    std::vector<std::vector<double>> ev(windows.size());
    parallel_for(windows.size(), jobs, [&](std::size_t i) {
        CircuitSpec w = s;
        w.phase_window = windows[i];
        ev[i] = spectrum(build_lcj(w), static_cast<int>(levels));
    });
    const double omega = std::sqrt(2.0 * s.e_c * s.e_l);
    Table t{{"phase_window", "level", "energy", "harmonic"}, {}};
    for (std::size_t i = 0; i < windows.size(); ++i)
        for (long m = 0; m < levels; ++m)
            t.add({double(windows[i]), double(m), ev[i][m], s.e_j == 0 ? omega * (m + 0.5) : blank});
    return t;
}

// ---- inductor: wire inductances and audits versus r_w/lambda_L

inline json inductor_defaults()
{
    return {{"wire", {{"electron_density", 1e29}, {"length", 1e-6}, {"cutoff_ratio", 10.0}, {"current", 1e-6},
                      {"ratios", {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}}}}};
}

inline Table run_inductor(const json& cfg, unsigned jobs)
{
    const double density = get_number(cfg, "wire", "electron_density");
    const double length = get_number(cfg, "wire", "length");
    const double cutoff = get_number(cfg, "wire", "cutoff_ratio");
    const double current = get_number(cfg, "wire", "current");
    require(density > 0 && length > 0, "wire: density and length must be positive");
    require(cutoff > 1, "wire.cutoff_ratio must exceed 1");
    require(current != 0, "wire.current must be non-zero");
    const auto ratios = get_numbers(cfg, "wire", "ratios");
    for (double r : ratios)
        require(r > 0, "wire.ratios must be positive");
    std::vector<std::vector<double>> rows(ratios.size());
    parallel_for(ratios.size(), jobs, [&](std::size_t i) {
        const auto g = WireGeometry::from_ratio(ratios[i], length, density, cutoff);
        const auto l = inductances(g);
        const auto a = flux_energy_audit(g, current);
        rows[i] = {ratios[i],           g.penetration_depth(), g.radius,          l.kinetic_density,
                   l.geometric_density, l.constitutive_exact,  l.constitutive_asymptotic, l.kinetic,
                   l.geometric,         l.total,               a.energy_kinetic,  a.energy_field_int,
                   a.inductance_flux,   a.inductance_energy};
    });
    Table t{{"ratio", "lambda_L", "radius", "kinetic_density", "geometric_density", "constitutive_exact",
             "constitutive_asymptotic", "L_K", "L_G", "L", "energy_kinetic", "energy_field_int", "L_flux", "L_energy"},
            {}};
    for (auto& r : rows)
        t.add(std::move(r));
    return t;
}

// ---- wkb-ej: E_J versus fudge factor

inline json wkb_defaults()
{
    const AluminiumPreset al;
    return {{"wkb", {{"barrier_height", al.barrier_height}, {"barrier_width", al.barrier_width},
                     {"well_width", al.well_width}, {"effective_mass_ratio", al.effective_mass_ratio},
                     {"fermi_velocity", al.fermi_velocity}}},
            {"junction", {{"gap", al.gap}, {"bandwidth", al.bandwidth}, {"junction_area", al.junction_area},
                          {"lattice_constant", al.lattice_constant}, {"measured_e_j", al.measured_e_j}}},
            {"sweep", {{"xi_min", 1.0}, {"xi_max", 2.2}, {"steps", 121}}}};
}

inline AluminiumPreset preset_from(const json& cfg)
{
    AluminiumPreset al;
    al.barrier_height = get_number(cfg, "wkb", "barrier_height");
    al.barrier_width = get_number(cfg, "wkb", "barrier_width");
    al.well_width = get_number(cfg, "wkb", "well_width");
    al.effective_mass_ratio = get_number(cfg, "wkb", "effective_mass_ratio");
    al.fermi_velocity = get_number(cfg, "wkb", "fermi_velocity");
    al.gap = get_number(cfg, "junction", "gap");
    al.bandwidth = get_number(cfg, "junction", "bandwidth");
    al.junction_area = get_number(cfg, "junction", "junction_area");
    al.lattice_constant = get_number(cfg, "junction", "lattice_constant");
    al.measured_e_j = get_number(cfg, "junction", "measured_e_j");
    require(al.junction_area > 0 && al.lattice_constant > 0, "junction: area and lattice constant must be positive");
    return al;
}

inline Table run_wkb(const json& cfg, unsigned)
{
    const auto al = preset_from(cfg);
    const auto j = al.junction();
    j.validate();
    const auto table = ej_vs_xi(al.wkb(1.0), j, get_number(cfg, "sweep", "xi_min"), get_number(cfg, "sweep", "xi_max"),
                                static_cast<int>(get_integer(cfg, "sweep", "steps")));
    Table t{{"xi", "transmission", "t", "E_J", "measured_E_J"}, {}};
    for (const auto& row : table)
        t.add({row.xi, tunnel_element(al.wkb(row.xi)).amplitude, row.t, row.e_j, al.measured_e_j});
    return t;
}

// ---- higgs: rescaled Mexican-hat landscape

inline json higgs_defaults()
{
    return {{"higgs", {{"lambda", 0.25}, {"d_min", 0.02}, {"d_max", 1.6}, {"points", 317}}}};
}

inline Table run_higgs(const json& cfg, unsigned)
{
    const double lambda = get_number(cfg, "higgs", "lambda");
    require(lambda > 0 && lambda < 1, "higgs.lambda must lie in (0,1)");
    const auto ds = detail::linspace(get_number(cfg, "higgs", "d_min"), get_number(cfg, "higgs", "d_max"),
                                     get_integer(cfg, "higgs", "points"));
    Table t{{"d", "landscape", "quadratic"}, {}};
    for (double d : ds) {
        require(d > 0, "higgs: d must be positive");
        t.add({d, higgs_landscape(d, lambda), higgs_quadratic(d, lambda)});
    }
    return t;
}

// ---- registry

struct Command {
    std::string name;
    std::string file_stem;   // all-figures output name
    std::string help;
    std::function<json()> defaults;
    std::function<Table(const json&, unsigned)> run;
};

inline const std::vector<Command>& commands()
{
    static const std::vector<Command> list = {
        {"overlap", "overlap", "BCS overlap W(phi), exact product and Gaussian form", overlap_defaults, run_overlap},
        {"subspace", "subspace", "circulant overlap eigenvalues and effective dimension", subspace_defaults, run_subspace},
        {"proj-error", "proj_error", "projection error K_n(phi) and its continuum mean", proj_error_defaults, run_proj_error},
        {"operators", "operators", "phase-number commutator matrix elements", operators_defaults, run_operators},
        {"island-energy", "island_energy", "island ground-state energy versus gap", island_energy_defaults, run_island_energy},
        {"josephson-integral", "josephson_integral", "second-order tunnelling integral I(E0, Delta)", josephson_defaults, run_josephson},
        {"transmon", "transmon", "CJ spectrum versus offset charge", transmon_defaults, run_transmon},
        {"lcj", "lcj", "LCJ levels on extended phase windows", lcj_defaults, run_lcj},
        {"inductor", "inductor", "wire inductances and flux/energy audits", inductor_defaults, run_inductor},
        {"wkb-ej", "wkb_ej", "WKB tunnel element and E_J versus fudge factor", wkb_defaults, run_wkb},
        {"higgs", "higgs", "rescaled Mexican-hat landscape", higgs_defaults, run_higgs},
    };
    return list;
}

inline const Command& find_command(const std::string& name)
{
    for (const auto& c : commands())
        if (c.name == name)
            return c;
    throw ValidationError("unknown subcommand " + name);
}

} // namespace bcsq::cli
