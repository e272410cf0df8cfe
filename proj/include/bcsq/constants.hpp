#pragma once

// CODATA 2018 exact / recommended values, SI.
namespace bcsq::constants {

inline constexpr double h = 6.62607015e-34;          // J s
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double e = 1.602176634e-19;         // C
inline constexpr double m_e = 9.1093837015e-31;      // kg
inline constexpr double mu0 = 1.25663706212e-6;      // N A^-2
inline constexpr double phi0 = h / (2.0 * e);        // superconducting flux quantum, Wb
inline constexpr double eV = e;                      // J per eV
inline constexpr double hbar_eVs = hbar / e;         // eV s
inline constexpr double h_eVs = h / e;               // eV s

} // namespace bcsq::constants
