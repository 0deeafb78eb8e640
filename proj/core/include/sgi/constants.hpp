#pragma once

#include <numbers>

namespace sgi::constants {

// CODATA values, fixed so every run is reproducible bit for bit.
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double boltzmann = 1.380649e-23;        // J / K
inline constexpr double flux_quantum = 2.067833848e-15;  // Wb
inline constexpr double bohr_magneton = 9.274e-24;       // J / T
inline constexpr double vacuum_permeability = 1.25663706212e-6;  // N / A^2

inline constexpr double pi = std::numbers::pi;

}  // namespace sgi::constants
