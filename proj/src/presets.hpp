#pragma once

// Named initial states.
//
//   blob         Gaussian cell density centered in the box, uniform chemical,
//                Taylor-Green velocity. The canonical regression scenario.
//   uniform      spatially constant n0, c0, zero velocity (ODE oracles).
//   single-mode  zero n, c and one divergence-free shear mode
//                u = (amp sin(2 pi y/L), 0).

#include "config.hpp"
#include "model.hpp"

namespace chemoflow {

State make_preset_state(const RunConfig& cfg, const SpectralGrid& grid);

State make_blob_state(const SpectralGrid& grid, double u_amp);
State make_uniform_state(const SpectralGrid& grid, double n0, double c0);
State make_single_mode_state(const SpectralGrid& grid, double amp);

}  // namespace chemoflow
