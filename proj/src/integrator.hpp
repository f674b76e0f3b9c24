#pragma once

// Time stepping. One step composes
//
//   1. spectral update  f_hat <- exp(-mu dt) (f_hat + dt N_hat + noise),
//      with mu the diffusion symbol ((2 pi |xi|)^2 for n and c,
//      (2 pi |xi|)^{2 alpha} for u), N the advection/chemotaxis/buoyancy
//      tendency of the active layer, and Euler-Maruyama noise u <- u(1+g)
//      folded into the same factor;
//   2. pointwise reaction flow, integrated exactly over the step:
//      n <- n e^{a}/(1 + n(e^{a} - 1)) with a = theta dt, and
//      c <- c exp(-theta dt (n * rho_eps)).
//
// The exact linear factor removes the stiffness of the dissipation and makes
// single-mode decay exact; the exact reaction flow keeps the scheme first
// order overall (the splitting error is O(dt^2) per step) while the logistic
// and consumption subproblems incur no time-discretization error at all.
// theta is evaluated on the pre-step state. When the Friedrichs layer is on,
// the state is re-truncated after the step and the diffusion factor acts on
// band modes only, matching the truncated system's J_k^2 A^alpha.

#include <functional>

#include "diagnostics.hpp"
#include "noise.hpp"

namespace chemoflow {

struct SolverConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    double alpha = 1.0;
    RegularizationParams params;
    NoiseModel noise;
    long snapshot_every = 0;      // steps; 0 disables snapshots
    long diagnostics_every = 1;   // steps between records
    double delta_floor = 1e-10;   // quartic_c regularizer, scaled by max c0 at run start
};

// Scalar noise increment for a step: sum_k weights_k dW_k. The default
// provider draws from the counter-based generator; refinement studies install
// aggregated providers so every dt level sees the same Brownian path.
using NoiseProvider = std::function<double(long step)>;

NoiseProvider make_noise_provider(const NoiseModel& model, double dt);

State step(const State& s, const SolverConfig& cfg, const Potential& pot, long step_index,
           double noise_scalar);

struct Trajectory {
    std::vector<double> times;
    std::vector<DiagnosticsRecord> records;
    std::vector<double> snapshot_times;
    std::vector<State> snapshots;
    State final_state;
    EventSetProbe omega;  // threshold unset; integrals accumulated at record cadence
};

Trajectory run(const State& initial, const SolverConfig& cfg, const Potential& pot);
Trajectory run(const State& initial, const SolverConfig& cfg, const Potential& pot,
               const NoiseProvider& noise);

enum class RefineAxis { Dt, Eps, KBand, Resolution };

struct RefinePair {
    double level_coarse = 0.0;
    double level_fine = 0.0;
    double diff_l2_n = 0.0;
    double diff_l2_c = 0.0;
    double diff_l2_u = 0.0;
    double diff_l2_total = 0.0;
    double diff_h1_total = 0.0;
};

struct RefineResult {
    RefineAxis axis;
    std::vector<double> levels;
    std::vector<RefinePair> pairs;   // successive levels, coarse vs fine
    double fitted_order = 0.0;       // least-squares slope of log diff vs log level
};

// Shared noise path across levels: same seed everywhere; on the dt axis the
// increments are generated at the finest level and aggregated, which requires
// every level to be an integer multiple of the finest.
RefineResult refine_study(const State& initial, const SolverConfig& cfg, const Potential& pot,
                          RefineAxis axis, const std::vector<double>& levels);

// Spectral restriction/extension between resolutions (band-limited exact).
State resample_state(const State& s, const SpectralGrid& target);

}  // namespace chemoflow
