#pragma once

// Per-state evaluation of the functionals the a-priori estimates control:
// masses, maximum-principle quantities, the sqrt(c) energy family, the
// entropy, velocity/vorticity norms and the kinetic-energy budget residual.

#include <string>
#include <vector>

#include "model.hpp"

namespace chemoflow {

struct DiagnosticsRecord {
    double t = 0.0;
    double mass_n = 0.0;           // ||n||_L1
    double l2_n = 0.0;
    double l3_n_cubed = 0.0;       // ||n||_L3^3
    double h1_n = 0.0;
    double entropy = 0.0;          // int n ln n
    double weighted_moment = 0.0;  // int |x - center| n
    double mass_c = 0.0;
    double linf_c = 0.0;
    double l1_c = 0.0;
    double grad_sqrt_c_sq = 0.0;   // ||grad sqrt(c)||_L2^2
    double lap_sqrt_c_sq = 0.0;    // ||Delta sqrt(c)||_L2^2
    double quartic_c = 0.0;        // int |grad sqrt(c)|^4 / (c + delta_floor)
    double l2_u = 0.0;
    double l4_u_fourth = 0.0;      // ||u||_L4^4
    double dissipation_u = 0.0;    // ||(-Delta)^{alpha/2} u||_L2^2
    double l2_v = 0.0;
    double l43_v = 0.0;            // ||v||_{L^{4/3}}^{4/3}
    double halpha_v = 0.0;         // ||v||_{H_dot^alpha}
    double min_n = 0.0;
    double min_c = 0.0;
    double energy_residual = 0.0;  // filled by the trajectory driver
    long clipped_negative = 0;     // samples clipped before sqrt/log
};

std::vector<std::string> diagnostics_csv_columns();

DiagnosticsRecord compute_record(const State& s, double t, double alpha, double delta_floor);

// Deterministic part of the Ito balance for (1/2)||u||^2 across one step;
// lambda > 0 nets out the quadratic-variation estimate lambda^2 ||u||^2 dt / 2.
double energy_budget_residual(const State& prev, const State& next, double dt, double alpha,
                              const Potential& pot, const RegularizationParams& params, double lambda);

// Relative L2 error of Delta c - (2 sqrt(c) Delta sqrt(c) + 2 |grad sqrt(c)|^2);
// requires c strictly positive.
double chain_rule_identity_check(const Field& c);

struct EventSetProbe {
    double threshold = 0.0;       // the N of Omega_N
    double int_lap_sqrt_c = 0.0;  // int_0^t ||Delta sqrt(c)||^2
    double int_quartic_c = 0.0;   // int_0^t quartic
    double sup_l4_u_fourth = 0.0;

    bool indicator() const {
        return int_lap_sqrt_c <= threshold && int_quartic_c <= threshold &&
               sup_l4_u_fourth <= threshold;
    }
};

}  // namespace chemoflow
