#pragma once

// Pathwise-uniqueness experiments: two solutions advanced in lockstep on a
// bit-identical Brownian path, tracking the difference functionals
//
//   E(t)      = ||(n_d, c_d, u_d, grad c_d, v_d)||_L2^2
//   E~(t)     = same with (-Delta)^{-1/8} v_d in place of v_d
//   F^alpha   = ||(grad n_d, grad c_d, (-Delta)^{a/2} u_d, Delta c_d,
//                 (-Delta)^{a/2} v_d)||_L2^2
//
// together with the Gronwall coefficient built from the two solutions' norms
// (H for alpha > 1/2, G for alpha = 1/2). The coefficient feeds the
// exponential-envelope fit; it is never asserted against an absolute value.

#include "integrator.hpp"

namespace chemoflow {

struct CouplingRecord {
    double t = 0.0;
    double E = 0.0;
    double E_tilde = 0.0;
    double F_alpha = 0.0;
    double gronwall_H = 0.0;
};

struct CouplingResult {
    std::vector<CouplingRecord> records;
    State final1, final2;
    // sup-in-time solution norms entering the stopping-time definition, for
    // reporting against the R of the envelope fit
    double max_l2_n = 0.0;
    double max_h1_c = 0.0;
    double max_l2_u = 0.0;
};

double difference_energy(const State& a, const State& b);        // E
double difference_energy_tilde(const State& a, const State& b);  // E~
double difference_dissipation(const State& a, const State& b, double alpha);

double gronwall_coefficient(const State& s1, const State& s2, double alpha);

CouplingResult coupled_run(const State& init1, const State& init2, const SolverConfig& cfg,
                           const Potential& pot);

// Adds amplitude times one divergence-free velocity mode.
State perturb_velocity_mode(const State& s, double amplitude, int mode_x = 1, int mode_y = 2);

struct ExponentialFit {
    double rate = 0.0;
    double log_intercept = 0.0;
    double r_squared = 0.0;
};

// Least squares of ln(values) against t, over t >= t_min and values > 0.
ExponentialFit fit_exponential(const std::vector<double>& times, const std::vector<double>& values,
                               double t_min);

}  // namespace chemoflow
