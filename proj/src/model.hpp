#pragma once

// State (n, c, u), the gravitational potential, the theta_R cutoff and the
// assembly of the tendency for all three system layers:
//
//   limit system        eps, k, R all off,
//   mollified system    eps on: chemotaxis flux, consumption and buoyancy
//                       see mollified partners,
//   truncated system    k, R on: Friedrichs band limitation around the
//                       advection/forcing blocks plus the W^{1,inf} cutoff
//                       in front of them.
//
// Band policy on the torus: the sharp annulus 1/k <= |xi| <= k is applied to
// u only; n and c get the low-pass band |xi| <= k so the mean mode, which
// carries the total mass, survives truncation. strict_annulus restores the
// literal annulus on all three components.

#include <optional>

#include "spectral.hpp"

namespace chemoflow {

struct RegularizationParams {
    std::optional<double> eps;     // mollifier width
    std::optional<double> k_band;  // Friedrichs band edge, cycles per unit length
    std::optional<double> r_cut;   // cutoff level for ||u||_{W^{1,inf}}
    bool strict_annulus = false;
};

struct Potential {
    Field phi;
    VectorField grad_phi;
};

// phi = g L/(2 pi) sin(2 pi y / L), so ||grad phi||_inf = g.
Potential make_sine_potential(const SpectralGrid& g, double strength);
Potential make_potential(const Field& phi);

struct State {
    SpectralField n, c;
    SpectralVectorField u;

    const SpectralGrid& grid() const { return n.grid; }
};

struct Tendency {
    SpectralField dn, dc;
    SpectralVectorField du;
};

State make_state(const Field& n, const Field& c, const VectorField& u);
bool state_finite(const State& s);

// C-infinity cutoff: 1 on [0,R], 0 on [2R,inf), monotone; theta_R(3R/2) = 1/2
// exactly by symmetry of the transition.
double theta_cutoff(double x, double R);

// max over components of (||f||_inf + ||grad f||_inf), by grid max.
double w1inf_norm(const State& s);

// dealias(u . grad f), pseudo-spectral.
SpectralField transport(const SpectralVectorField& u, const SpectralField& f);

// F^eps block: dn = -div(n (grad c * rho_eps)) + n - n^2, dc = -c (n * rho_eps),
// du = P((n grad phi) * rho_eps). eps off makes every convolution the identity.
Tendency forcing_terms(const State& s, const RegularizationParams& params, const Potential& pot);

// Full tendency of the active layer, diffusion included.
Tendency rhs(const State& s, const RegularizationParams& params, const Potential& pot, double alpha);

// Tendency of v = curl u, mirroring the layer structure of the momentum
// equation; diagnostics cross-check only.
SpectralField vorticity_rhs(const State& s, const Potential& pot, const RegularizationParams& params,
                            double alpha);

// Layer helpers shared with the integrator.
SpectralField apply_band_scalar(const SpectralField& f, const RegularizationParams& params);
SpectralVectorField apply_band_velocity(const SpectralVectorField& u, const RegularizationParams& params);
double cutoff_factor(const State& s, const RegularizationParams& params);
SpectralField apply_mollifier(const SpectralField& f, const RegularizationParams& params);

}  // namespace chemoflow
