#pragma once

// Fourier-space operator suite: fractional dissipation, Helmholtz-Leray
// projection, mollification, Friedrichs truncation, differentiation,
// Biot-Savart inversion, dealiasing, norms and pairings.
//
// All operators are diagonal in the mode basis except the projection, which
// acts mode-by-mode on the two velocity components. Everything is a pure
// function of its inputs.

#include "fft.hpp"
#include "grid.hpp"

namespace chemoflow {

// (-Delta)^alpha: multiplier (2 pi |xi|)^{2 alpha}; mode 0 is annihilated.
SpectralField fractional_laplacian(const SpectralField& f, double alpha);

// Leray projection u_hat <- (Id - xi xi^T/|xi|^2) u_hat; mode 0 untouched.
SpectralVectorField helmholtz_project(SpectralVectorField u);

// Sharp annulus cutoff 1/k <= |xi| <= k, |xi| in cycles per unit length.
SpectralField friedrichs_truncate(const SpectralField& f, double k);

// Low-pass band |xi| <= k (keeps the mean mode).
SpectralField low_pass(const SpectralField& f, double k);

// Gaussian mollifier multiplier exp(-eps^2 (2 pi |xi|)^2); unit mass.
SpectralField mollify(const SpectralField& f, double eps);

// Derivatives zero the Nyquist modes (their imaginary multiplier has no
// Hermitian counterpart on an even grid).
SpectralVectorField gradient(const SpectralField& f);
SpectralField divergence(const SpectralVectorField& u);
SpectralField curl2d(const SpectralVectorField& u);  // d1 u2 - d2 u1
SpectralField laplacian(const SpectralField& f);     // == -fractional_laplacian(f, 1)

// Divergence-free u with curl2d(u) = v; requires mean-zero vorticity.
SpectralVectorField biot_savart(const SpectralField& vorticity);

SpectralField dealias(const SpectralField& f);
void dealias_inplace(SpectralField& f);
void dealias_inplace(SpectralVectorField& u);

// L^2 machinery under the series normalization (||f||^2 = L^2 sum |f_hat|^2).
double l2_norm(const SpectralField& f);
double l2_inner(const SpectralField& a, const SpectralField& b);
double l2_norm(const SpectralVectorField& u);
double l2_inner(const SpectralVectorField& a, const SpectralVectorField& b);

// Quadrature-side norms.
double l2_norm(const Field& f);
double lp_norm(const Field& f, double p);  // p = inf accepted via linf_norm
double linf_norm(const Field& f);
double integral(const Field& f);

// ||(-Delta)^{alpha/2} f||_L2, the dissipation pairing of the energy
// estimates: l2_inner(f, fractional_laplacian(f, alpha)) equals its square.
double homogeneous_sobolev_norm(const SpectralField& f, double s);
double homogeneous_sobolev_norm(const SpectralVectorField& u, double s);

double max_divergence_residual(const SpectralVectorField& u);
double hermitian_defect(const SpectralField& f);

// Spectral restriction/extension to another resolution (same L); exact on the
// shared band, new modes zero, Nyquist lines dropped.
SpectralField resample_field(const SpectralField& f, const SpectralGrid& target);

bool all_finite(const SpectralField& f);
bool all_finite(const Field& f);

}  // namespace chemoflow
