#pragma once

// Homogeneous Littlewood-Paley analysis on the torus.
//
// Blocks are indexed by the angular wavenumber kappa = 2*pi*|m|/L. The radial
// cutoff chi is built on the exp(-1/x) transition (see smoothstep.hpp):
//
//   chi(t)  = 1 - smooth_step((t - 3/4) / (7/12)),  so chi = 1 on [0, 3/4],
//             chi = 0 on [4/3, inf), smooth and monotone in between;
//   phi(t)  = chi(t/2) - chi(t),  supported in the annulus 3/4 <= t <= 8/3,
//             with sum_j phi(2^-j t) = 1 for every t > 0 (telescoping).
//
// block j multiplies coefficient m by phi(2^-j kappa(m)). The mean mode is
// excluded automatically (phi(0) = 0); the finite j range is the torus
// surrogate for the sum over all of Z.

#include <utility>
#include <vector>

#include "spectral.hpp"

namespace chemoflow {

double lp_chi(double t);
double lp_phi(double t);

struct DyadicRange {
    int j_min = 0;
    int j_max = 0;
};

// Smallest range such that every block outside is identically zero on g.
DyadicRange dyadic_range(const SpectralGrid& g);

SpectralField dyadic_block(const SpectralField& f, int j);

struct BesovIndex {
    double s = 0.0;
    double p = 2.0;  // integrability; may be INFINITY
    double r = 2.0;  // summation exponent; may be INFINITY
    bool homogeneous = true;
};

// l^r over j of 2^{js} ||block_j f||_{L^p}. The inhomogeneous variant adds the
// mean mode as one extra entry with unit weight (torus convention).
double besov_norm(const SpectralField& f, const BesovIndex& idx);
double besov_norm(const Field& f, const BesovIndex& idx);
double besov_norm(const SpectralVectorField& f, const BesovIndex& idx);  // sum of components

// Bessel potential norm (L^2): L * sqrt(sum (1 + kappa^2)^s |f_hat|^2).
double sobolev_norm(const SpectralField& f, double s);
double sobolev_norm(const Field& f, double s);

enum class BilinearForm {
    TransportGeneral,   // ||f.grad g||_{B^-alpha} <= ||f||_{B^{1-2a+2/p}} ||g||_{B^alpha}
    TransportThreeQuarters,  // alpha = 3/4 companion
    TransportGradInf,   // ||f.grad g||_{B^-1/4} <= ||grad g||_Linf ||f||_{B^{3/4}}
};

// Ratio of the two sides; the empirical constant of the estimate.
double verify_bilinear_estimate(const SpectralVectorField& f, const SpectralField& g, double alpha,
                                double p, double r, BilinearForm form = BilinearForm::TransportGeneral);

// (||(-Delta)^alpha f||_{B^s} / ||f||_{B^{s+2alpha}}, reciprocal).
std::pair<double, double> verify_frac_lap_equiv(const SpectralField& f, double s, double alpha,
                                                double p, double r);

struct BlockNorms {
    int j;
    double l2;
    double lp;
};

std::vector<BlockNorms> block_spectrum(const SpectralField& f, double p);

}  // namespace chemoflow
