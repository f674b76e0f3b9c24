#pragma once

// K-mode truncation of the cylindrical Wiener process and the diagonal
// multiplicative noise f(t,u) = lambda u acting on the momentum equation.
// Increments come from a counter-based generator keyed by (seed, step, k), so
// coupled runs reproduce a bit-identical path by sharing (seed, step) and
// ensembles decorrelate by offsetting the seed.

#include <cstdint>
#include <vector>

#include "spectral.hpp"

namespace chemoflow {

struct NoiseModel {
    int k_modes = 8;
    double lambda = 0.0;
    uint64_t seed = 12345;
    std::vector<double> weights;  // weights[k] = lambda / sqrt(K) unless overridden
};

NoiseModel make_noise_model(int k_modes, double lambda, uint64_t seed);

struct WienerIncrement {
    long step_index = 0;
    std::vector<double> values;  // N(0, dt), independent across (k, step)
};

WienerIncrement sample_increments(const NoiseModel& model, long step, double dt);

// P(sum_k weights_k u dW_k) = u * (sum_k weights_k dW_k), projected.
SpectralVectorField apply_noise(const SpectralVectorField& u, const NoiseModel& model,
                                const WienerIncrement& dw);

// sum_k weights_k dW_k, the scalar the diagonal structure collapses to.
double scalar_increment(const NoiseModel& model, const WienerIncrement& dw);

}  // namespace chemoflow
