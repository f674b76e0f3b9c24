#include "noise.hpp"

#include <cmath>

#include "philox.hpp"

namespace chemoflow {

NoiseModel make_noise_model(int k_modes, double lambda, uint64_t seed) {
    require(k_modes >= 1, ErrorCode::InvalidArgument, "noise: k_modes must be >= 1");
    require(lambda >= 0.0 && std::isfinite(lambda), ErrorCode::InvalidArgument,
            "noise: lambda must be finite and nonnegative");
    NoiseModel m;
    m.k_modes = k_modes;
    m.lambda = lambda;
    m.seed = seed;
    m.weights.assign(static_cast<std::size_t>(k_modes), lambda / std::sqrt(static_cast<double>(k_modes)));
    return m;
}

WienerIncrement sample_increments(const NoiseModel& model, long step, double dt) {
    require(dt > 0.0, ErrorCode::InvalidArgument, "sample_increments: dt must be positive");
    WienerIncrement out;
    out.step_index = step;
    out.values.resize(static_cast<std::size_t>(model.k_modes));
    const double root_dt = std::sqrt(dt);
    for (int k = 0; k < model.k_modes; ++k)
        out.values[static_cast<std::size_t>(k)] =
            root_dt * philox_normal(model.seed, static_cast<uint64_t>(step), static_cast<uint64_t>(k));
    return out;
}

double scalar_increment(const NoiseModel& model, const WienerIncrement& dw) {
    require(dw.values.size() == model.weights.size(), ErrorCode::InvalidArgument,
            "scalar_increment: increment does not match model");
    double g = 0.0;
    for (std::size_t k = 0; k < model.weights.size(); ++k)
        g += model.weights[k] * dw.values[k];
    return g;
}

SpectralVectorField apply_noise(const SpectralVectorField& u, const NoiseModel& model,
                                const WienerIncrement& dw) {
    const double g = scalar_increment(model, dw);
    SpectralVectorField out = u;
    for (auto& c : out.x.c)
        c *= g;
    for (auto& c : out.y.c)
        c *= g;
    return helmholtz_project(std::move(out));
}

}  // namespace chemoflow
