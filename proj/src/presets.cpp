#include "presets.hpp"

#include <cmath>

#include "snapshot.hpp"

namespace chemoflow {

State make_blob_state(const SpectralGrid& grid, double u_amp) {
    Field n(grid), c(grid);
    VectorField u;
    u.x = Field(grid);
    u.y = Field(grid);

    // sigma = L/32 keeps the density away from the period boundary
    const double sigma = grid.length / 32.0;
    const double cx = 0.5 * grid.length, cy = 0.5 * grid.length;
    const double k0 = 2.0 * kTwoPi / grid.length;  // two Taylor-Green cells per side
    for (int iy = 0; iy < grid.n; ++iy) {
        const double y = iy * grid.dx();
        for (int ix = 0; ix < grid.n; ++ix) {
            const double x = ix * grid.dx();
            const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            n.at(ix, iy) = 0.8 * std::exp(-r2 / (2.0 * sigma * sigma));
            c.at(ix, iy) = 1.0;
            u.x.at(ix, iy) = -u_amp * std::cos(k0 * x) * std::sin(k0 * y);
            u.y.at(ix, iy) = u_amp * std::sin(k0 * x) * std::cos(k0 * y);
        }
    }
    State s = make_state(n, c, u);
    dealias_inplace(s.n);
    dealias_inplace(s.c);
    dealias_inplace(s.u);
    return s;
}

State make_uniform_state(const SpectralGrid& grid, double n0, double c0) {
    Field n(grid), c(grid);
    VectorField u;
    u.x = Field(grid);
    u.y = Field(grid);
    for (auto& v : n.v)
        v = n0;
    for (auto& v : c.v)
        v = c0;
    return make_state(n, c, u);
}

State make_single_mode_state(const SpectralGrid& grid, double amp) {
    Field n(grid), c(grid);
    VectorField u;
    u.x = Field(grid);
    u.y = Field(grid);
    for (int iy = 0; iy < grid.n; ++iy) {
        const double y = iy * grid.dx();
        for (int ix = 0; ix < grid.n; ++ix)
            u.x.at(ix, iy) = amp * std::sin(kTwoPi * y / grid.length);
    }
    return make_state(n, c, u);
}

State make_preset_state(const RunConfig& cfg, const SpectralGrid& grid) {
    if (!cfg.snapshot_path.empty()) {
        const Snapshot snap = read_snapshot(cfg.snapshot_path);
        require(snap.grid == grid || (snap.grid.n == grid.n && snap.grid.length == grid.length),
                ErrorCode::Config, "initial.snapshot grid does not match grid.n/grid.length");
        return state_from_snapshot(snap);
    }
    if (cfg.preset == "blob")
        return make_blob_state(grid, cfg.initial_u_amp);
    if (cfg.preset == "uniform")
        return make_uniform_state(grid, cfg.initial_n0, cfg.initial_c0);
    if (cfg.preset == "single-mode")
        return make_single_mode_state(grid, cfg.initial_u_amp);
    throw Error(ErrorCode::Config, "unknown preset '" + cfg.preset + "'");
}

}  // namespace chemoflow
