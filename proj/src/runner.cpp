#include "runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "csvio.hpp"
#include "lp.hpp"
#include "presets.hpp"
#include "snapshot.hpp"

namespace chemoflow {

namespace {

namespace fs = std::filesystem;

std::string output_path(const RunConfig& cfg, const std::string& suffix) {
    fs::create_directories(cfg.output_directory);
    return (fs::path(cfg.output_directory) / (cfg.output_prefix + suffix)).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

void echo_config(const RunConfig& cfg) {
    write_text(output_path(cfg, "_config.cfg"), canonical_config(cfg));
}

}  // namespace

SpectralGrid grid_from_config(const RunConfig& cfg) {
    return SpectralGrid(cfg.grid_n, cfg.grid_length, cfg.dealias_fraction);
}

SolverConfig solver_from_config(const RunConfig& cfg) {
    SolverConfig s;
    s.dt = cfg.dt;
    s.t_end = cfg.t_end;
    s.alpha = cfg.alpha;
    s.params.eps = cfg.eps;
    s.params.k_band = cfg.k_band;
    s.params.r_cut = cfg.r_cut;
    s.params.strict_annulus = cfg.strict_annulus;
    s.noise = make_noise_model(cfg.noise_k_modes, cfg.noise_lambda, cfg.noise_seed);
    s.snapshot_every = cfg.snapshot_every;
    s.diagnostics_every = cfg.diagnostics_every;
    return s;
}

Potential potential_from_config(const RunConfig& cfg, const SpectralGrid& grid) {
    if (!cfg.potential_file.empty()) {
        const Snapshot snap = read_snapshot(cfg.potential_file);
        require(snap.grid.n == grid.n && snap.grid.length == grid.length, ErrorCode::Config,
                "physics.potential_file grid does not match grid.n/grid.length");
        return make_potential(snap.n);
    }
    return make_sine_potential(grid, cfg.potential_g);
}

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records) {
    std::string out = csv_row(diagnostics_csv_columns());
    for (const auto& r : records) {
        out += csv_row({format_double(r.t), format_double(r.mass_n), format_double(r.l2_n),
                        format_double(r.l3_n_cubed), format_double(r.h1_n), format_double(r.entropy),
                        format_double(r.weighted_moment), format_double(r.mass_c),
                        format_double(r.linf_c), format_double(r.l1_c),
                        format_double(r.grad_sqrt_c_sq), format_double(r.lap_sqrt_c_sq),
                        format_double(r.quartic_c), format_double(r.l2_u),
                        format_double(r.l4_u_fourth), format_double(r.dissipation_u),
                        format_double(r.l2_v), format_double(r.l43_v), format_double(r.halpha_v),
                        format_double(r.min_n), format_double(r.min_c),
                        format_double(r.energy_residual), std::to_string(r.clipped_negative)});
    }
    return out;
}

std::string coupling_csv(const std::vector<CouplingRecord>& records) {
    std::string out = csv_row({"t", "E", "E_tilde", "F_alpha", "gronwall_H"});
    for (const auto& r : records)
        out += csv_row_doubles({r.t, r.E, r.E_tilde, r.F_alpha, r.gronwall_H});
    return out;
}

void drive_run(const RunConfig& cfg) {
    const SpectralGrid grid = grid_from_config(cfg);
    const SolverConfig solver = solver_from_config(cfg);
    const Potential pot = potential_from_config(cfg, grid);
    const State initial = make_preset_state(cfg, grid);

    echo_config(cfg);
    // the quartic_c regularizer, visible next to the CSV it affects
    std::printf("run: quartic delta_floor = %s\n",
                format_double(solver.delta_floor *
                              std::max(1.0, linf_norm(to_physical(initial.c))))
                    .c_str());
    const Trajectory traj = run(initial, solver, pot);
    write_text(output_path(cfg, "_diagnostics.csv"), diagnostics_csv(traj.records));

    for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
        char tag[32];
        std::snprintf(tag, sizeof(tag), "_snap_%06zu.bin", i);
        write_snapshot(output_path(cfg, tag),
                       snapshot_from_state(traj.snapshots[i], traj.snapshot_times[i], cfg.alpha));
    }
    // final state is always persisted for restart/spectrum use
    write_snapshot(output_path(cfg, "_final.bin"),
                   snapshot_from_state(traj.final_state, cfg.t_end, cfg.alpha));
}

void drive_couple(const RunConfig& cfg) {
    const SpectralGrid grid = grid_from_config(cfg);
    const SolverConfig solver = solver_from_config(cfg);
    const Potential pot = potential_from_config(cfg, grid);
    const State init1 = make_preset_state(cfg, grid);
    const State init2 = perturb_velocity_mode(init1, cfg.coupling_perturbation);

    echo_config(cfg);
    const CouplingResult res = coupled_run(init1, init2, solver, pot);
    write_text(output_path(cfg, "_coupling.csv"), coupling_csv(res.records));

    std::vector<double> ts, es;
    for (const auto& r : res.records) {
        ts.push_back(r.t);
        es.push_back(r.E);
    }
    std::printf("coupling: E(0)=%s E(T)=%s\n", format_double(es.front()).c_str(),
                format_double(es.back()).c_str());
    if (cfg.coupling_perturbation > 0.0) {
        std::size_t usable = 0;
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (ts[i] >= 5.0 * cfg.dt && es[i] > 0.0)
                ++usable;
        if (usable >= 3) {
            const ExponentialFit fit = fit_exponential(ts, es, 5.0 * cfg.dt);
            std::printf("coupling: envelope rate=%s r2=%s\n", format_double(fit.rate).c_str(),
                        format_double(fit.r_squared).c_str());
        } else {
            std::printf("coupling: too few records past the startup window for an envelope fit\n");
        }
    }
    // observed solution norms vs. the stopping-time threshold of the estimate
    std::printf("coupling: sup ||n||_L2=%s sup ||c||_H1=%s sup ||u||_L2=%s\n",
                format_double(res.max_l2_n).c_str(), format_double(res.max_h1_c).c_str(),
                format_double(res.max_l2_u).c_str());
}

void drive_spectrum(const RunConfig& cfg, const std::string& snapshot_path, const std::string& field,
                    double p) {
    SpectralField target;
    if (!snapshot_path.empty()) {
        const Snapshot snap = read_snapshot(snapshot_path);
        const State s = state_from_snapshot(snap);
        if (field == "n")
            target = s.n;
        else if (field == "c")
            target = s.c;
        else if (field == "u1")
            target = s.u.x;
        else if (field == "u2")
            target = s.u.y;
        else if (field == "vorticity")
            target = curl2d(s.u);
        else
            throw Error(ErrorCode::Config, "spectrum: unknown field '" + field + "'");
    } else {
        const SpectralGrid grid = grid_from_config(cfg);
        const State s = make_preset_state(cfg, grid);
        if (field == "n")
            target = s.n;
        else if (field == "c")
            target = s.c;
        else if (field == "u1")
            target = s.u.x;
        else if (field == "u2")
            target = s.u.y;
        else if (field == "vorticity")
            target = curl2d(s.u);
        else
            throw Error(ErrorCode::Config, "spectrum: unknown field '" + field + "'");
    }

    std::string out = csv_row({"j", "l2_norm", "lp_norm"});
    for (const BlockNorms& b : block_spectrum(target, p))
        out += csv_row({std::to_string(b.j), format_double(b.l2), format_double(b.lp)});
    write_text(output_path(cfg, "_spectrum.csv"), out);
}

void drive_refine(const RunConfig& cfg, const std::string& axis_name,
                  const std::vector<double>& levels) {
    RefineAxis axis;
    if (axis_name == "dt")
        axis = RefineAxis::Dt;
    else if (axis_name == "eps")
        axis = RefineAxis::Eps;
    else if (axis_name == "k_band")
        axis = RefineAxis::KBand;
    else if (axis_name == "resolution")
        axis = RefineAxis::Resolution;
    else
        throw Error(ErrorCode::Config, "refine: unknown axis '" + axis_name + "'");

    const SpectralGrid grid = grid_from_config(cfg);
    const SolverConfig solver = solver_from_config(cfg);
    const Potential pot = potential_from_config(cfg, grid);
    const State initial = make_preset_state(cfg, grid);

    echo_config(cfg);
    const RefineResult res = refine_study(initial, solver, pot, axis, levels);

    std::string out =
        csv_row({"level_coarse", "level_fine", "diff_l2_n", "diff_l2_c", "diff_l2_u",
                 "diff_l2_total", "diff_h1_total"});
    for (const auto& p : res.pairs)
        out += csv_row_doubles({p.level_coarse, p.level_fine, p.diff_l2_n, p.diff_l2_c, p.diff_l2_u,
                                p.diff_l2_total, p.diff_h1_total});
    write_text(output_path(cfg, "_refine.csv"), out);
    std::printf("refine: axis=%s fitted_order=%s\n", axis_name.c_str(),
                format_double(res.fitted_order).c_str());
}

}  // namespace chemoflow
