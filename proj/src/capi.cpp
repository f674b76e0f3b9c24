#include "chemoflow/chemoflow.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "config.hpp"
#include "csvio.hpp"
#include "presets.hpp"
#include "runner.hpp"
#include "snapshot.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error = "no error";

int map_error(const chemoflow::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
        case chemoflow::ErrorCode::Config:
            return CHFL_ERR_CONFIG;
        case chemoflow::ErrorCode::Io:
            return CHFL_ERR_IO;
        case chemoflow::ErrorCode::Diverged:
            return CHFL_ERR_DIVERGED;
        default:
            return CHFL_ERR_INVALID;
    }
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return CHFL_OK;
    } catch (const chemoflow::Error& e) {
        return map_error(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CHFL_ERR_INVALID;
    }
}

int require_arg(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return CHFL_ERR_INVALID;
    }
    return CHFL_OK;
}

}  // namespace

struct chfl_config {
    chemoflow::RunConfig cfg;
};

struct chfl_sim {
    chemoflow::RunConfig cfg;
    chemoflow::SolverConfig solver;
    chemoflow::Potential pot;
    chemoflow::State state;
    long step_index = 0;
    double delta_floor = 1e-10;
};

extern "C" {

const char* chfl_version(void) {
    return "1.0.0";
}

const char* chfl_last_error(void) {
    return g_last_error.c_str();
}

int chfl_config_defaults(chfl_config** out) {
    if (int rc = require_arg(out != nullptr, "chfl_config_defaults: out is NULL"))
        return rc;
    return guarded([&] { *out = new chfl_config{chemoflow::RunConfig{}}; });
}

int chfl_config_load(const char* path, chfl_config** out) {
    if (int rc = require_arg(path != nullptr && out != nullptr, "chfl_config_load: NULL argument"))
        return rc;
    return guarded([&] { *out = new chfl_config{chemoflow::parse_config_file(path)}; });
}

int chfl_config_set(chfl_config* cfg, const char* key, const char* value) {
    if (int rc = require_arg(cfg && key && value, "chfl_config_set: NULL argument"))
        return rc;
    return guarded([&] { chemoflow::apply_config_entry(cfg->cfg, key, value); });
}

int chfl_config_get(const chfl_config* cfg, const char* key, char* buf, size_t bufsize) {
    if (int rc = require_arg(cfg && key && buf && bufsize > 0, "chfl_config_get: NULL argument"))
        return rc;
    return guarded([&] {
        const std::string v = chemoflow::config_get(cfg->cfg, key);
        std::snprintf(buf, bufsize, "%s", v.c_str());
    });
}

void chfl_config_free(chfl_config* cfg) {
    delete cfg;
}

int chfl_run(const chfl_config* cfg) {
    if (int rc = require_arg(cfg != nullptr, "chfl_run: cfg is NULL"))
        return rc;
    return guarded([&] { chemoflow::drive_run(cfg->cfg); });
}

int chfl_couple(const chfl_config* cfg) {
    if (int rc = require_arg(cfg != nullptr, "chfl_couple: cfg is NULL"))
        return rc;
    return guarded([&] { chemoflow::drive_couple(cfg->cfg); });
}

int chfl_spectrum(const chfl_config* cfg, const char* snapshot_path, const char* field, double p) {
    if (int rc = require_arg(cfg != nullptr && field != nullptr, "chfl_spectrum: NULL argument"))
        return rc;
    return guarded([&] {
        chemoflow::drive_spectrum(cfg->cfg, snapshot_path ? snapshot_path : "", field, p);
    });
}

int chfl_refine(const chfl_config* cfg, const char* axis, const double* levels, int n_levels) {
    if (int rc = require_arg(cfg && axis && levels && n_levels >= 3,
                             "chfl_refine: need cfg, axis and at least 3 levels"))
        return rc;
    return guarded([&] {
        chemoflow::drive_refine(cfg->cfg, axis, std::vector<double>(levels, levels + n_levels));
    });
}

int chfl_verify(int quick, int* n_failed) {
    int failures = 0;
    const int rc = guarded([&] {
        const auto results = chemoflow::run_verify_suite(quick != 0);
        for (const auto& r : results) {
            std::printf("%s %-40s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        chemoflow::format_double(r.value).c_str());
            if (!r.pass)
                ++failures;
        }
        std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
                    results.size());
    });
    if (n_failed)
        *n_failed = failures;
    if (rc != CHFL_OK)
        return rc;
    if (failures > 0) {
        g_last_error = std::to_string(failures) + " invariant check(s) failed";
        return CHFL_ERR_VERIFY;
    }
    return CHFL_OK;
}

int chfl_sim_create(const chfl_config* cfg, chfl_sim** out) {
    if (int rc = require_arg(cfg && out, "chfl_sim_create: NULL argument"))
        return rc;
    return guarded([&] {
        auto sim = std::make_unique<chfl_sim>();
        sim->cfg = cfg->cfg;
        sim->solver = chemoflow::solver_from_config(cfg->cfg);
        const chemoflow::SpectralGrid grid = chemoflow::grid_from_config(cfg->cfg);
        sim->pot = chemoflow::potential_from_config(cfg->cfg, grid);
        sim->state = chemoflow::make_preset_state(cfg->cfg, grid);
        sim->delta_floor =
            sim->solver.delta_floor *
            std::max(1.0, chemoflow::linf_norm(chemoflow::to_physical(sim->state.c)));
        *out = sim.release();
    });
}

int chfl_sim_advance(chfl_sim* sim, long n_steps) {
    if (int rc = require_arg(sim != nullptr && n_steps >= 0, "chfl_sim_advance: bad argument"))
        return rc;
    return guarded([&] {
        const chemoflow::NoiseProvider noise =
            chemoflow::make_noise_provider(sim->solver.noise, sim->solver.dt);
        for (long i = 0; i < n_steps; ++i, ++sim->step_index)
            sim->state = chemoflow::step(sim->state, sim->solver, sim->pot, sim->step_index,
                                         noise(sim->step_index));
    });
}

int chfl_sim_time(const chfl_sim* sim, double* t) {
    if (int rc = require_arg(sim && t, "chfl_sim_time: NULL argument"))
        return rc;
    *t = sim->step_index * sim->solver.dt;
    return CHFL_OK;
}

int chfl_sim_diagnostic(const chfl_sim* sim, const char* name, double* value) {
    if (int rc = require_arg(sim && name && value, "chfl_sim_diagnostic: NULL argument"))
        return rc;
    return guarded([&] {
        const chemoflow::DiagnosticsRecord r = chemoflow::compute_record(
            sim->state, sim->step_index * sim->solver.dt, sim->solver.alpha, sim->delta_floor);
        const std::string key(name);
        const double values[] = {r.t,          r.mass_n,        r.l2_n,          r.l3_n_cubed,
                                 r.h1_n,       r.entropy,       r.weighted_moment, r.mass_c,
                                 r.linf_c,     r.l1_c,          r.grad_sqrt_c_sq, r.lap_sqrt_c_sq,
                                 r.quartic_c,  r.l2_u,          r.l4_u_fourth,   r.dissipation_u,
                                 r.l2_v,       r.l43_v,         r.halpha_v,      r.min_n,
                                 r.min_c,      r.energy_residual,
                                 static_cast<double>(r.clipped_negative)};
        const auto columns = chemoflow::diagnostics_csv_columns();
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i] == key) {
                *value = values[i];
                return;
            }
        }
        throw chemoflow::Error(chemoflow::ErrorCode::InvalidArgument,
                               "unknown diagnostic '" + key + "'");
    });
}

int chfl_sim_write_snapshot(const chfl_sim* sim, const char* path) {
    if (int rc = require_arg(sim && path, "chfl_sim_write_snapshot: NULL argument"))
        return rc;
    return guarded([&] {
        chemoflow::write_snapshot(path, chemoflow::snapshot_from_state(
                                            sim->state, sim->step_index * sim->solver.dt,
                                            sim->solver.alpha));
    });
}

void chfl_sim_free(chfl_sim* sim) {
    delete sim;
}

}  // extern "C"
