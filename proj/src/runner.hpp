#pragma once

// High-level drivers behind the command surface: build grid/state/solver from
// a RunConfig, run, and persist reproducible outputs (canonical config echo,
// diagnostics CSV, snapshots, coupling CSV, spectrum CSV, refinement table).

#include <string>
#include <vector>

#include "config.hpp"
#include "coupling.hpp"
#include "integrator.hpp"

namespace chemoflow {

SpectralGrid grid_from_config(const RunConfig& cfg);
SolverConfig solver_from_config(const RunConfig& cfg);
Potential potential_from_config(const RunConfig& cfg, const SpectralGrid& grid);

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records);
std::string coupling_csv(const std::vector<CouplingRecord>& records);

// Each driver writes into cfg.output_directory with cfg.output_prefix and
// throws chemoflow::Error on failure.
void drive_run(const RunConfig& cfg);
void drive_couple(const RunConfig& cfg);
void drive_spectrum(const RunConfig& cfg, const std::string& snapshot_path, const std::string& field,
                    double p);
void drive_refine(const RunConfig& cfg, const std::string& axis, const std::vector<double>& levels);

}  // namespace chemoflow
