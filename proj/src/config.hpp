#pragma once

// Line-oriented key=value configuration with dotted section prefixes.
// Validation collects every violation, not just the first; unknown and
// duplicate keys are rejected. parse/echo round-trips bit-exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace chemoflow {

struct RunConfig {
    // grid
    int grid_n = 128;
    double grid_length = 16.0 * 3.14159265358979323846;
    double dealias_fraction = 2.0 / 3.0;
    // physics
    double alpha = 0.75;
    double potential_g = 0.1;
    std::string potential_file;  // snapshot whose n field is used as phi
    // regularization
    std::optional<double> eps;
    std::optional<double> k_band;
    std::optional<double> r_cut;
    bool strict_annulus = false;
    // noise
    int noise_k_modes = 8;
    double noise_lambda = 0.0;
    uint64_t noise_seed = 12345;
    // solver
    double dt = 1e-3;
    double t_end = 1.0;
    long snapshot_every = 0;
    long diagnostics_every = 10;
    // initial data
    std::string preset = "blob";      // blob | uniform | single-mode
    std::string snapshot_path;        // overrides preset when set
    double initial_n0 = 0.5;
    double initial_c0 = 1.0;
    double initial_u_amp = 0.05;
    // coupling
    double coupling_perturbation = 1e-6;
    // output
    std::string output_directory = "out";
    std::string output_prefix = "chemoflow";
};

class ConfigError : public Error {
  public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Apply one key=value pair on top of an existing config (CLI overrides).
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);
std::string config_get(const RunConfig& cfg, const std::string& key);

// Canonical echo: every known key with its effective value, fixed order.
std::string canonical_config(const RunConfig& cfg);

}  // namespace chemoflow
