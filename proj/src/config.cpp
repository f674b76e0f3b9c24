#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "csvio.hpp"

namespace chemoflow {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += "; ";
        out += parts[i];
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size() && std::isfinite(out);
    } catch (...) {
        return false;
    }
}

bool parse_int(const std::string& s, long long& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

bool parse_bool(const std::string& s, bool& out) {
    if (s == "true" || s == "1" || s == "on") {
        out = true;
        return true;
    }
    if (s == "false" || s == "0" || s == "off") {
        out = false;
        return true;
    }
    return false;
}

struct KeySpec {
    // set returns an error message or empty on success
    std::function<std::string(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

std::string set_positive_double(double& slot, const std::string& v, const char* key) {
    double x;
    if (!parse_double(v, x))
        return std::string(key) + ": expected a number, got '" + v + "'";
    if (x <= 0.0)
        return std::string(key) + ": must be positive, got " + v;
    slot = x;
    return "";
}

std::string set_optional_positive(std::optional<double>& slot, const std::string& v, const char* key) {
    if (v == "off") {
        slot.reset();
        return "";
    }
    double x;
    if (!parse_double(v, x))
        return std::string(key) + ": expected a number or 'off', got '" + v + "'";
    if (x <= 0.0)
        return std::string(key) + ": must be positive or 'off', got " + v;
    slot = x;
    return "";
}

std::string optional_to_string(const std::optional<double>& v) {
    return v ? format_double(*v) : "off";
}

const std::vector<std::pair<std::string, KeySpec>>& key_table() {
    static const std::vector<std::pair<std::string, KeySpec>> table = {
        {"grid.n",
         {[](RunConfig& c, const std::string& v) -> std::string {
              long long x;
              if (!parse_int(v, x))
                  return "grid.n: expected an integer, got '" + v + "'";
              if (x < 4 || x % 2 != 0)
                  return "grid.n: must be an even integer >= 4, got " + v;
              c.grid_n = static_cast<int>(x);
              return "";
          },
          [](const RunConfig& c) { return std::to_string(c.grid_n); }}},
        {"grid.length",
         {[](RunConfig& c, const std::string& v) { return set_positive_double(c.grid_length, v, "grid.length"); },
          [](const RunConfig& c) { return format_double(c.grid_length); }}},
        {"grid.dealias_fraction",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "grid.dealias_fraction: expected a number, got '" + v + "'";
              if (x <= 0.0 || x > 1.0)
                  return "grid.dealias_fraction: must lie in (0,1], got " + v;
              c.dealias_fraction = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.dealias_fraction); }}},
        {"physics.alpha",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "physics.alpha: expected a number, got '" + v + "'";
              if (x < 0.5 || x > 1.0)
                  return "physics.alpha: must lie in [0.5, 1], got " + v;
              c.alpha = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.alpha); }}},
        {"physics.potential_g",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "physics.potential_g: expected a number, got '" + v + "'";
              c.potential_g = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.potential_g); }}},
        {"physics.potential_file",
         {[](RunConfig& c, const std::string& v) -> std::string {
              c.potential_file = (v == "none") ? "" : v;
              return "";
          },
          [](const RunConfig& c) {
              return c.potential_file.empty() ? std::string("none") : c.potential_file;
          }}},
        {"regularization.eps",
         {[](RunConfig& c, const std::string& v) { return set_optional_positive(c.eps, v, "regularization.eps"); },
          [](const RunConfig& c) { return optional_to_string(c.eps); }}},
        {"regularization.k_band",
         {[](RunConfig& c, const std::string& v) { return set_optional_positive(c.k_band, v, "regularization.k_band"); },
          [](const RunConfig& c) { return optional_to_string(c.k_band); }}},
        {"regularization.r_cut",
         {[](RunConfig& c, const std::string& v) { return set_optional_positive(c.r_cut, v, "regularization.r_cut"); },
          [](const RunConfig& c) { return optional_to_string(c.r_cut); }}},
        {"regularization.strict_annulus",
         {[](RunConfig& c, const std::string& v) -> std::string {
              bool b;
              if (!parse_bool(v, b))
                  return "regularization.strict_annulus: expected a boolean, got '" + v + "'";
              c.strict_annulus = b;
              return "";
          },
          [](const RunConfig& c) { return c.strict_annulus ? std::string("true") : std::string("false"); }}},
        {"noise.k_modes",
         {[](RunConfig& c, const std::string& v) -> std::string {
              long long x;
              if (!parse_int(v, x))
                  return "noise.k_modes: expected an integer, got '" + v + "'";
              if (x < 1)
                  return "noise.k_modes: must be >= 1, got " + v;
              c.noise_k_modes = static_cast<int>(x);
              return "";
          },
          [](const RunConfig& c) { return std::to_string(c.noise_k_modes); }}},
        {"noise.lambda",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "noise.lambda: expected a number, got '" + v + "'";
              if (x < 0.0)
                  return "noise.lambda: must be nonnegative, got " + v;
              c.noise_lambda = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.noise_lambda); }}},
        {"noise.seed",
         {[](RunConfig& c, const std::string& v) -> std::string {
              long long x;
              if (!parse_int(v, x))
                  return "noise.seed: expected an integer, got '" + v + "'";
              c.noise_seed = static_cast<uint64_t>(x);
              return "";
          },
          [](const RunConfig& c) { return std::to_string(c.noise_seed); }}},
        {"solver.dt",
         {[](RunConfig& c, const std::string& v) { return set_positive_double(c.dt, v, "solver.dt"); },
          [](const RunConfig& c) { return format_double(c.dt); }}},
        {"solver.t_end",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "solver.t_end: expected a number, got '" + v + "'";
              if (x < 0.0)
                  return "solver.t_end: must be nonnegative, got " + v;
              c.t_end = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.t_end); }}},
        {"solver.snapshot_every",
         {[](RunConfig& c, const std::string& v) -> std::string {
              long long x;
              if (!parse_int(v, x))
                  return "solver.snapshot_every: expected an integer, got '" + v + "'";
              if (x < 0)
                  return "solver.snapshot_every: must be >= 0, got " + v;
              c.snapshot_every = x;
              return "";
          },
          [](const RunConfig& c) { return std::to_string(c.snapshot_every); }}},
        {"solver.diagnostics_every",
         {[](RunConfig& c, const std::string& v) -> std::string {
              long long x;
              if (!parse_int(v, x))
                  return "solver.diagnostics_every: expected an integer, got '" + v + "'";
              if (x < 1)
                  return "solver.diagnostics_every: must be >= 1, got " + v;
              c.diagnostics_every = x;
              return "";
          },
          [](const RunConfig& c) { return std::to_string(c.diagnostics_every); }}},
        {"initial.preset",
         {[](RunConfig& c, const std::string& v) -> std::string {
              if (v != "blob" && v != "uniform" && v != "single-mode")
                  return "initial.preset: must be one of blob|uniform|single-mode, got '" + v + "'";
              c.preset = v;
              return "";
          },
          [](const RunConfig& c) { return c.preset; }}},
        {"initial.snapshot",
         {[](RunConfig& c, const std::string& v) -> std::string {
              c.snapshot_path = (v == "none") ? "" : v;
              return "";
          },
          [](const RunConfig& c) { return c.snapshot_path.empty() ? std::string("none") : c.snapshot_path; }}},
        {"initial.n0",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "initial.n0: expected a number, got '" + v + "'";
              if (x < 0.0)
                  return "initial.n0: must be nonnegative, got " + v;
              c.initial_n0 = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.initial_n0); }}},
        {"initial.c0",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "initial.c0: expected a number, got '" + v + "'";
              if (x < 0.0)
                  return "initial.c0: must be nonnegative, got " + v;
              c.initial_c0 = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.initial_c0); }}},
        {"initial.u_amp",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "initial.u_amp: expected a number, got '" + v + "'";
              c.initial_u_amp = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.initial_u_amp); }}},
        {"coupling.perturbation",
         {[](RunConfig& c, const std::string& v) -> std::string {
              double x;
              if (!parse_double(v, x))
                  return "coupling.perturbation: expected a number, got '" + v + "'";
              if (x < 0.0)
                  return "coupling.perturbation: must be nonnegative, got " + v;
              c.coupling_perturbation = x;
              return "";
          },
          [](const RunConfig& c) { return format_double(c.coupling_perturbation); }}},
        {"output.directory",
         {[](RunConfig& c, const std::string& v) -> std::string {
              if (v.empty())
                  return "output.directory: must not be empty";
              c.output_directory = v;
              return "";
          },
          [](const RunConfig& c) { return c.output_directory; }}},
        {"output.prefix",
         {[](RunConfig& c, const std::string& v) -> std::string {
              if (v.empty())
                  return "output.prefix: must not be empty";
              c.output_prefix = v;
              return "";
          },
          [](const RunConfig& c) { return c.output_prefix; }}},
    };
    return table;
}

const KeySpec* find_key(const std::string& key) {
    for (const auto& [name, spec] : key_table())
        if (name == key)
            return &spec;
    return nullptr;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : Error(ErrorCode::Config, join(violations)), violations_(std::move(violations)) {}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::vector<std::string> violations;
    std::map<std::string, int> first_seen;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos)
            line = line.substr(0, comment);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            violations.push_back("line " + std::to_string(line_no) + ": expected key=value, got '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const KeySpec* spec = find_key(key);
        if (!spec) {
            violations.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            continue;
        }
        const auto seen = first_seen.find(key);
        if (seen != first_seen.end()) {
            violations.push_back("duplicate key " + key + " (lines " + std::to_string(seen->second) +
                                 " and " + std::to_string(line_no) + ")");
            continue;
        }
        first_seen[key] = line_no;
        const std::string err = spec->set(cfg, value);
        if (!err.empty())
            violations.push_back("line " + std::to_string(line_no) + ": " + err);
    }
    if (!violations.empty())
        throw ConfigError(std::move(violations));
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    const KeySpec* spec = find_key(key);
    if (!spec)
        throw ConfigError({"unknown key '" + key + "'"});
    const std::string err = spec->set(cfg, value);
    if (!err.empty())
        throw ConfigError({err});
}

std::string config_get(const RunConfig& cfg, const std::string& key) {
    const KeySpec* spec = find_key(key);
    if (!spec)
        throw ConfigError({"unknown key '" + key + "'"});
    return spec->get(cfg);
}

std::string canonical_config(const RunConfig& cfg) {
    std::string out;
    for (const auto& [name, spec] : key_table()) {
        out += name;
        out += '=';
        out += spec.get(cfg);
        out += '\n';
    }
    return out;
}

}  // namespace chemoflow
