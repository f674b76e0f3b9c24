// chemoflow command line. Talks to the engine exclusively through the C API.
//
//   chemoflow run      --config FILE [--set key=value ...]
//   chemoflow verify   [--quick]
//   chemoflow couple   --config FILE [--perturb X] [--set key=value ...]
//   chemoflow spectrum --config FILE [--snapshot FILE] [--field n|c|u1|u2|vorticity] [--p P]
//   chemoflow refine   --config FILE --axis dt|eps|k_band|resolution --levels a,b,c [...]
//
// Exit status: 0 success, 1 invariant failure or divergence, 2 usage/config
// error.

#include <chemoflow/chemoflow.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace {

void usage(std::FILE* to) {
    std::fprintf(to,
                 "usage: chemoflow <run|verify|couple|spectrum|refine> [options]\n"
                 "  run      --config FILE [--set key=value ...]\n"
                 "  verify   [--quick]\n"
                 "  couple   --config FILE [--perturb X] [--set key=value ...]\n"
                 "  spectrum --config FILE [--snapshot FILE] [--field NAME] [--p P]\n"
                 "  refine   --config FILE --axis AXIS --levels a,b,c [--set key=value ...]\n");
}

struct Options {
    std::string config_path;
    std::vector<std::string> sets;  // key=value overrides
    std::string snapshot;
    std::string field = "n";
    std::string axis;
    std::vector<double> levels;
    double p = 4.0;
    bool quick = false;
    bool have_perturb = false;
    std::string perturb;
};

bool parse_levels(const std::string& arg, std::vector<double>& out) {
    size_t start = 0;
    while (start <= arg.size()) {
        const size_t comma = arg.find(',', start);
        const std::string tok = arg.substr(start, comma == std::string::npos ? comma : comma - start);
        if (tok.empty())
            return false;
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            return false;
        out.push_back(v);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return !out.empty();
}

int parse_options(int argc, char** argv, Options& opt) {
    for (int i = 0; i < argc; ++i) {
        const std::string a = argv[i];
        auto next = [&](const char* name) -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "chemoflow: %s requires a value\n", name);
                return nullptr;
            }
            return argv[++i];
        };
        if (a == "--config") {
            const char* v = next("--config");
            if (!v)
                return 2;
            opt.config_path = v;
        } else if (a == "--set") {
            const char* v = next("--set");
            if (!v)
                return 2;
            opt.sets.push_back(v);
        } else if (a == "--snapshot") {
            const char* v = next("--snapshot");
            if (!v)
                return 2;
            opt.snapshot = v;
        } else if (a == "--field") {
            const char* v = next("--field");
            if (!v)
                return 2;
            opt.field = v;
        } else if (a == "--axis") {
            const char* v = next("--axis");
            if (!v)
                return 2;
            opt.axis = v;
        } else if (a == "--levels") {
            const char* v = next("--levels");
            if (!v)
                return 2;
            if (!parse_levels(v, opt.levels)) {
                std::fprintf(stderr, "chemoflow: cannot parse --levels '%s'\n", v);
                return 2;
            }
        } else if (a == "--p") {
            const char* v = next("--p");
            if (!v)
                return 2;
            opt.p = std::strtod(v, nullptr);
        } else if (a == "--perturb") {
            const char* v = next("--perturb");
            if (!v)
                return 2;
            opt.have_perturb = true;
            opt.perturb = v;
        } else if (a == "--quick") {
            opt.quick = true;
        } else if (a == "--help" || a == "-h") {
            usage(stdout);
            return -1;
        } else {
            std::fprintf(stderr, "chemoflow: unknown option '%s'\n", a.c_str());
            return 2;
        }
    }
    return 0;
}

int map_exit(int rc) {
    switch (rc) {
        case CHFL_OK:
            return 0;
        case CHFL_ERR_VERIFY:
        case CHFL_ERR_DIVERGED:
            return 1;
        default:
            return 2;
    }
}

int load_config(const Options& opt, bool required, chfl_config** cfg) {
    int rc;
    if (opt.config_path.empty()) {
        if (required) {
            std::fprintf(stderr, "chemoflow: --config is required for this command\n");
            return 2;
        }
        rc = chfl_config_defaults(cfg);
    } else {
        rc = chfl_config_load(opt.config_path.c_str(), cfg);
    }
    if (rc != CHFL_OK) {
        std::fprintf(stderr, "chemoflow: %s\n", chfl_last_error());
        return map_exit(rc);
    }
    for (const std::string& kv : opt.sets) {
        const size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "chemoflow: --set expects key=value, got '%s'\n", kv.c_str());
            chfl_config_free(*cfg);
            return 2;
        }
        rc = chfl_config_set(*cfg, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
        if (rc != CHFL_OK) {
            std::fprintf(stderr, "chemoflow: %s\n", chfl_last_error());
            chfl_config_free(*cfg);
            return map_exit(rc);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(stderr);
        return 2;
    }
    const std::string cmd = argv[1];
    Options opt;
    const int parsed = parse_options(argc - 2, argv + 2, opt);
    if (parsed == -1)
        return 0;
    if (parsed != 0)
        return parsed;

    if (cmd == "verify") {
        int failed = 0;
        const int rc = chfl_verify(opt.quick ? 1 : 0, &failed);
        if (rc != CHFL_OK && rc != CHFL_ERR_VERIFY)
            std::fprintf(stderr, "chemoflow: %s\n", chfl_last_error());
        return map_exit(rc);
    }

    if (cmd == "run" || cmd == "couple" || cmd == "spectrum" || cmd == "refine") {
        chfl_config* cfg = nullptr;
        const int load_rc = load_config(opt, true, &cfg);
        if (load_rc != 0)
            return load_rc;

        int rc = CHFL_OK;
        if (cmd == "run") {
            rc = chfl_run(cfg);
        } else if (cmd == "couple") {
            if (opt.have_perturb)
                rc = chfl_config_set(cfg, "coupling.perturbation", opt.perturb.c_str());
            if (rc == CHFL_OK)
                rc = chfl_couple(cfg);
        } else if (cmd == "spectrum") {
            rc = chfl_spectrum(cfg, opt.snapshot.empty() ? nullptr : opt.snapshot.c_str(),
                               opt.field.c_str(), opt.p);
        } else {
            if (opt.axis.empty() || opt.levels.size() < 3) {
                std::fprintf(stderr, "chemoflow: refine needs --axis and --levels with >= 3 values\n");
                chfl_config_free(cfg);
                return 2;
            }
            rc = chfl_refine(cfg, opt.axis.c_str(), opt.levels.data(),
                             static_cast<int>(opt.levels.size()));
        }
        if (rc != CHFL_OK)
            std::fprintf(stderr, "chemoflow: %s\n", chfl_last_error());
        chfl_config_free(cfg);
        return map_exit(rc);
    }

    std::fprintf(stderr, "chemoflow: unknown command '%s'\n", cmd.c_str());
    usage(stderr);
    return 2;
}
