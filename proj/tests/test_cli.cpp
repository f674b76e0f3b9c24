#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "config.hpp"
#include "csvio.hpp"
#include "presets.hpp"
#include "runner.hpp"
#include "snapshot.hpp"

using namespace chemoflow;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("chemoflow_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("config parsing") {
    SUBCASE("empty input yields the documented defaults") {
        const RunConfig cfg = parse_config_text("");
        CHECK(cfg.grid_n == 128);
        CHECK(cfg.dealias_fraction == doctest::Approx(2.0 / 3.0));
        CHECK(cfg.alpha == 0.75);
        CHECK(!cfg.eps);
        CHECK(!cfg.k_band);
        CHECK(!cfg.r_cut);
        CHECK(cfg.noise_lambda == 0.0);
        CHECK(cfg.dt == 1e-3);
        CHECK(cfg.preset == "blob");
    }

    SUBCASE("comments, blanks, and overrides") {
        const RunConfig cfg = parse_config_text(
            "# a comment\n"
            "\n"
            "solver.dt = 5e-4   # trailing comment\n"
            "regularization.eps = 0.1\n"
            "regularization.k_band = off\n"
            "noise.lambda = 0.25\n");
        CHECK(cfg.dt == 5e-4);
        REQUIRE(cfg.eps.has_value());
        CHECK(*cfg.eps == 0.1);
        CHECK(!cfg.k_band);
        CHECK(cfg.noise_lambda == 0.25);
    }

    SUBCASE("all violations are collected, each naming its key") {
        try {
            parse_config_text(
                "solver.dt = -1\n"
                "grid.n = 33\n"
                "no.such.key = 5\n"
                "physics.alpha = 2\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            REQUIRE(e.violations().size() == 4);
            CHECK(e.violations()[0].find("solver.dt") != std::string::npos);
            CHECK(e.violations()[1].find("grid.n") != std::string::npos);
            CHECK(e.violations()[2].find("no.such.key") != std::string::npos);
            CHECK(e.violations()[3].find("physics.alpha") != std::string::npos);
        }
    }

    SUBCASE("duplicate keys report both line numbers") {
        try {
            parse_config_text("solver.dt = 1e-3\nnoise.seed = 4\nsolver.dt = 2e-3\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            REQUIRE(e.violations().size() == 1);
            CHECK(e.violations()[0].find("duplicate key solver.dt") != std::string::npos);
            CHECK(e.violations()[0].find("lines 1 and 3") != std::string::npos);
        }
    }

    SUBCASE("canonical echo parses back to itself") {
        RunConfig cfg;
        apply_config_entry(cfg, "regularization.eps", "0.125");
        apply_config_entry(cfg, "noise.lambda", "0.1");
        const std::string canon = canonical_config(cfg);
        const RunConfig back = parse_config_text(canon);
        CHECK(canonical_config(back) == canon);
    }

    SUBCASE("config_get mirrors apply") {
        RunConfig cfg;
        apply_config_entry(cfg, "solver.t_end", "2.5");
        CHECK(config_get(cfg, "solver.t_end") == "2.5");
        CHECK(config_get(cfg, "regularization.eps") == "off");
        CHECK_THROWS_AS(config_get(cfg, "bogus.key"), ConfigError);
    }
}

TEST_CASE("shortest round-trip float formatting") {
    for (double x : {0.1, 1.0 / 3.0, 2e-3, 6.62607015e-34, -123456.789}) {
        const std::string s = format_double(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("snapshot io") {
    const SpectralGrid g(16, kTwoPi);
    const State st = make_blob_state(g, 0.1);
    const Snapshot snap = snapshot_from_state(st, 0.75, 0.6);
    TempDir tmp;
    const fs::path path = tmp.path / "state.bin";

    SUBCASE("write-read-write is byte-identical") {
        write_snapshot(path.string(), snap);
        const Snapshot back = read_snapshot(path.string());
        const fs::path path2 = tmp.path / "state2.bin";
        write_snapshot(path2.string(), back);
        CHECK(slurp(path) == slurp(path2));
        CHECK(back.grid == snap.grid);
        CHECK(back.t == snap.t);
        CHECK(back.alpha == snap.alpha);
    }

    SUBCASE("header layout is pinned") {
        write_snapshot(path.string(), snap);
        const std::string bytes = slurp(path);
        REQUIRE(bytes.size() == 64 + 4 * g.size() * sizeof(double));
        CHECK(bytes.compare(0, 4, "CHFL") == 0);
        uint32_t version, n, fields;
        std::memcpy(&version, bytes.data() + 4, 4);
        std::memcpy(&n, bytes.data() + 8, 4);
        std::memcpy(&fields, bytes.data() + 36, 4);
        CHECK(version == 1);
        CHECK(n == 16);
        CHECK(fields == 4);
        double length;
        std::memcpy(&length, bytes.data() + 12, 8);
        CHECK(length == g.length);
    }

    SUBCASE("corrupted magic is rejected") {
        std::ofstream out(path, std::ios::binary);
        out << "NOPEnope";
        out.close();
        CHECK_THROWS_AS(read_snapshot(path.string()), Error);
    }
}

TEST_CASE("run driver outputs") {
    TempDir tmp;
    RunConfig cfg;
    apply_config_entry(cfg, "grid.n", "32");
    apply_config_entry(cfg, "grid.length", "6.283185307179586");
    apply_config_entry(cfg, "solver.dt", "1e-3");
    apply_config_entry(cfg, "solver.t_end", "0.02");
    apply_config_entry(cfg, "solver.diagnostics_every", "5");
    apply_config_entry(cfg, "solver.snapshot_every", "10");
    apply_config_entry(cfg, "noise.lambda", "0.1");
    cfg.output_directory = (tmp.path / "a").string();

    SUBCASE("artifacts exist and reruns are byte-identical") {
        drive_run(cfg);
        const fs::path dir = cfg.output_directory;
        CHECK(fs::exists(dir / "chemoflow_diagnostics.csv"));
        CHECK(fs::exists(dir / "chemoflow_config.cfg"));
        CHECK(fs::exists(dir / "chemoflow_final.bin"));
        CHECK(fs::exists(dir / "chemoflow_snap_000000.bin"));

        RunConfig cfg2 = cfg;
        cfg2.output_directory = (tmp.path / "b").string();
        drive_run(cfg2);
        CHECK(slurp(dir / "chemoflow_diagnostics.csv") ==
              slurp(fs::path(cfg2.output_directory) / "chemoflow_diagnostics.csv"));
        CHECK(slurp(dir / "chemoflow_final.bin") ==
              slurp(fs::path(cfg2.output_directory) / "chemoflow_final.bin"));

        // the echo parses back to the effective configuration
        const RunConfig echoed = parse_config_text(slurp(dir / "chemoflow_config.cfg"));
        CHECK(echoed.grid_n == 32);
        CHECK(echoed.output_directory == cfg.output_directory);
    }

    SUBCASE("restart from the final snapshot") {
        drive_run(cfg);
        RunConfig resume = cfg;
        resume.snapshot_path = (fs::path(cfg.output_directory) / "chemoflow_final.bin").string();
        resume.output_directory = (tmp.path / "resume").string();
        drive_run(resume);
        CHECK(fs::exists(fs::path(resume.output_directory) / "chemoflow_diagnostics.csv"));
    }

    SUBCASE("custom potential from a snapshot file") {
        drive_run(cfg);
        RunConfig custom = cfg;
        custom.potential_file = (fs::path(cfg.output_directory) / "chemoflow_final.bin").string();
        custom.output_directory = (tmp.path / "potential").string();
        drive_run(custom);
        CHECK(fs::exists(fs::path(custom.output_directory) / "chemoflow_diagnostics.csv"));

        RunConfig mismatched = custom;
        apply_config_entry(mismatched, "grid.n", "64");
        CHECK_THROWS_AS(drive_run(mismatched), Error);
    }
}

TEST_CASE("spectrum and coupling drivers") {
    TempDir tmp;
    RunConfig cfg;
    apply_config_entry(cfg, "grid.n", "32");
    apply_config_entry(cfg, "grid.length", "6.283185307179586");
    apply_config_entry(cfg, "solver.dt", "1e-3");
    apply_config_entry(cfg, "solver.t_end", "0.02");
    apply_config_entry(cfg, "noise.lambda", "0.1");
    cfg.output_directory = tmp.path.string();

    drive_spectrum(cfg, "", "vorticity", 4.0);
    const std::string spectrum = slurp(tmp.path / "chemoflow_spectrum.csv");
    CHECK(spectrum.rfind("j,l2_norm,lp_norm\n", 0) == 0);

    drive_couple(cfg);
    const std::string coupling = slurp(tmp.path / "chemoflow_coupling.csv");
    CHECK(coupling.rfind("t,E,E_tilde,F_alpha,gronwall_H\n", 0) == 0);
}
