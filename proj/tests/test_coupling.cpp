#include <doctest.h>

#include <cmath>

#include "coupling.hpp"
#include "fixtures.hpp"
#include "presets.hpp"

using namespace chemoflow;

namespace {

double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace

TEST_CASE("difference functionals") {
    const SpectralGrid g(32, kTwoPi);

    SUBCASE("identical states have zero difference energy") {
        const State st = make_random_state(g, 401);
        CHECK(difference_energy(st, st) == 0.0);
        CHECK(difference_energy_tilde(st, st) == 0.0);
        CHECK(difference_dissipation(st, st, 0.75) == 0.0);
    }

    SUBCASE("single-mode velocity difference matches the hand evaluation") {
        const State base = make_uniform_state(g, 0.0, 0.0);
        const double amp = 1e-3;
        const State other = perturb_velocity_mode(base, amp, 1, 2);
        // u difference is one divergence-free mode pair of total L2 norm
        // amp * L / sqrt(2); v adds kappa^2 = 5 times that energy
        const double u_sq = amp * amp * g.length * g.length / 2.0;
        const double kappa_sq = 5.0;
        const double expected_E = u_sq + kappa_sq * u_sq;
        CHECK(rel(difference_energy(base, other), expected_E) < 1e-12);
        // E~ replaces v by (-Delta)^{-1/8} v: weight kappa^{-1/2}
        const double expected_Et = u_sq + std::pow(kappa_sq, 0.75) * u_sq;
        CHECK(rel(difference_energy_tilde(base, other), expected_Et) < 1e-12);
        // F^alpha = ||grad n,c|^2 + |u|_{H^a}^2 + |lap c|^2 + |v|_{H^a}^2
        const double alpha = 0.75;
        const double expected_F = std::pow(kappa_sq, alpha) * u_sq +
                                  std::pow(kappa_sq, alpha) * kappa_sq * u_sq;
        CHECK(rel(difference_dissipation(base, other, alpha), expected_F) < 1e-12);
    }

    SUBCASE("monotone in the perturbation size") {
        const State st = make_blob_state(g, 0.1);
        const double e1 = difference_energy(st, perturb_velocity_mode(st, 1e-6));
        const double e2 = difference_energy(st, perturb_velocity_mode(st, 2e-6));
        CHECK(e2 > e1);
        CHECK(rel(e2, 4.0 * e1) < 1e-9);  // quadratic in the amplitude
    }
}

TEST_CASE("Gronwall coefficient") {
    const SpectralGrid g(32, kTwoPi);

    SUBCASE("zero states leave only the constant") {
        const State zero = make_uniform_state(g, 0.0, 0.0);
        CHECK(gronwall_coefficient(zero, zero, 0.75) == 1.0);
    }

    SUBCASE("uniform states against the hand formula, alpha > 1/2") {
        const double a = 0.5, b = 1.5;
        const State s1 = make_uniform_state(g, a, 0.0);
        const State s2 = make_uniform_state(g, 0.0, b);
        // surviving terms: 1 + ||c2||^2 + ||n1||^2 + ||c2||_{H2}^2
        const double L = g.length;
        const double expected = 1.0 + b * b * L * L + a * a * L * L + b * b * L * L;
        CHECK(rel(gronwall_coefficient(s1, s2, 0.75), expected) < 1e-12);
    }

    SUBCASE("uniform states against the hand formula, alpha = 1/2") {
        const double b = 1.5;
        const State s1 = make_uniform_state(g, 0.0, 0.0);
        const State s2 = make_uniform_state(g, 0.0, b);
        // surviving terms: ||c2||_inf^2 + 1
        CHECK(rel(gronwall_coefficient(s1, s2, 0.5), 1.0 + b * b) < 1e-12);
    }

    SUBCASE("not symmetric under swapping the solutions") {
        const State a = make_random_state(g, 402);
        const State b = make_random_state(g, 403);
        CHECK(gronwall_coefficient(a, b, 0.75) != gronwall_coefficient(b, a, 0.75));
    }
}

TEST_CASE("coupled trajectories") {
    const SpectralGrid g(32, kTwoPi);
    const Potential pot = make_sine_potential(g, 0.2);
    const State init = make_blob_state(g, 0.1);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.05;
    cfg.alpha = 0.75;
    cfg.noise = make_noise_model(4, 0.1, 555);
    cfg.diagnostics_every = 10;

    SUBCASE("identical initial data stays identical") {
        const CouplingResult res = coupled_run(init, init, cfg, pot);
        for (const auto& r : res.records) {
            CHECK(r.E <= 1e-12);
            CHECK(r.E_tilde <= 1e-12);
        }
    }

    SUBCASE("perturbed run records positive energies and the coefficient") {
        const State other = perturb_velocity_mode(init, 1e-6);
        const CouplingResult res = coupled_run(init, other, cfg, pot);
        REQUIRE(res.records.size() >= 3);
        CHECK(res.records.front().E > 0.0);
        for (const auto& r : res.records) {
            CHECK(std::isfinite(r.E));
            CHECK(r.gronwall_H >= 1.0);
            CHECK(r.F_alpha >= 0.0);
        }
        CHECK(res.max_l2_n > 0.0);
    }

    SUBCASE("grid mismatch is rejected") {
        const SpectralGrid g2(16, kTwoPi);
        const State other = make_blob_state(g2, 0.1);
        CHECK_THROWS_AS(coupled_run(init, other, cfg, pot), Error);
    }
}

TEST_CASE("exponential envelope fit") {
    SUBCASE("recovers a synthetic exponential") {
        std::vector<double> ts, vs;
        for (int i = 0; i <= 50; ++i) {
            const double t = 0.01 * i;
            ts.push_back(t);
            vs.push_back(2.5 * std::exp(1.7 * t));
        }
        const ExponentialFit fit = fit_exponential(ts, vs, 0.02);
        CHECK(rel(fit.rate, 1.7) < 1e-10);
        CHECK(rel(std::exp(fit.log_intercept), 2.5) < 1e-10);
        CHECK(fit.r_squared > 0.999999);
    }

    SUBCASE("startup window is excluded") {
        std::vector<double> ts = {0.0, 0.001, 0.002, 0.1, 0.2, 0.3, 0.4};
        std::vector<double> vs = {100.0, 100.0, 100.0, std::exp(0.1), std::exp(0.2),
                                  std::exp(0.3), std::exp(0.4)};
        const ExponentialFit fit = fit_exponential(ts, vs, 0.05);
        CHECK(rel(fit.rate, 1.0) < 1e-10);
    }

    SUBCASE("too few samples is an error") {
        std::vector<double> ts = {0.0, 1.0};
        std::vector<double> vs = {1.0, 2.0};
        CHECK_THROWS_AS(fit_exponential(ts, vs, 0.0), Error);
    }
}
