#include "coupling.hpp"

#include "lp.hpp"

#include <cmath>

namespace chemoflow {

namespace {

SpectralField diff(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid, b.grid);
    SpectralField d(a.grid);
    for (std::size_t i = 0; i < d.c.size(); ++i)
        d.c[i] = a.c[i] - b.c[i];
    return d;
}

struct DiffFields {
    SpectralField n, c, v;
    SpectralVectorField u;
};

DiffFields make_diff(const State& a, const State& b) {
    DiffFields d;
    d.n = diff(a.n, b.n);
    d.c = diff(a.c, b.c);
    d.u.x = diff(a.u.x, b.u.x);
    d.u.y = diff(a.u.y, b.u.y);
    d.v = curl2d(d.u);
    return d;
}

double sq(double x) {
    return x * x;
}

}  // namespace

double difference_energy(const State& a, const State& b) {
    const DiffFields d = make_diff(a, b);
    return sq(l2_norm(d.n)) + sq(l2_norm(d.c)) + sq(l2_norm(d.u)) +
           sq(homogeneous_sobolev_norm(d.c, 1.0)) + sq(l2_norm(d.v));
}

double difference_energy_tilde(const State& a, const State& b) {
    const DiffFields d = make_diff(a, b);
    return sq(l2_norm(d.n)) + sq(l2_norm(d.c)) + sq(l2_norm(d.u)) +
           sq(homogeneous_sobolev_norm(d.c, 1.0)) + sq(homogeneous_sobolev_norm(d.v, -0.25));
}

double difference_dissipation(const State& a, const State& b, double alpha) {
    const DiffFields d = make_diff(a, b);
    return sq(homogeneous_sobolev_norm(d.n, 1.0)) + sq(homogeneous_sobolev_norm(d.c, 1.0)) +
           sq(homogeneous_sobolev_norm(d.u, alpha)) + sq(l2_norm(laplacian(d.c))) +
           sq(homogeneous_sobolev_norm(d.v, alpha));
}

double gronwall_coefficient(const State& s1, const State& s2, double alpha) {
    require_same_grid(s1.grid(), s2.grid());
    const double n1 = l2_norm(s1.n);
    const double gn1 = homogeneous_sobolev_norm(s1.n, 1.0);
    const double n2 = l2_norm(s2.n);
    const double gn2 = homogeneous_sobolev_norm(s2.n, 1.0);
    const double gc1 = homogeneous_sobolev_norm(s1.c, 1.0);
    const double lc1 = l2_norm(laplacian(s1.c));
    const double c2 = l2_norm(s2.c);
    const double gu1 = homogeneous_sobolev_norm(s1.u, 1.0);
    const double gu2 = homogeneous_sobolev_norm(s2.u, 1.0);
    const SpectralField v1 = curl2d(s1.u);

    if (alpha > 0.5) {
        return 1.0 + sq(n1) * sq(gn1) + sq(gc1) * sq(lc1) + sq(n2) * sq(gn2) + gc1 * lc1 + sq(c2) +
               sq(n1) + sq(gu2) + sq(sobolev_norm(s2.c, 2.0)) +
               sq(homogeneous_sobolev_norm(v1, alpha)) + gu1;
    }
    // alpha = 1/2 coefficient
    const double c2_inf = linf_norm(to_physical(s2.c));
    return std::pow(n1, 1.5) * std::pow(gn1, 1.5) + sq(n2) * sq(gn2) + sq(lc1) +
           std::pow(gc1, 1.5) * std::pow(lc1, 1.5) + sq(gu2) + sq(c2_inf) + sq(n1) * sq(gn1) + 1.0;
}

CouplingResult coupled_run(const State& init1, const State& init2, const SolverConfig& cfg,
                           const Potential& pot) {
    require_same_grid(init1.grid(), init2.grid());
    const long steps = std::llround(cfg.t_end / cfg.dt);
    const NoiseProvider noise = make_noise_provider(cfg.noise, cfg.dt);

    CouplingResult result;
    State s1 = init1, s2 = init2;

    auto emit = [&](double t) {
        CouplingRecord rec;
        rec.t = t;
        rec.E = difference_energy(s1, s2);
        rec.E_tilde = difference_energy_tilde(s1, s2);
        rec.F_alpha = difference_dissipation(s1, s2, cfg.alpha);
        rec.gronwall_H = gronwall_coefficient(s1, s2, cfg.alpha);
        result.records.push_back(rec);
        result.max_l2_n = std::max(result.max_l2_n, std::max(l2_norm(s1.n), l2_norm(s2.n)));
        result.max_h1_c = std::max(result.max_h1_c, std::max(sobolev_norm(s1.c, 1.0), sobolev_norm(s2.c, 1.0)));
        result.max_l2_u = std::max(result.max_l2_u, std::max(l2_norm(s1.u), l2_norm(s2.u)));
    };

    emit(0.0);
    for (long k = 0; k < steps; ++k) {
        // one increment per step feeds both solutions
        const double g = noise(k);
        s1 = step(s1, cfg, pot, k, g);
        s2 = step(s2, cfg, pot, k, g);
        if ((k + 1) % cfg.diagnostics_every == 0 || k + 1 == steps)
            emit((k + 1) * cfg.dt);
    }
    result.final1 = s1;
    result.final2 = s2;
    return result;
}

State perturb_velocity_mode(const State& s, double amplitude, int mode_x, int mode_y) {
    State out = s;
    // divergence-free mode: coefficients along (-m_y, m_x), Hermitian pair
    const double norm = std::hypot(static_cast<double>(mode_x), static_cast<double>(mode_y));
    const std::complex<double> amp(0.5 * amplitude, 0.0);
    out.u.x.mode(mode_x, mode_y) += amp * (-mode_y / norm);
    out.u.y.mode(mode_x, mode_y) += amp * (mode_x / norm);
    out.u.x.mode(-mode_x, -mode_y) += std::conj(amp * (-mode_y / norm));
    out.u.y.mode(-mode_x, -mode_y) += std::conj(amp * (mode_x / norm));
    out.u = helmholtz_project(std::move(out.u));
    return out;
}

ExponentialFit fit_exponential(const std::vector<double>& times, const std::vector<double>& values,
                               double t_min) {
    require(times.size() == values.size(), ErrorCode::InvalidArgument,
            "fit_exponential: size mismatch");
    std::vector<double> ts, ys;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] >= t_min && values[i] > 0.0) {
            ts.push_back(times[i]);
            ys.push_back(std::log(values[i]));
        }
    }
    require(ts.size() >= 3, ErrorCode::Precondition, "fit_exponential: too few usable samples");

    const double m = static_cast<double>(ts.size());
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        st += ts[i];
        sy += ys[i];
        stt += ts[i] * ts[i];
        sty += ts[i] * ys[i];
    }
    ExponentialFit fit;
    const double denom = m * stt - st * st;
    fit.rate = (m * sty - st * sy) / denom;
    fit.log_intercept = (sy - fit.rate * st) / m;

    double ss_res = 0.0, ss_tot = 0.0;
    const double y_mean = sy / m;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double pred = fit.log_intercept + fit.rate * ts[i];
        ss_res += sq(ys[i] - pred);
        ss_tot += sq(ys[i] - y_mean);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace chemoflow
