#include "integrator.hpp"

#include "lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>

#include "parallel.hpp"

namespace chemoflow {

namespace {

// Diffusion decay factors exp(-mu dt); when the Friedrichs layer is active,
// modes outside the band keep factor 1 (their diffusion term is truncated).
struct DecayFactors {
    std::vector<double> scalar_nc;  // full Laplacian
    std::vector<double> velocity;   // (-Delta)^alpha
};

DecayFactors make_decay_factors(const SpectralGrid& g, const SolverConfig& cfg) {
    DecayFactors f;
    f.scalar_nc.resize(g.size());
    f.velocity.resize(g.size());
    const bool banded = cfg.params.k_band.has_value();
    const double k = banded ? *cfg.params.k_band : 0.0;
    const double lo2 = banded ? 1.0 / (k * k) : 0.0;
    const double hi2 = banded ? k * k : 0.0;
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        const double k2 = g.kappa_abs2(mx, my);
        const double xi2 = g.xi_abs2(mx, my);
        bool in_scalar_band = true, in_velocity_band = true;
        if (banded) {
            in_velocity_band = xi2 >= lo2 && xi2 <= hi2;
            in_scalar_band = cfg.params.strict_annulus ? in_velocity_band : xi2 <= hi2;
        }
        f.scalar_nc[i] = in_scalar_band ? std::exp(-k2 * cfg.dt) : 1.0;
        const double mu_u = (mx == 0 && my == 0) ? 0.0 : std::pow(k2, cfg.alpha);
        f.velocity[i] = in_velocity_band ? std::exp(-mu_u * cfg.dt) : 1.0;
    });
    return f;
}

// Advection + chemotaxis + buoyancy tendency of the active layer: the full
// rhs minus diffusion and minus the pointwise reaction terms, which the step
// integrates exactly on its own.
Tendency explicit_tendency(const State& s, const SolverConfig& cfg, const Potential& pot,
                           double theta) {
    const SpectralGrid& g = s.grid();
    const RegularizationParams& params = cfg.params;

    State banded;
    banded.n = apply_band_scalar(s.n, params);
    banded.c = apply_band_scalar(s.c, params);
    banded.u = apply_band_velocity(s.u, params);

    Tendency out;
    out.dn = SpectralField(g);
    out.dc = SpectralField(g);
    out.du = SpectralVectorField(g);
    if (theta == 0.0)
        return out;

    const Field n_phys = to_physical(banded.n);

    // chemotaxis flux divergence: div(n (grad c * rho))
    const SpectralVectorField grad_c = gradient(apply_mollifier(banded.c, params));
    SpectralVectorField flux;
    {
        const Field gx = to_physical(grad_c.x), gy = to_physical(grad_c.y);
        Field fx(g), fy(g);
        for (std::size_t i = 0; i < fx.v.size(); ++i) {
            fx.v[i] = n_phys.v[i] * gx.v[i];
            fy.v[i] = n_phys.v[i] * gy.v[i];
        }
        flux.x = dealias(to_spectral(fx));
        flux.y = dealias(to_spectral(fy));
    }
    SpectralField chemo = divergence(flux);

    SpectralField adv_n = transport(banded.u, banded.n);
    SpectralField adv_c = transport(banded.u, banded.c);
    SpectralVectorField adv_u;
    adv_u.x = transport(banded.u, banded.u.x);
    adv_u.y = transport(banded.u, banded.u.y);
    adv_u = helmholtz_project(std::move(adv_u));

    SpectralVectorField buoy;
    {
        Field bx(g), by(g);
        for (std::size_t i = 0; i < bx.v.size(); ++i) {
            bx.v[i] = n_phys.v[i] * pot.grad_phi.x.v[i];
            by.v[i] = n_phys.v[i] * pot.grad_phi.y.v[i];
        }
        buoy.x = apply_mollifier(dealias(to_spectral(bx)), params);
        buoy.y = apply_mollifier(dealias(to_spectral(by)), params);
        buoy = helmholtz_project(std::move(buoy));
    }

    for (std::size_t i = 0; i < out.dn.c.size(); ++i) {
        out.dn.c[i] = -theta * (adv_n.c[i] + chemo.c[i]);
        out.dc.c[i] = -theta * adv_c.c[i];
        out.du.x.c[i] = theta * (buoy.x.c[i] - adv_u.x.c[i]);
        out.du.y.c[i] = theta * (buoy.y.c[i] - adv_u.y.c[i]);
    }
    out.dn = apply_band_scalar(out.dn, params);
    out.dc = apply_band_scalar(out.dc, params);
    out.du = apply_band_velocity(out.du, params);
    out.du.divergence_free = true;
    return out;
}

}  // namespace

NoiseProvider make_noise_provider(const NoiseModel& model, double dt) {
    if (model.lambda == 0.0)
        return [](long) { return 0.0; };
    return [model, dt](long step_index) {
        const WienerIncrement dw = sample_increments(model, step_index, dt);
        return scalar_increment(model, dw);
    };
}

State step(const State& s, const SolverConfig& cfg, const Potential& pot, long step_index,
           double noise_scalar) {
    const SpectralGrid& g = s.grid();
    const double dt = cfg.dt;
    const double theta = cutoff_factor(s, cfg.params);

    const DecayFactors decay = make_decay_factors(g, cfg);
    const Tendency nl = explicit_tendency(s, cfg, pot, theta);

    State next;
    next.n = SpectralField(g);
    next.c = SpectralField(g);
    next.u = SpectralVectorField(g);
    const double noise_gain = 1.0 + noise_scalar;
    for (std::size_t i = 0; i < g.size(); ++i) {
        next.n.c[i] = decay.scalar_nc[i] * (s.n.c[i] + dt * nl.dn.c[i]);
        next.c.c[i] = decay.scalar_nc[i] * (s.c.c[i] + dt * nl.dc.c[i]);
        next.u.x.c[i] = decay.velocity[i] * (s.u.x.c[i] * noise_gain + dt * nl.du.x.c[i]);
        next.u.y.c[i] = decay.velocity[i] * (s.u.y.c[i] * noise_gain + dt * nl.du.y.c[i]);
    }
    next.u = helmholtz_project(std::move(next.u));

    // reaction flow, pointwise exact
    {
        Field n_phys = to_physical(next.n);
        Field c_phys = to_physical(next.c);
        const Field n_moll = to_physical(apply_mollifier(next.n, cfg.params));
        const double growth = std::exp(theta * dt);
        for (std::size_t i = 0; i < n_phys.v.size(); ++i) {
            const double n0 = n_phys.v[i];
            n_phys.v[i] = n0 * growth / (1.0 + n0 * (growth - 1.0));
            c_phys.v[i] *= std::exp(-theta * dt * n_moll.v[i]);
        }
        next.n = to_spectral(n_phys);
        next.c = to_spectral(c_phys);
    }

    dealias_inplace(next.n);
    dealias_inplace(next.c);
    dealias_inplace(next.u);
    if (cfg.params.k_band) {
        next.n = apply_band_scalar(next.n, cfg.params);
        next.c = apply_band_scalar(next.c, cfg.params);
        next.u = apply_band_velocity(next.u, cfg.params);
    }
    next.u.divergence_free = true;

    if (!state_finite(next))
        throw Error(ErrorCode::Diverged,
                    "solution diverged at step " + std::to_string(step_index + 1));
    return next;
}

Trajectory run(const State& initial, const SolverConfig& cfg, const Potential& pot) {
    return run(initial, cfg, pot, make_noise_provider(cfg.noise, cfg.dt));
}

Trajectory run(const State& initial, const SolverConfig& cfg, const Potential& pot,
               const NoiseProvider& noise) {
    require(cfg.dt > 0.0, ErrorCode::InvalidArgument, "run: dt must be positive");
    require(cfg.t_end >= 0.0, ErrorCode::InvalidArgument, "run: t_end must be nonnegative");
    require(state_finite(initial), ErrorCode::Precondition, "run: initial state is not finite");

    const long steps = std::llround(cfg.t_end / cfg.dt);

    // CFL advisory only; the stiff part is handled exactly.
    {
        const Field ux = to_physical(initial.u.x), uy = to_physical(initial.u.y);
        double umax = 0.0;
        for (std::size_t i = 0; i < ux.v.size(); ++i)
            umax = std::max(umax, std::hypot(ux.v[i], uy.v[i]));
        const double cfl = umax * cfg.dt / initial.grid().dx();
        if (cfl > 1.0)
            std::fprintf(stderr, "chemoflow: warning: advective CFL estimate %.3g exceeds 1\n", cfl);
    }

    const double delta_floor = cfg.delta_floor * std::max(1.0, linf_norm(to_physical(initial.c)));

    Trajectory traj;
    State current = initial;
    DiagnosticsRecord rec = compute_record(current, 0.0, cfg.alpha, delta_floor);
    traj.times.push_back(0.0);
    traj.records.push_back(rec);
    traj.omega.sup_l4_u_fourth = rec.l4_u_fourth;
    double last_record_time = 0.0;
    DiagnosticsRecord last_rec = rec;

    if (cfg.snapshot_every > 0) {
        traj.snapshot_times.push_back(0.0);
        traj.snapshots.push_back(current);
    }

    for (long k = 0; k < steps; ++k) {
        const State prev = current;
        current = step(current, cfg, pot, k, noise(k));
        const double t = (k + 1) * cfg.dt;
        const bool record_now = ((k + 1) % cfg.diagnostics_every == 0) || (k + 1 == steps);
        if (record_now) {
            DiagnosticsRecord r = compute_record(current, t, cfg.alpha, delta_floor);
            r.energy_residual = energy_budget_residual(prev, current, cfg.dt, cfg.alpha, pot,
                                                       cfg.params, cfg.noise.lambda);
            // left-endpoint accumulation of the Omega_N time integrals
            const double span = t - last_record_time;
            traj.omega.int_lap_sqrt_c += span * last_rec.lap_sqrt_c_sq;
            traj.omega.int_quartic_c += span * last_rec.quartic_c;
            traj.omega.sup_l4_u_fourth = std::max(traj.omega.sup_l4_u_fourth, r.l4_u_fourth);
            last_record_time = t;
            last_rec = r;
            traj.times.push_back(t);
            traj.records.push_back(r);
        }
        if (cfg.snapshot_every > 0 && ((k + 1) % cfg.snapshot_every == 0 || k + 1 == steps)) {
            traj.snapshot_times.push_back(t);
            traj.snapshots.push_back(current);
        }
    }
    traj.final_state = current;
    return traj;
}

State resample_state(const State& s, const SpectralGrid& target) {
    State out;
    out.n = resample_field(s.n, target);
    out.c = resample_field(s.c, target);
    out.u.x = resample_field(s.u.x, target);
    out.u.y = resample_field(s.u.y, target);
    out.u.divergence_free = s.u.divergence_free;
    return out;
}

namespace {

double field_diff_l2(const SpectralField& a, const SpectralField& b) {
    if (a.grid == b.grid) {
        SpectralField d(a.grid);
        for (std::size_t i = 0; i < d.c.size(); ++i)
            d.c[i] = a.c[i] - b.c[i];
        return l2_norm(d);
    }
    // compare on the common band
    const SpectralGrid& coarse = a.grid.n <= b.grid.n ? a.grid : b.grid;
    SpectralField d(coarse);
    const int half = coarse.n / 2;
    for (int my = -half + 1; my < half; ++my)
        for (int mx = -half + 1; mx < half; ++mx)
            d.mode(mx, my) = a.mode(mx, my) - b.mode(mx, my);
    return l2_norm(d);
}

double field_diff_h1(const SpectralField& a, const SpectralField& b) {
    const SpectralGrid& coarse = a.grid.n <= b.grid.n ? a.grid : b.grid;
    SpectralField d(coarse);
    const int half = coarse.n / 2;
    for (int my = -half + 1; my < half; ++my)
        for (int mx = -half + 1; mx < half; ++mx)
            d.mode(mx, my) = a.mode(mx, my) - b.mode(mx, my);
    return sobolev_norm(d, 1.0);
}

}  // namespace

RefineResult refine_study(const State& initial, const SolverConfig& cfg, const Potential& pot,
                          RefineAxis axis, const std::vector<double>& levels) {
    require(levels.size() >= 3, ErrorCode::InvalidArgument, "refine_study: need at least 3 levels");

    std::vector<State> finals;
    finals.reserve(levels.size());

    if (axis == RefineAxis::Dt) {
        const double dt_fine = *std::min_element(levels.begin(), levels.end());
        const NoiseProvider fine_noise = make_noise_provider(cfg.noise, dt_fine);
        for (double dt : levels) {
            const double ratio_real = dt / dt_fine;
            const long ratio = std::llround(ratio_real);
            require(std::abs(ratio_real - ratio) < 1e-9 && ratio >= 1, ErrorCode::InvalidArgument,
                    "refine_study: dt levels must be integer multiples of the finest");
            SolverConfig level_cfg = cfg;
            level_cfg.dt = dt;
            level_cfg.diagnostics_every = std::max<long>(1, std::llround(cfg.t_end / dt));
            NoiseProvider agg = [fine_noise, ratio](long step_index) {
                double g = 0.0;
                for (long i = 0; i < ratio; ++i)
                    g += fine_noise(step_index * ratio + i);
                return g;
            };
            finals.push_back(run(initial, level_cfg, pot, agg).final_state);
        }
    } else {
        // levels share one noise path automatically (same seed, same step
        // count); they are independent, so run them data-parallel
        finals.resize(levels.size());
        std::exception_ptr failure;
        std::mutex failure_mutex;
        parallel_for(levels.size(), [&](std::size_t idx) {
            try {
                const double level = levels[idx];
                SolverConfig level_cfg = cfg;
                level_cfg.diagnostics_every = std::max<long>(1, std::llround(cfg.t_end / cfg.dt));
                State init = initial;
                Potential level_pot = pot;
                switch (axis) {
                    case RefineAxis::Eps:
                        level_cfg.params.eps = level;
                        break;
                    case RefineAxis::KBand:
                        level_cfg.params.k_band = level;
                        break;
                    case RefineAxis::Resolution: {
                        const int n = static_cast<int>(std::llround(level));
                        const SpectralGrid target(n, initial.grid().length,
                                                  initial.grid().dealias_fraction);
                        init = resample_state(initial, target);
                        level_pot =
                            make_potential(to_physical(resample_field(to_spectral(pot.phi), target)));
                        break;
                    }
                    default:
                        break;
                }
                finals[idx] = run(init, level_cfg, level_pot).final_state;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
        if (failure)
            std::rethrow_exception(failure);
    }

    RefineResult result;
    result.axis = axis;
    result.levels = levels;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        RefinePair p;
        p.level_coarse = levels[i];
        p.level_fine = levels[i + 1];
        p.diff_l2_n = field_diff_l2(finals[i].n, finals[i + 1].n);
        p.diff_l2_c = field_diff_l2(finals[i].c, finals[i + 1].c);
        const double dux = field_diff_l2(finals[i].u.x, finals[i + 1].u.x);
        const double duy = field_diff_l2(finals[i].u.y, finals[i + 1].u.y);
        p.diff_l2_u = std::sqrt(dux * dux + duy * duy);
        p.diff_l2_total = std::sqrt(p.diff_l2_n * p.diff_l2_n + p.diff_l2_c * p.diff_l2_c +
                                    p.diff_l2_u * p.diff_l2_u);
        const double hn = field_diff_h1(finals[i].n, finals[i + 1].n);
        const double hc = field_diff_h1(finals[i].c, finals[i + 1].c);
        const double hux = field_diff_h1(finals[i].u.x, finals[i + 1].u.x);
        const double huy = field_diff_h1(finals[i].u.y, finals[i + 1].u.y);
        p.diff_h1_total = std::sqrt(hn * hn + hc * hc + hux * hux + huy * huy);
        result.pairs.push_back(p);
    }

    // slope of log(diff) against log(level spacing between pair midpoints)
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i + 1 < result.pairs.size(); ++i) {
        const double d0 = result.pairs[i].diff_l2_total;
        const double d1 = result.pairs[i + 1].diff_l2_total;
        const double r0 = levels[i] / levels[i + 1];
        if (d0 > 0.0 && d1 > 0.0 && r0 > 0.0 && r0 != 1.0) {
            num += std::log(d0 / d1);
            den += std::log(std::abs(r0));
        }
    }
    result.fitted_order = den != 0.0 ? num / den : 0.0;
    return result;
}

}  // namespace chemoflow
