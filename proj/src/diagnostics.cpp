#include "diagnostics.hpp"

#include "lp.hpp"

#include <algorithm>
#include <cmath>

namespace chemoflow {

std::vector<std::string> diagnostics_csv_columns() {
    return {"t",          "mass_n",        "l2_n",         "l3_n_cubed",   "h1_n",
            "entropy",    "weighted_moment", "mass_c",     "linf_c",       "l1_c",
            "grad_sqrt_c_sq", "lap_sqrt_c_sq", "quartic_c", "l2_u",        "l4_u_fourth",
            "dissipation_u",  "l2_v",       "l43_v",        "halpha_v",     "min_n",
            "min_c",      "energy_residual", "clipped_negative"};
}

DiagnosticsRecord compute_record(const State& s, double t, double alpha, double delta_floor) {
    const SpectralGrid& g = s.grid();
    DiagnosticsRecord r;
    r.t = t;

    const Field n = to_physical(s.n);
    const Field c = to_physical(s.c);
    const Field ux = to_physical(s.u.x);
    const Field uy = to_physical(s.u.y);
    const double dA = g.cell_area();

    double mass_n = 0.0, l3 = 0.0, entropy = 0.0, moment = 0.0, min_n = n.v.empty() ? 0.0 : n.v[0];
    long clipped = 0;
    const double cx = 0.5 * g.length, cy = 0.5 * g.length;
    for (int iy = 0; iy < g.n; ++iy) {
        const double y = iy * g.dx();
        for (int ix = 0; ix < g.n; ++ix) {
            const double x = ix * g.dx();
            const double val = n.at(ix, iy);
            mass_n += std::abs(val);
            l3 += std::abs(val) * val * val;
            min_n = std::min(min_n, val);
            if (val > 1e-300)
                entropy += val * std::log(val);
            else if (val < 0.0)
                ++clipped;
            moment += std::hypot(x - cx, y - cy) * val;
        }
    }
    r.mass_n = mass_n * dA;
    r.l3_n_cubed = l3 * dA;
    r.entropy = entropy * dA;
    r.weighted_moment = moment * dA;
    r.min_n = min_n;
    r.l2_n = l2_norm(n);
    r.h1_n = sobolev_norm(s.n, 1.0);

    r.mass_c = integral(c);
    r.l1_c = lp_norm(c, 1.0);
    r.linf_c = 0.0;
    r.min_c = c.v.empty() ? 0.0 : c.v[0];
    for (double val : c.v) {
        r.linf_c = std::max(r.linf_c, std::abs(val));
        r.min_c = std::min(r.min_c, val);
    }

    // sqrt(c) family on the clipped-nonnegative field
    Field sq(g);
    for (std::size_t i = 0; i < sq.v.size(); ++i) {
        if (c.v[i] < 0.0)
            ++clipped;
        sq.v[i] = std::sqrt(std::max(c.v[i], 0.0));
    }
    const SpectralField sq_hat = to_spectral(sq);
    const SpectralVectorField grad_sq = gradient(sq_hat);
    const double gs = l2_norm(grad_sq);
    r.grad_sqrt_c_sq = gs * gs;
    const double ls = l2_norm(laplacian(sq_hat));
    r.lap_sqrt_c_sq = ls * ls;

    const Field gsx = to_physical(grad_sq.x), gsy = to_physical(grad_sq.y);
    double quartic = 0.0;
    for (std::size_t i = 0; i < gsx.v.size(); ++i) {
        const double m2 = gsx.v[i] * gsx.v[i] + gsy.v[i] * gsy.v[i];
        quartic += m2 * m2 / (std::max(c.v[i], 0.0) + delta_floor);
    }
    r.quartic_c = quartic * dA;

    r.l2_u = l2_norm(s.u);
    double l4 = 0.0;
    for (std::size_t i = 0; i < ux.v.size(); ++i) {
        const double m2 = ux.v[i] * ux.v[i] + uy.v[i] * uy.v[i];
        l4 += m2 * m2;
    }
    r.l4_u_fourth = l4 * dA;
    const double diss = homogeneous_sobolev_norm(s.u, alpha);
    r.dissipation_u = diss * diss;

    const SpectralField v = curl2d(s.u);
    r.l2_v = l2_norm(v);
    const Field v_phys = to_physical(v);
    double l43 = 0.0;
    for (double val : v_phys.v)
        l43 += std::pow(std::abs(val), 4.0 / 3.0);
    r.l43_v = l43 * dA;
    r.halpha_v = homogeneous_sobolev_norm(v, alpha);

    r.clipped_negative = clipped;
    return r;
}

double energy_budget_residual(const State& prev, const State& next, double dt, double alpha,
                              const Potential& pot, const RegularizationParams& params, double lambda) {
    require_same_grid(prev.grid(), next.grid());
    const double e_prev = l2_norm(prev.u), e_next = l2_norm(next.u);

    // dissipation integrated exactly along the linear flow:
    // int_0^dt ||(-Delta)^{a/2} e^{-tA} u||^2 dt = sum (1-e^{-2 mu dt})/2 |u_hat|^2,
    // so the residual vanishes identically on pure decay and the remaining
    // terms are the O(dt^2) advection/forcing coupling.
    double diss_sq_dt = 0.0;
    const SpectralGrid& g = prev.grid();
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        if (mx == 0 && my == 0)
            return;
        const double mu = std::pow(g.kappa_abs2(mx, my), alpha);
        const double e2 = std::norm(prev.u.x.c[i]) + std::norm(prev.u.y.c[i]);
        diss_sq_dt += 0.5 * -std::expm1(-2.0 * mu * dt) * e2;
    });
    diss_sq_dt *= g.length * g.length;

    const Field n_phys = to_physical(prev.n);
    SpectralVectorField buoy;
    {
        Field bx(prev.grid()), by(prev.grid());
        for (std::size_t i = 0; i < bx.v.size(); ++i) {
            bx.v[i] = n_phys.v[i] * pot.grad_phi.x.v[i];
            by.v[i] = n_phys.v[i] * pot.grad_phi.y.v[i];
        }
        buoy.x = apply_mollifier(dealias(to_spectral(bx)), params);
        buoy.y = apply_mollifier(dealias(to_spectral(by)), params);
        buoy = helmholtz_project(std::move(buoy));
    }
    const double work = l2_inner(prev.u, buoy);

    double residual = 0.5 * (e_next * e_next - e_prev * e_prev) + diss_sq_dt - dt * work;
    if (lambda > 0.0)
        residual -= 0.5 * lambda * lambda * e_prev * e_prev * dt;
    return residual;
}

double chain_rule_identity_check(const Field& c) {
    double min_c = c.v.empty() ? 0.0 : c.v[0];
    for (double v : c.v)
        min_c = std::min(min_c, v);
    require(min_c > 0.0, ErrorCode::Precondition,
            "chain_rule_identity_check: c must be strictly positive");

    const SpectralField c_hat = to_spectral(c);
    const Field lap_c = to_physical(laplacian(c_hat));

    Field s(c.grid);
    for (std::size_t i = 0; i < s.v.size(); ++i)
        s.v[i] = std::sqrt(c.v[i]);
    const SpectralField s_hat = to_spectral(s);
    const Field lap_s = to_physical(laplacian(s_hat));
    const SpectralVectorField grad_s = gradient(s_hat);
    const Field gx = to_physical(grad_s.x), gy = to_physical(grad_s.y);

    Field err(c.grid);
    for (std::size_t i = 0; i < err.v.size(); ++i) {
        const double rhs = 2.0 * s.v[i] * lap_s.v[i] + 2.0 * (gx.v[i] * gx.v[i] + gy.v[i] * gy.v[i]);
        err.v[i] = lap_c.v[i] - rhs;
    }
    const double denom = l2_norm(lap_c);
    if (denom == 0.0)
        return 0.0;
    return l2_norm(err) / denom;
}

}  // namespace chemoflow
