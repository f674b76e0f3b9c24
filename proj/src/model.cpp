#include "model.hpp"

#include <cmath>

#include "smoothstep.hpp"

namespace chemoflow {

Potential make_sine_potential(const SpectralGrid& g, double strength) {
    Field phi(g);
    const double amp = strength * g.length / kTwoPi;
    for (int iy = 0; iy < g.n; ++iy) {
        const double y = iy * g.dx();
        const double val = amp * std::sin(kTwoPi * y / g.length);
        for (int ix = 0; ix < g.n; ++ix)
            phi.at(ix, iy) = val;
    }
    return make_potential(phi);
}

Potential make_potential(const Field& phi) {
    Potential pot;
    pot.phi = phi;
    const SpectralVectorField grad = gradient(to_spectral(phi));
    pot.grad_phi.x = to_physical(grad.x);
    pot.grad_phi.y = to_physical(grad.y);
    return pot;
}

State make_state(const Field& n, const Field& c, const VectorField& u) {
    require_same_grid(n.grid, c.grid);
    require_same_grid(n.grid, u.x.grid);
    require_same_grid(u.x.grid, u.y.grid);
    State s;
    s.n = to_spectral(n);
    s.c = to_spectral(c);
    s.u.x = to_spectral(u.x);
    s.u.y = to_spectral(u.y);
    s.u = helmholtz_project(s.u);
    return s;
}

bool state_finite(const State& s) {
    return all_finite(s.n) && all_finite(s.c) && all_finite(s.u.x) && all_finite(s.u.y);
}

double theta_cutoff(double x, double R) {
    require(R > 0.0, ErrorCode::InvalidArgument, "theta_cutoff: R must be positive");
    if (x < 0.0)
        x = 0.0;
    return 1.0 - smooth_step(x / R - 1.0);
}

namespace {

double field_w1inf(const SpectralField& f) {
    const double sup = linf_norm(to_physical(f));
    const SpectralVectorField g = gradient(f);
    const Field gx = to_physical(g.x), gy = to_physical(g.y);
    double grad_sup = 0.0;
    for (std::size_t i = 0; i < gx.v.size(); ++i)
        grad_sup = std::max(grad_sup, std::hypot(gx.v[i], gy.v[i]));
    return sup + grad_sup;
}

Field pointwise_product(const Field& a, const Field& b) {
    require_same_grid(a.grid, b.grid);
    Field out(a.grid);
    for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] = a.v[i] * b.v[i];
    return out;
}

}  // namespace

double w1inf_norm(const State& s) {
    return std::max(std::max(field_w1inf(s.n), field_w1inf(s.c)),
                    std::max(field_w1inf(s.u.x), field_w1inf(s.u.y)));
}

SpectralField transport(const SpectralVectorField& u, const SpectralField& f) {
    require_same_grid(u.x.grid, f.grid);
    const SpectralVectorField df = gradient(f);
    const Field ux = to_physical(u.x), uy = to_physical(u.y);
    const Field fx = to_physical(df.x), fy = to_physical(df.y);
    Field prod(f.grid);
    for (std::size_t i = 0; i < prod.v.size(); ++i)
        prod.v[i] = ux.v[i] * fx.v[i] + uy.v[i] * fy.v[i];
    return dealias(to_spectral(prod));
}

SpectralField apply_mollifier(const SpectralField& f, const RegularizationParams& params) {
    return params.eps ? mollify(f, *params.eps) : f;
}

SpectralField apply_band_scalar(const SpectralField& f, const RegularizationParams& params) {
    if (!params.k_band)
        return f;
    return params.strict_annulus ? friedrichs_truncate(f, *params.k_band) : low_pass(f, *params.k_band);
}

SpectralVectorField apply_band_velocity(const SpectralVectorField& u, const RegularizationParams& params) {
    if (!params.k_band)
        return u;
    SpectralVectorField out;
    out.x = friedrichs_truncate(u.x, *params.k_band);
    out.y = friedrichs_truncate(u.y, *params.k_band);
    out.divergence_free = u.divergence_free;
    return out;
}

double cutoff_factor(const State& s, const RegularizationParams& params) {
    return params.r_cut ? theta_cutoff(w1inf_norm(s), *params.r_cut) : 1.0;
}

Tendency forcing_terms(const State& s, const RegularizationParams& params, const Potential& pot) {
    const Field n_phys = to_physical(s.n);
    const Field c_phys = to_physical(s.c);
    const Field n_moll = to_physical(apply_mollifier(s.n, params));

    Tendency out;

    // dn = -div(n (grad c * rho)) + n - n^2
    const SpectralVectorField grad_c = gradient(apply_mollifier(s.c, params));
    SpectralVectorField flux;
    flux.x = dealias(to_spectral(pointwise_product(n_phys, to_physical(grad_c.x))));
    flux.y = dealias(to_spectral(pointwise_product(n_phys, to_physical(grad_c.y))));
    out.dn = divergence(flux);
    const SpectralField n_sq = dealias(to_spectral(pointwise_product(n_phys, n_phys)));
    for (std::size_t i = 0; i < out.dn.c.size(); ++i)
        out.dn.c[i] = -out.dn.c[i] + s.n.c[i] - n_sq.c[i];

    // dc = -c (n * rho)
    out.dc = dealias(to_spectral(pointwise_product(c_phys, n_moll)));
    for (auto& c : out.dc.c)
        c = -c;

    // du = P((n grad phi) * rho)
    SpectralVectorField buoy;
    buoy.x = dealias(to_spectral(pointwise_product(n_phys, pot.grad_phi.x)));
    buoy.y = dealias(to_spectral(pointwise_product(n_phys, pot.grad_phi.y)));
    buoy.x = apply_mollifier(buoy.x, params);
    buoy.y = apply_mollifier(buoy.y, params);
    out.du = helmholtz_project(std::move(buoy));

    return out;
}

Tendency rhs(const State& s, const RegularizationParams& params, const Potential& pot, double alpha) {
    require(alpha >= 0.5 && alpha <= 1.0, ErrorCode::InvalidArgument, "rhs: alpha must lie in [1/2, 1]");

    State banded;
    banded.n = apply_band_scalar(s.n, params);
    banded.c = apply_band_scalar(s.c, params);
    banded.u = apply_band_velocity(s.u, params);

    const double theta = cutoff_factor(s, params);

    // advection block B
    SpectralField adv_n = transport(banded.u, banded.n);
    SpectralField adv_c = transport(banded.u, banded.c);
    SpectralVectorField adv_u;
    adv_u.x = transport(banded.u, banded.u.x);
    adv_u.y = transport(banded.u, banded.u.y);
    adv_u = helmholtz_project(std::move(adv_u));

    Tendency forcing = forcing_terms(banded, params, pot);

    Tendency out;
    // J_k^2 A^alpha u equals J_k A^alpha u on the grid (sharp indicator).
    out.dn = laplacian(banded.n);
    out.dc = laplacian(banded.c);
    SpectralVectorField diff_u;
    diff_u.x = fractional_laplacian(banded.u.x, alpha);
    diff_u.y = fractional_laplacian(banded.u.y, alpha);

    adv_n = apply_band_scalar(adv_n, params);
    adv_c = apply_band_scalar(adv_c, params);
    adv_u = apply_band_velocity(adv_u, params);
    forcing.dn = apply_band_scalar(forcing.dn, params);
    forcing.dc = apply_band_scalar(forcing.dc, params);
    forcing.du = apply_band_velocity(forcing.du, params);

    for (std::size_t i = 0; i < out.dn.c.size(); ++i) {
        out.dn.c[i] += theta * (forcing.dn.c[i] - adv_n.c[i]);
        out.dc.c[i] += theta * (forcing.dc.c[i] - adv_c.c[i]);
    }
    out.du = SpectralVectorField(s.grid());
    for (std::size_t i = 0; i < out.du.x.c.size(); ++i) {
        out.du.x.c[i] = -diff_u.x.c[i] + theta * (forcing.du.x.c[i] - adv_u.x.c[i]);
        out.du.y.c[i] = -diff_u.y.c[i] + theta * (forcing.du.y.c[i] - adv_u.y.c[i]);
    }
    out.du.divergence_free = true;
    return out;
}

SpectralField vorticity_rhs(const State& s, const Potential& pot, const RegularizationParams& params,
                            double alpha) {
    require(alpha >= 0.5 && alpha <= 1.0, ErrorCode::InvalidArgument,
            "vorticity_rhs: alpha must lie in [1/2, 1]");

    const SpectralVectorField u_band = apply_band_velocity(s.u, params);
    const SpectralField v = curl2d(u_band);
    const double theta = cutoff_factor(s, params);

    SpectralField adv = transport(u_band, v);
    adv = params.k_band ? friedrichs_truncate(adv, *params.k_band) : adv;

    // curl of the mollified buoyancy; curl annihilates the projection's
    // gradient part, so P drops out.
    const Field n_phys = to_physical(apply_band_scalar(s.n, params));
    SpectralVectorField buoy;
    buoy.x = apply_mollifier(dealias(to_spectral(pointwise_product(n_phys, pot.grad_phi.x))), params);
    buoy.y = apply_mollifier(dealias(to_spectral(pointwise_product(n_phys, pot.grad_phi.y))), params);
    SpectralField curl_force = curl2d(buoy);
    curl_force = params.k_band ? friedrichs_truncate(curl_force, *params.k_band) : curl_force;

    SpectralField out = fractional_laplacian(v, alpha);
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = -out.c[i] + theta * (curl_force.c[i] - adv.c[i]);
    return out;
}

}  // namespace chemoflow
