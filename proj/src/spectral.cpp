#include "spectral.hpp"

#include <algorithm>
#include <cmath>

namespace chemoflow {

namespace {

bool is_nyquist(const SpectralGrid& g, int m) {
    return m == -g.n / 2;
}

}  // namespace

SpectralField fractional_laplacian(const SpectralField& f, double alpha) {
    require(std::isfinite(alpha) && alpha >= 0.0, ErrorCode::InvalidArgument,
            "fractional_laplacian: alpha must be finite and nonnegative");
    SpectralField out(f.grid);
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        if (mx == 0 && my == 0) {
            out.c[i] = 0.0;
            return;
        }
        out.c[i] = f.c[i] * std::pow(f.grid.kappa_abs2(mx, my), alpha);
    });
    return out;
}

SpectralVectorField helmholtz_project(SpectralVectorField u) {
    require_same_grid(u.x.grid, u.y.grid);
    const SpectralGrid& g = u.x.grid;
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        if (mx == 0 && my == 0)
            return;
        const double m2 = static_cast<double>(mx) * mx + static_cast<double>(my) * my;
        const std::complex<double> s = (static_cast<double>(mx) * u.x.c[i] + static_cast<double>(my) * u.y.c[i]) / m2;
        u.x.c[i] -= static_cast<double>(mx) * s;
        u.y.c[i] -= static_cast<double>(my) * s;
    });
    u.divergence_free = true;
    return u;
}

SpectralField friedrichs_truncate(const SpectralField& f, double k) {
    require(k > 0.0, ErrorCode::InvalidArgument, "friedrichs_truncate: k must be positive");
    SpectralField out(f.grid);
    const double lo2 = 1.0 / (k * k);
    const double hi2 = k * k;
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        const double xi2 = f.grid.xi_abs2(mx, my);
        out.c[i] = (xi2 >= lo2 && xi2 <= hi2) ? f.c[i] : 0.0;
    });
    return out;
}

SpectralField low_pass(const SpectralField& f, double k) {
    require(k > 0.0, ErrorCode::InvalidArgument, "low_pass: k must be positive");
    SpectralField out(f.grid);
    const double hi2 = k * k;
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        out.c[i] = (f.grid.xi_abs2(mx, my) <= hi2) ? f.c[i] : 0.0;
    });
    return out;
}

SpectralField mollify(const SpectralField& f, double eps) {
    require(eps > 0.0, ErrorCode::InvalidArgument, "mollify: eps must be positive");
    SpectralField out(f.grid);
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        out.c[i] = f.c[i] * std::exp(-eps * eps * f.grid.kappa_abs2(mx, my));
    });
    return out;
}

SpectralVectorField gradient(const SpectralField& f) {
    SpectralVectorField out(f.grid);
    const SpectralGrid& g = f.grid;
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        if (is_nyquist(g, mx) || is_nyquist(g, my)) {
            out.x.c[i] = 0.0;
            out.y.c[i] = 0.0;
            return;
        }
        const std::complex<double> iw(0.0, kTwoPi / g.length);
        out.x.c[i] = iw * static_cast<double>(mx) * f.c[i];
        out.y.c[i] = iw * static_cast<double>(my) * f.c[i];
    });
    return out;
}

SpectralField divergence(const SpectralVectorField& u) {
    require_same_grid(u.x.grid, u.y.grid);
    SpectralField out(u.x.grid);
    const SpectralGrid& g = u.x.grid;
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        if (is_nyquist(g, mx) || is_nyquist(g, my)) {
            out.c[i] = 0.0;
            return;
        }
        const std::complex<double> iw(0.0, kTwoPi / g.length);
        out.c[i] = iw * (static_cast<double>(mx) * u.x.c[i] + static_cast<double>(my) * u.y.c[i]);
    });
    return out;
}

SpectralField curl2d(const SpectralVectorField& u) {
    require_same_grid(u.x.grid, u.y.grid);
    SpectralField out(u.x.grid);
    const SpectralGrid& g = u.x.grid;
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        if (is_nyquist(g, mx) || is_nyquist(g, my)) {
            out.c[i] = 0.0;
            return;
        }
        const std::complex<double> iw(0.0, kTwoPi / g.length);
        out.c[i] = iw * (static_cast<double>(mx) * u.y.c[i] - static_cast<double>(my) * u.x.c[i]);
    });
    return out;
}

SpectralField laplacian(const SpectralField& f) {
    SpectralField out = fractional_laplacian(f, 1.0);
    for (auto& c : out.c)
        c = -c;
    return out;
}

SpectralVectorField biot_savart(const SpectralField& vorticity) {
    const SpectralGrid& g = vorticity.grid;
    double linf = 0.0;
    for (const auto& c : vorticity.c)
        linf = std::max(linf, std::abs(c));
    require(std::abs(vorticity.c[0]) <= 1e-12 * std::max(1.0, linf), ErrorCode::Precondition,
            "biot_savart: vorticity must have zero mean on the torus");

    // u_hat = i (xi_2, -xi_1) v_hat / (2 pi |xi|^2) gives curl2d(u) = v.
    SpectralVectorField out(g);
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        if (mx == 0 && my == 0)
            return;
        if (is_nyquist(g, mx) || is_nyquist(g, my))
            return;
        const double xi2 = g.xi_abs2(mx, my);
        const std::complex<double> s = std::complex<double>(0.0, 1.0) * vorticity.c[i] / (kTwoPi * xi2);
        out.x.c[i] = s * g.xi(my);
        out.y.c[i] = -s * g.xi(mx);
    });
    out.divergence_free = true;
    return out;
}

SpectralField dealias(const SpectralField& f) {
    SpectralField out = f;
    dealias_inplace(out);
    return out;
}

void dealias_inplace(SpectralField& f) {
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        if (!f.grid.dealias_keep(mx, my))
            f.c[i] = 0.0;
    });
}

void dealias_inplace(SpectralVectorField& u) {
    dealias_inplace(u.x);
    dealias_inplace(u.y);
}

double l2_norm(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.c)
        s += std::norm(c);
    return f.grid.length * std::sqrt(s);
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid, b.grid);
    double s = 0.0;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        s += (a.c[i] * std::conj(b.c[i])).real();
    return a.grid.length * a.grid.length * s;
}

double l2_norm(const SpectralVectorField& u) {
    const double a = l2_norm(u.x), b = l2_norm(u.y);
    return std::sqrt(a * a + b * b);
}

double l2_inner(const SpectralVectorField& a, const SpectralVectorField& b) {
    return l2_inner(a.x, b.x) + l2_inner(a.y, b.y);
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (double x : f.v)
        s += x * x;
    return f.grid.dx() * std::sqrt(s);
}

double lp_norm(const Field& f, double p) {
    require(p >= 1.0, ErrorCode::InvalidArgument, "lp_norm: p must be >= 1");
    if (std::isinf(p))
        return linf_norm(f);
    double s = 0.0;
    for (double x : f.v)
        s += std::pow(std::abs(x), p);
    return std::pow(s * f.grid.cell_area(), 1.0 / p);
}

double linf_norm(const Field& f) {
    double m = 0.0;
    for (double x : f.v)
        m = std::max(m, std::abs(x));
    return m;
}

double integral(const Field& f) {
    double s = 0.0;
    for (double x : f.v)
        s += x;
    return s * f.grid.cell_area();
}

double homogeneous_sobolev_norm(const SpectralField& f, double s) {
    double acc = 0.0;
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        if (mx == 0 && my == 0)
            return;
        acc += std::pow(f.grid.kappa_abs2(mx, my), s) * std::norm(f.c[i]);
    });
    return f.grid.length * std::sqrt(acc);
}

double homogeneous_sobolev_norm(const SpectralVectorField& u, double s) {
    const double a = homogeneous_sobolev_norm(u.x, s), b = homogeneous_sobolev_norm(u.y, s);
    return std::sqrt(a * a + b * b);
}

double max_divergence_residual(const SpectralVectorField& u) {
    require_same_grid(u.x.grid, u.y.grid);
    const SpectralGrid& g = u.x.grid;
    double worst = 0.0;
    double scale = 0.0;
    for_each_mode(g, [&](std::size_t i, int mx, int my) {
        scale = std::max(scale, std::abs(u.x.c[i]));
        scale = std::max(scale, std::abs(u.y.c[i]));
        if (mx == 0 && my == 0)
            return;
        const double m = std::sqrt(static_cast<double>(mx) * mx + static_cast<double>(my) * my);
        const double r = std::abs(static_cast<double>(mx) * u.x.c[i] + static_cast<double>(my) * u.y.c[i]) / m;
        worst = std::max(worst, r);
    });
    return scale > 0.0 ? worst / scale : 0.0;
}

double hermitian_defect(const SpectralField& f) {
    const SpectralGrid& g = f.grid;
    double worst = 0.0;
    for (int iy = 0; iy < g.n; ++iy) {
        for (int ix = 0; ix < g.n; ++ix) {
            const int jx = (g.n - ix) % g.n;
            const int jy = (g.n - iy) % g.n;
            worst = std::max(worst, std::abs(f.at(ix, iy) - std::conj(f.at(jx, jy))));
        }
    }
    return worst;
}

SpectralField resample_field(const SpectralField& f, const SpectralGrid& target) {
    require(f.grid.length == target.length, ErrorCode::InvalidArgument,
            "resample_field: grids must share the side length");
    SpectralField out(target);
    const int half = std::min(f.grid.n, target.n) / 2;
    for (int my = -half + 1; my < half; ++my)
        for (int mx = -half + 1; mx < half; ++mx)
            out.mode(mx, my) = f.mode(mx, my);
    return out;
}

bool all_finite(const SpectralField& f) {
    for (const auto& c : f.c)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            return false;
    return true;
}

bool all_finite(const Field& f) {
    for (double x : f.v)
        if (!std::isfinite(x))
            return false;
    return true;
}

}  // namespace chemoflow
