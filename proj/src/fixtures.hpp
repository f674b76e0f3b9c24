#pragma once

// Deterministic random fields for the invariant suite and tests. Band limits
// are given in angular wavenumber so fixtures keep the same spectral content
// across resolutions (same seed, same coefficients).

#include <random>

#include "model.hpp"

namespace chemoflow {

// Hermitian-symmetric coefficients drawn i.i.d. on modes with
// kappa_lo <= kappa < kappa_hi (and |m_i| inside the dealias mask).
inline SpectralField make_random_field(const SpectralGrid& g, uint64_t seed, double kappa_lo,
                                       double kappa_hi, bool zero_mean = true) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    SpectralField f(g);
    const int max_m = static_cast<int>(kappa_hi / (kTwoPi / g.length)) + 1;
    for (int my = -max_m; my <= max_m; ++my) {
        for (int mx = -max_m; mx <= max_m; ++mx) {
            // draw each Hermitian pair once
            if (my < 0 || (my == 0 && mx < 0))
                continue;
            const double re = dist(rng), im = dist(rng);
            if (std::abs(mx) >= g.n / 2 || std::abs(my) >= g.n / 2)
                continue;
            if (!g.dealias_keep(mx, my))
                continue;
            const double kappa = std::sqrt(g.kappa_abs2(mx, my));
            if (kappa < kappa_lo || kappa >= kappa_hi)
                continue;
            if (mx == 0 && my == 0) {
                if (!zero_mean)
                    f.mode(0, 0) = re;
                continue;
            }
            f.mode(mx, my) = std::complex<double>(re, im);
            f.mode(-mx, -my) = std::complex<double>(re, -im);
        }
    }
    return f;
}

inline SpectralVectorField make_random_divfree(const SpectralGrid& g, uint64_t seed, double kappa_lo,
                                               double kappa_hi) {
    SpectralVectorField u;
    u.x = make_random_field(g, seed, kappa_lo, kappa_hi);
    u.y = make_random_field(g, seed + 1, kappa_lo, kappa_hi);
    return helmholtz_project(std::move(u));
}

// Smooth positive n, c plus a band-limited divergence-free velocity.
inline State make_random_state(const SpectralGrid& g, uint64_t seed, double amplitude = 0.3) {
    const double kappa_hi = kTwoPi / g.length * (g.n / 8.0);
    SpectralField dn = make_random_field(g, seed, 0.0, kappa_hi);
    SpectralField dc = make_random_field(g, seed + 7, 0.0, kappa_hi);
    State s;
    Field n = to_physical(dn);
    Field c = to_physical(dc);
    double n_inf = linf_norm(n), c_inf = linf_norm(c);
    for (auto& v : n.v)
        v = 0.5 + amplitude * (n_inf > 0 ? v / n_inf : 0.0);
    for (auto& v : c.v)
        v = 0.5 + amplitude * (c_inf > 0 ? v / c_inf : 0.0);
    s.n = to_spectral(n);
    s.c = to_spectral(c);
    s.u = make_random_divfree(g, seed + 13, 0.0, kappa_hi);
    const double u_norm = l2_norm(s.u);
    if (u_norm > 0.0) {
        const double scale = amplitude * g.length / u_norm;
        for (auto& v : s.u.x.c)
            v *= scale;
        for (auto& v : s.u.y.c)
            v *= scale;
    }
    return s;
}

}  // namespace chemoflow
