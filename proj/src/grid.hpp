#pragma once

// Torus geometry and the two field representations.
//
// Mode m in {-N/2,...,N/2-1}^2 carries the wavenumber xi(m) = m/L in cycles
// per unit length; the angular wavenumber is kappa = 2*pi*|xi|. Spectral
// coefficients are Fourier-series coefficients: forward transform scales by
// 1/N^2, so a constant field a has coefficient a at m = 0 and
// ||f||_L2^2 = L^2 * sum |f_hat(m)|^2.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "errors.hpp"

namespace chemoflow {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct SpectralGrid {
    int n = 0;            // points per side, even
    double length = 0.0;  // side length L
    double dealias_fraction = 2.0 / 3.0;

    SpectralGrid() = default;
    SpectralGrid(int n_, double length_, double dealias_fraction_ = 2.0 / 3.0)
        : n(n_), length(length_), dealias_fraction(dealias_fraction_) {
        require(n > 0 && n % 2 == 0, ErrorCode::InvalidArgument, "grid: N must be positive and even");
        require(length > 0.0, ErrorCode::InvalidArgument, "grid: L must be positive");
        require(dealias_fraction > 0.0 && dealias_fraction <= 1.0, ErrorCode::InvalidArgument,
                "grid: dealias fraction must lie in (0,1]");
    }

    std::size_t size() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }

    // signed mode number for FFT index i in [0,N)
    int mode(int i) const { return i < n / 2 ? i : i - n; }

    double xi(int m) const { return static_cast<double>(m) / length; }
    double kappa(int m) const { return kTwoPi * xi(m); }

    double xi_abs2(int mx, int my) const {
        return (static_cast<double>(mx) * mx + static_cast<double>(my) * my) / (length * length);
    }
    double kappa_abs2(int mx, int my) const { return kTwoPi * kTwoPi * xi_abs2(mx, my); }

    bool dealias_keep(int mx, int my) const {
        const double cut = dealias_fraction * n / 2.0;
        return std::abs(mx) <= cut && std::abs(my) <= cut;
    }

    double min_nonzero_xi() const { return 1.0 / length; }
    double max_xi() const { return xi(n / 2) * 1.41421356237309515; }

    double dx() const { return length / n; }
    double cell_area() const { return dx() * dx(); }

    friend bool operator==(const SpectralGrid& a, const SpectralGrid& b) {
        return a.n == b.n && a.length == b.length && a.dealias_fraction == b.dealias_fraction;
    }
    friend bool operator!=(const SpectralGrid& a, const SpectralGrid& b) { return !(a == b); }
};

inline void require_same_grid(const SpectralGrid& a, const SpectralGrid& b) {
    require(a == b, ErrorCode::GridMismatch, "operands live on different grids");
}

// Physical-space samples, row-major: index = iy*N + ix, x = ix*L/N.
struct Field {
    SpectralGrid grid;
    std::vector<double> v;

    Field() = default;
    explicit Field(const SpectralGrid& g) : grid(g), v(g.size(), 0.0) {}

    double& at(int ix, int iy) { return v[static_cast<std::size_t>(iy) * grid.n + ix]; }
    double at(int ix, int iy) const { return v[static_cast<std::size_t>(iy) * grid.n + ix]; }
};

// Fourier coefficients in FFT index order, same layout as Field.
struct SpectralField {
    SpectralGrid grid;
    std::vector<std::complex<double>> c;

    SpectralField() = default;
    explicit SpectralField(const SpectralGrid& g) : grid(g), c(g.size(), {0.0, 0.0}) {}

    std::complex<double>& at(int ix, int iy) { return c[static_cast<std::size_t>(iy) * grid.n + ix]; }
    std::complex<double> at(int ix, int iy) const { return c[static_cast<std::size_t>(iy) * grid.n + ix]; }

    // coefficient of signed mode (mx,my)
    std::complex<double>& mode(int mx, int my) {
        const int ix = mx >= 0 ? mx : mx + grid.n;
        const int iy = my >= 0 ? my : my + grid.n;
        return at(ix, iy);
    }
    std::complex<double> mode(int mx, int my) const {
        const int ix = mx >= 0 ? mx : mx + grid.n;
        const int iy = my >= 0 ? my : my + grid.n;
        return at(ix, iy);
    }
};

struct VectorField {
    Field x, y;
    bool divergence_free = false;
};

struct SpectralVectorField {
    SpectralField x, y;
    bool divergence_free = false;

    SpectralVectorField() = default;
    explicit SpectralVectorField(const SpectralGrid& g) : x(g), y(g) {}
};

// Per-mode loop helper: f(linear_index, mx, my).
template <typename F>
void for_each_mode(const SpectralGrid& g, F&& f) {
    std::size_t idx = 0;
    for (int iy = 0; iy < g.n; ++iy) {
        const int my = g.mode(iy);
        for (int ix = 0; ix < g.n; ++ix, ++idx) {
            f(idx, g.mode(ix), my);
        }
    }
}

}  // namespace chemoflow
