#include "lp.hpp"

#include <algorithm>
#include <cmath>

#include "smoothstep.hpp"

namespace chemoflow {

double lp_chi(double t) {
    return 1.0 - smooth_step((t - 0.75) / (7.0 / 12.0));
}

double lp_phi(double t) {
    return lp_chi(0.5 * t) - lp_chi(t);
}

DyadicRange dyadic_range(const SpectralGrid& g) {
    const double kappa_min = kTwoPi * g.min_nonzero_xi();
    const double kappa_max = kTwoPi * g.max_xi();
    DyadicRange r;
    // phi(2^-j kappa) != 0 requires 3/4 < 2^-j kappa < 8/3.
    r.j_min = static_cast<int>(std::floor(std::log2(kappa_min / (8.0 / 3.0))));
    r.j_max = static_cast<int>(std::ceil(std::log2(kappa_max / 0.75)));
    return r;
}

SpectralField dyadic_block(const SpectralField& f, int j) {
    SpectralField out(f.grid);
    const double scale = std::ldexp(1.0, -j);  // 2^-j
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        if (mx == 0 && my == 0)
            return;
        const double kappa = std::sqrt(f.grid.kappa_abs2(mx, my));
        const double w = lp_phi(scale * kappa);
        if (w != 0.0)
            out.c[i] = w * f.c[i];
    });
    return out;
}

namespace {

double block_lp(const SpectralField& block, double p) {
    if (p == 2.0)
        return l2_norm(block);
    const Field phys = to_physical(block);
    if (std::isinf(p))
        return linf_norm(phys);
    return lp_norm(phys, p);
}

double lr_accumulate(const std::vector<double>& terms, double r) {
    if (std::isinf(r)) {
        double m = 0.0;
        for (double t : terms)
            m = std::max(m, t);
        return m;
    }
    double s = 0.0;
    for (double t : terms)
        s += std::pow(t, r);
    return std::pow(s, 1.0 / r);
}

}  // namespace

double besov_norm(const SpectralField& f, const BesovIndex& idx) {
    require(idx.p >= 1.0 && idx.r >= 1.0, ErrorCode::InvalidArgument, "besov_norm: p, r must be >= 1");
    const DyadicRange range = dyadic_range(f.grid);
    std::vector<double> terms;
    terms.reserve(range.j_max - range.j_min + 2);
    for (int j = range.j_min; j <= range.j_max; ++j) {
        const double norm = block_lp(dyadic_block(f, j), idx.p);
        if (norm > 0.0)
            terms.push_back(norm * std::pow(2.0, idx.s * j));
    }
    if (!idx.homogeneous) {
        // mean mode as one extra entry, unit weight
        SpectralField mean(f.grid);
        mean.c[0] = f.c[0];
        const double norm = block_lp(mean, idx.p);
        if (norm > 0.0)
            terms.push_back(norm);
    }
    return lr_accumulate(terms, idx.r);
}

double besov_norm(const Field& f, const BesovIndex& idx) {
    return besov_norm(to_spectral(f), idx);
}

double besov_norm(const SpectralVectorField& f, const BesovIndex& idx) {
    return besov_norm(f.x, idx) + besov_norm(f.y, idx);
}

double sobolev_norm(const SpectralField& f, double s) {
    double acc = 0.0;
    for_each_mode(f.grid, [&](std::size_t i, int mx, int my) {
        acc += std::pow(1.0 + f.grid.kappa_abs2(mx, my), s) * std::norm(f.c[i]);
    });
    return f.grid.length * std::sqrt(acc);
}

double sobolev_norm(const Field& f, double s) {
    return sobolev_norm(to_spectral(f), s);
}

double verify_bilinear_estimate(const SpectralVectorField& f, const SpectralField& g, double alpha,
                                double p, double r, BilinearForm form) {
    require_same_grid(f.x.grid, g.grid);
    if (form == BilinearForm::TransportGeneral)
        require(alpha > 0.5 && alpha <= 1.0, ErrorCode::InvalidArgument,
                "verify_bilinear_estimate: alpha must lie in (1/2, 1]");

    // f . grad g, dealiased pseudo-spectral product
    const SpectralVectorField dg = gradient(g);
    const Field fx = to_physical(f.x), fy = to_physical(f.y);
    const Field gx = to_physical(dg.x), gy = to_physical(dg.y);
    Field prod(g.grid);
    for (std::size_t i = 0; i < prod.v.size(); ++i)
        prod.v[i] = fx.v[i] * gx.v[i] + fy.v[i] * gy.v[i];
    const SpectralField num_field = dealias(to_spectral(prod));

    double num = 0.0, den = 0.0;
    switch (form) {
        case BilinearForm::TransportGeneral:
            num = besov_norm(num_field, {-alpha, p, r});
            den = besov_norm(f, {1.0 - 2.0 * alpha + 2.0 / p, p, r}) * besov_norm(g, {alpha, p, r});
            break;
        case BilinearForm::TransportThreeQuarters:
            num = besov_norm(num_field, {-0.75, p, r});
            den = besov_norm(f, {-0.25 + 2.0 / p, p, r}) * besov_norm(g, {0.5, p, r});
            break;
        case BilinearForm::TransportGradInf: {
            num = besov_norm(num_field, {-0.25, p, r});
            const double grad_inf = std::max(linf_norm(gx), linf_norm(gy));
            den = grad_inf * besov_norm(f, {0.75, p, r});
            break;
        }
    }
    if (num == 0.0)
        return 0.0;
    require(den > 0.0, ErrorCode::Precondition, "verify_bilinear_estimate: zero denominator");
    return num / den;
}

std::pair<double, double> verify_frac_lap_equiv(const SpectralField& f, double s, double alpha,
                                                double p, double r) {
    const double num = besov_norm(fractional_laplacian(f, alpha), BesovIndex{s, p, r});
    const double den = besov_norm(f, BesovIndex{s + 2.0 * alpha, p, r});
    require(den > 0.0 && num > 0.0, ErrorCode::Precondition,
            "verify_frac_lap_equiv: norm vanishes, ratio undefined");
    return {num / den, den / num};
}

std::vector<BlockNorms> block_spectrum(const SpectralField& f, double p) {
    const DyadicRange range = dyadic_range(f.grid);
    std::vector<BlockNorms> out;
    for (int j = range.j_min; j <= range.j_max; ++j) {
        const SpectralField b = dyadic_block(f, j);
        out.push_back({j, l2_norm(b), block_lp(b, p)});
    }
    return out;
}

}  // namespace chemoflow
