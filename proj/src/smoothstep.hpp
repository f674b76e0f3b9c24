#pragma once

// The exp(-1/x) transition used by both the dyadic partition of unity and the
// theta_R cutoff. s(x) = e(x) / (e(x) + e(1-x)) rises smoothly from 0 at x<=0
// to 1 at x>=1, with e(0)=0 exactly, so the endpoint values are exact and the
// transition is symmetric: s(1/2) = 1/2.

#include <cmath>

namespace chemoflow {

inline double bump_core(double x) {
    return x > 0.0 ? std::exp(-1.0 / x) : 0.0;
}

inline double smooth_step(double x) {
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    const double a = bump_core(x);
    const double b = bump_core(1.0 - x);
    return a / (a + b);
}

}  // namespace chemoflow
