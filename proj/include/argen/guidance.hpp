#pragma once

#include <cstddef>

namespace argen {

// Beta-like per-frame guidance modulation. The kernel
//   kappa(u) = u^(a-1) (1-u)^(b-1),  u = m/M
// is normalized by its value at the analytic mode (a-1)/(a+b-2) so the
// ceiling g_max is attainable.
struct GuidanceCurveParams {
    double a = 2.0;
    double b = 2.0;
    double g_min = 7.0;
    double g_max = 11.0;
    std::size_t M = 16;
};

// Continuous curve at u in [0,1].
double guidance_at(double u, const GuidanceCurveParams& p);

// Curve at frame index m in 1..M.
double guidance_curve(std::size_t m, const GuidanceCurveParams& p);

}  // namespace argen
