#include "argen/guidance.hpp"

#include <cmath>

#include "argen/tensor.hpp"

namespace argen {

namespace {

double kernel(double u, double a, double b) {
    // 0^0 = 1 convention at the endpoints
    double left = (a == 1.0) ? 1.0 : std::pow(u, a - 1.0);
    double right = (b == 1.0) ? 1.0 : std::pow(1.0 - u, b - 1.0);
    return left * right;
}

double kernel_max(double a, double b) {
    if (a == 1.0 && b == 1.0) return 1.0;
    if (a == 1.0) return 1.0;               // mode at u = 0
    if (b == 1.0) return 1.0;               // mode at u = 1
    double mode = (a - 1.0) / (a + b - 2.0);
    return kernel(mode, a, b);
}

}  // namespace

double guidance_at(double u, const GuidanceCurveParams& p) {
    if (!(p.a >= 1.0) || !(p.b >= 1.0)) throw Error("guidance: need a >= 1 and b >= 1");
    if (p.g_min > p.g_max) throw Error("guidance: g_min > g_max");
    double k = kernel(u, p.a, p.b) / kernel_max(p.a, p.b);
    return p.g_min + (p.g_max - p.g_min) * k;
}

double guidance_curve(std::size_t m, const GuidanceCurveParams& p) {
    if (p.M < 2) throw Error("guidance: M must be >= 2");
    if (m < 1 || m > p.M) throw Error("guidance: frame index out of range");
    return guidance_at(static_cast<double>(m) / static_cast<double>(p.M), p);
}

}  // namespace argen
