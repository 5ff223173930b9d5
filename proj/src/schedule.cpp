#include "argen/schedule.hpp"

#include <cmath>

namespace argen {

NoiseSchedule build_schedule(std::size_t T_max, double beta_start, double beta_end) {
    if (T_max == 0) throw Error("build_schedule: T_max must be >= 1");
    if (!(beta_start > 0.0) || !(beta_end < 1.0) || beta_start > beta_end)
        throw Error("build_schedule: need 0 < beta_start <= beta_end < 1");
    NoiseSchedule s;
    s.T_max = T_max;
    s.betas.resize(T_max);
    s.alpha_bars.resize(T_max);
    s.orig_steps.resize(T_max);
    double abar = 1.0;
    for (std::size_t t = 0; t < T_max; ++t) {
        double frac = (T_max == 1) ? 0.0 : static_cast<double>(t) / static_cast<double>(T_max - 1);
        double beta = beta_start + (beta_end - beta_start) * frac;
        s.betas[t] = beta;
        abar *= (1.0 - beta);
        s.alpha_bars[t] = abar;
        s.orig_steps[t] = t + 1;
    }
    return s;
}

NoiseSchedule restrict_schedule(const NoiseSchedule& sched, std::size_t T) {
    if (T == 0 || T > sched.T_max) throw Error("restrict_schedule: T out of range");
    NoiseSchedule s;
    s.T_max = T;
    s.betas.resize(T);
    s.alpha_bars.resize(T);
    s.orig_steps.resize(T);
    double prev_abar = 1.0;
    for (std::size_t i = 0; i < T; ++i) {
        // tau_i = round((i+1) * T_max / T); tau_T = T_max exactly
        std::size_t tau = static_cast<std::size_t>(
            std::llround(static_cast<double>((i + 1) * sched.T_max) / static_cast<double>(T)));
        if (tau < 1) tau = 1;
        if (tau > sched.T_max) tau = sched.T_max;
        double abar = sched.alpha_bar(tau);
        s.alpha_bars[i] = abar;
        s.betas[i] = 1.0 - abar / prev_abar;
        s.orig_steps[i] = tau;
        prev_abar = abar;
    }
    return s;
}

Latent forward_noise(const Latent& z0, std::size_t t, const Latent& eps,
                     const NoiseSchedule& sched) {
    if (t < 1 || t > sched.T_max) throw Error("forward_noise: t out of range");
    if (eps.size() != z0.size()) throw Error("forward_noise: dimension mismatch");
    double abar = sched.alpha_bar(t);
    return std::sqrt(abar) * z0 + std::sqrt(1.0 - abar) * eps;
}

}  // namespace argen
