#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "argen/tensor.hpp"

namespace argen {

using Latent = Eigen::VectorXd;

// Forward-diffusion variance schedule. betas[t-1] is the step-t variance,
// alpha_bars[t-1] the cumulative product of (1 - beta_i) up to t.
// For strided inference the restriction keeps orig_steps so the denoiser can
// be conditioned on the original timestep index.
struct NoiseSchedule {
    std::size_t T_max = 0;
    std::vector<double> betas;
    std::vector<double> alpha_bars;
    std::vector<std::size_t> orig_steps;  // orig_steps[i] = training-schedule index of step i+1

    double beta(std::size_t t) const { return betas.at(t - 1); }
    double alpha_bar(std::size_t t) const { return alpha_bars.at(t - 1); }
    std::size_t orig_step(std::size_t t) const { return orig_steps.at(t - 1); }
};

// Linear beta interpolation over T_max steps. Rejects betas outside (0,1)
// and T_max = 0.
NoiseSchedule build_schedule(std::size_t T_max, double beta_start, double beta_end);

// Evenly spaced T-step subsequence of a training schedule (DDIM-style
// stride). The restricted schedule's effective betas satisfy
// 1 - beta'_i = abar(tau_i) / abar(tau_{i-1}), so its own cumulative products
// equal the original alpha_bars at the selected steps.
NoiseSchedule restrict_schedule(const NoiseSchedule& sched, std::size_t T);

// z_t = sqrt(abar_t) z0 + sqrt(1 - abar_t) eps
Latent forward_noise(const Latent& z0, std::size_t t, const Latent& eps,
                     const NoiseSchedule& sched);

}  // namespace argen
