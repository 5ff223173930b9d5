#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "argen/rng.hpp"
#include "argen/schedule.hpp"

namespace argen {

inline constexpr std::size_t kLatentDim = 12;   // 4 identity + 8 AU dims
inline constexpr std::size_t kTextDim = 32;     // condition embedding c
inline constexpr std::size_t kTimeEmbDim = 8;

// Multi-scale sinusoidal embedding of the (training-schedule) timestep.
Eigen::VectorXd time_embedding(std::size_t t);

struct DenoiserConfig {
    std::size_t latent_dim = kLatentDim;
    std::size_t text_dim = kTextDim;
    std::vector<std::size_t> hidden = {128, 128};
};

// Feed-forward noise predictor eps_theta(z_t, t, c, r). Input is
// [z_t | time_emb | c | r | null_flag]; the unconditional branch zeroes the
// condition slots and sets the flag. Smooth nonlinearity x * sigmoid(x),
// linear output of latent_dim.
struct DenoiserParams {
    DenoiserConfig config;
    std::vector<Eigen::MatrixXd> weights;  // weights[l]: out x in
    std::vector<Eigen::VectorXd> biases;

    std::size_t input_dim() const {
        return config.latent_dim * 2 + kTimeEmbDim + config.text_dim + 1;
    }
};

DenoiserParams init_denoiser(const DenoiserConfig& config, RngStream& rng);

// Raw eps_theta forward pass. null_cond selects the reserved null embedding.
Eigen::VectorXd denoiser_predict(const DenoiserParams& params, const Latent& z_t,
                                 std::size_t t, const Eigen::VectorXd& c,
                                 const Latent& r, bool null_cond);

// Classifier-free guided prediction:
//   eps_uncond + g * (eps_cond - eps_uncond)
Eigen::VectorXd predict_guided(const DenoiserParams& params, const Latent& z_t,
                               std::size_t t, const Eigen::VectorXd& c,
                               const Latent& r, double g);

// One reverse DDPM step. sigma_t^2 = beta_t; the t = 1 step is deterministic.
// t_embed is the original training-schedule index used for conditioning
// (equals t for an unrestricted schedule).
Latent reverse_step(const Latent& z_t, std::size_t t, const Latent& eps_hat,
                    const NoiseSchedule& sched, RngStream& rng);

struct DenoiserBatchItem {
    Latent z0;
    std::size_t t = 1;       // training-schedule step
    Eigen::VectorXd c;
    Latent r;
    bool null_cond = false;
    Latent eps;              // the noise actually added
};

// Deterministic MSE loss E||eps - eps_theta(z_t, t, .)||^2 over a fixed batch
// (z_t built from z0, t, eps via the schedule), plus its gradient. Exposed so
// the finite-difference oracle in tests can probe it directly.
double denoiser_loss_and_grad(const DenoiserParams& params,
                              const std::vector<DenoiserBatchItem>& batch,
                              const NoiseSchedule& sched,
                              std::vector<Eigen::MatrixXd>* grad_w,
                              std::vector<Eigen::VectorXd>* grad_b);

struct TrainSample {
    Latent z0;
    Eigen::VectorXd c;
    Latent r;
};

struct DenoiserTrainConfig {
    std::size_t epochs = 200;
    double lr = 1e-3;
    std::size_t batch_size = 64;
    double cond_dropout = 0.1;
};

struct DenoiserTrainResult {
    DenoiserParams params;
    std::vector<double> loss_per_epoch;
};

DenoiserTrainResult train_denoiser(const std::vector<TrainSample>& dataset,
                                   const NoiseSchedule& sched,
                                   const DenoiserConfig& arch,
                                   const DenoiserTrainConfig& config, RngStream& rng);

// Checkpoint IO: weights in one ARGT tensor + a JSON manifest describing
// layer sizes, the schedule hash and the seed.
void save_denoiser(const std::string& dir, const DenoiserParams& params,
                   const std::string& schedule_hash, std::uint64_t seed);
DenoiserParams load_denoiser(const std::string& dir);

}  // namespace argen
