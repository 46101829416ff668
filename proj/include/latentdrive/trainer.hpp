#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "latentdrive/config.hpp"
#include "latentdrive/latent_model.hpp"
#include "latentdrive/policy.hpp"
#include "latentdrive/replay.hpp"
#include "latentdrive/worldsim.hpp"

namespace latentdrive {

/// [1, 3, H, W] float tensor of an image.
torch::Tensor image_to_tensor(const Image& img);
/// Inverse of image_to_tensor for a [3, H, W] tensor; values clamped to [0, 1].
Image tensor_to_image(const torch::Tensor& chw);

/// Single-threaded deterministic torch kernels.
void configure_determinism();

struct EvalReport {
  double mean_return = 0.0;  // discounted per tick with policy.gamma
  double return_std = 0.0;   // population std across episodes
  double mean_undiscounted = 0.0;
  double collision_rate = 0.0;  // fraction of episodes ending in a collision
  double mask_error = 0.0;      // pixel difference of decoded masks over every evaluated tick
  int episodes = 0;
  std::vector<double> returns;
};

/// Runs `episodes` episodes of the stochastic policy with filtering and acting
/// at every tick. Episode placements depend on `seed` only; policy noise on
/// `seed` and `noise_stream`. Leaves model and agent untouched.
EvalReport evaluate(LatentModel& model, SacAgent& agent, const AppConfig& config, int episodes, std::uint64_t seed,
                    std::uint64_t noise_stream = 0);

/// Same loop with uniformly random actions and no learned components; the
/// mask error is not measured.
EvalReport evaluate_random_policy(const AppConfig& config, int episodes, std::uint64_t seed);

struct TrainLogRow {
  std::int64_t agent_step = 0;
  std::int64_t env_ticks = 0;
  std::int64_t episodes = 0;
  EvalReport eval;
  // Means over the updates since the previous row; NaN when there were none.
  double recon_x = 0.0, recon_m = 0.0, kl_first = 0.0, kl_steps = 0.0, model_total = 0.0;
  double critic_loss = 0.0, actor_loss = 0.0;
  std::int64_t model_updates = 0;
  std::int64_t rl_updates = 0;
};

std::string log_header();
std::string log_line(const TrainLogRow& row);

/// One stored agent step as seen by the collector.
struct CollectRecord {
  std::vector<float> action;
  double reward = 0.0;  // sum over the executed ticks
  int ticks = 0;
  bool episode_end = false;
  sim::DoneReason reason = sim::DoneReason::kNone;
  std::uint64_t episode_seed = 0;
};

struct TrainResult {
  std::vector<TrainLogRow> rows;
  std::string final_checkpoint;
};

/// Joint model and actor-critic training. With an empty out_dir nothing is
/// written to disk.
class Trainer {
 public:
  Trainer(AppConfig config, std::string out_dir);

  /// Picks an action (random during warmup), repeats it for up to frame_skip
  /// ticks, stores the step and updates the latent belief.
  CollectRecord collect_step();
  /// One model step on model_batch windows; returns the loss breakdown.
  ModelLossBreakdown model_update();
  /// One critic step, one actor step and a target update on policy.batch
  /// transitions filtered from freshly sampled windows. Returns {critic, actor}.
  std::pair<double, double> rl_update();

  /// Runs to total_steps with evaluation, logging and checkpoints.
  TrainResult run();

  const AppConfig& config() const { return config_; }
  ReplayBuffer& replay() { return replay_; }
  LatentModel& model() { return model_; }
  SacAgent& agent() { return *agent_; }
  const sim::DrivingEnv& env() const { return env_; }
  std::int64_t agent_step() const { return agent_step_; }
  std::int64_t env_ticks() const { return env_ticks_; }
  std::int64_t model_updates() const { return model_updates_; }
  std::int64_t rl_updates() const { return rl_updates_; }

 private:
  void start_episode();
  torch::Tensor noise(std::vector<std::int64_t> sizes);
  std::string save(const std::string& name, const std::string& reason);

  AppConfig config_;
  std::string out_dir_;
  std::mt19937_64 rng_;
  torch::Generator gen_;
  LatentModel model_{nullptr};
  std::shared_ptr<SacAgent> agent_;
  std::unique_ptr<torch::optim::Adam> model_opt_, critic_opt_, actor_opt_;
  sim::DrivingEnv env_;
  ReplayBuffer replay_;
  std::optional<OnlineFilter> filter_;
  torch::Tensor z_;
  std::uint64_t episode_seed_ = 0;
  std::int64_t agent_step_ = 0;
  std::int64_t env_ticks_ = 0;
  std::int64_t episodes_ = 0;
  std::int64_t model_updates_ = 0;
  std::int64_t rl_updates_ = 0;
};

}  // namespace latentdrive
