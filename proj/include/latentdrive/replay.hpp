#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "latentdrive/image.hpp"
#include "latentdrive/latent_model.hpp"

namespace latentdrive {

struct ReplayConfig {
  int capacity_steps = 50000;
  int tau = 10;
  int image_size = 64;
  int action_dim = 2;

  /// Throws ConfigError unless capacity_steps >= tau + 1 and tau >= 1.
  void validate() const;
};

/// One stored agent step. Step k of an episode holds the observation reached
/// by the k-th action together with that action, its reward and its done flag;
/// step 0 holds the reset observation and a zero action.
struct ReplayStep {
  Image camera;
  Image lidar;
  Image mask;
  std::vector<float> action;
  double reward = 0.0;
  bool done = false;
};

/// Episode-structured store sampling aligned windows of tau+1 steps.
/// Images are kept as 8-bit values.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(const ReplayConfig& config);

  const ReplayConfig& config() const { return config_; }

  /// Opens a new episode. Throws UsageError when one is already open.
  void begin_episode();
  /// Throws UsageError when no episode is open, ContractError on a shape
  /// mismatch, and UsageError when the previous step was terminal.
  void push_step(const ReplayStep& step);
  /// Seals the open episode and evicts whole episodes, oldest first, while
  /// more than capacity_steps steps are sealed.
  void end_episode();
  bool episode_open() const { return open_; }

  std::int64_t stored_steps() const;       // sealed plus in-flight
  std::int64_t sealed_steps() const;
  std::int64_t window_count() const;        // valid (episode, offset) pairs
  std::size_t episode_count() const;        // sealed episodes
  std::int64_t total_episodes_sealed() const { return sealed_total_; }

  /// B windows drawn uniformly over all valid (episode, offset) pairs of sealed
  /// episodes. Throws NotReadyError when there is none.
  SequenceBatch sample(int batch, std::mt19937_64& rng) const;

  /// Per-window (episode serial, offset) pairs that `sample` would draw.
  std::vector<std::pair<std::int64_t, int>> sample_indices(int batch, std::mt19937_64& rng) const;

  void dump(const std::string& path) const;
  /// Replaces the contents with a dump. Throws LoadError on a config mismatch.
  void restore(const std::string& path);

 private:
  struct Episode {
    std::int64_t serial = 0;
    int length = 0;
    std::vector<std::uint8_t> camera, lidar, mask;  // [L, H, W, 3]
    std::vector<float> action;                      // [L, action_dim]
    std::vector<float> reward;                      // [L]
    std::vector<std::uint8_t> done;                 // [L]
  };

  std::int64_t windows_in(const Episode& e) const { return std::max(0, e.length - config_.tau); }
  void append_image(std::vector<std::uint8_t>& dst, const Image& img) const;
  void evict();
  // Caller holds the lock.
  std::vector<std::pair<std::int64_t, int>> draw_windows(int batch, std::mt19937_64& rng) const;

  ReplayConfig config_;
  std::deque<Episode> sealed_;
  Episode current_;
  bool open_ = false;
  std::int64_t sealed_steps_ = 0;
  std::int64_t sealed_total_ = 0;
  mutable std::shared_mutex mutex_;
};

}  // namespace latentdrive
