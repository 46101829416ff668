#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latentdrive/latent_model.hpp"
#include "latentdrive/policy.hpp"
#include "latentdrive/replay.hpp"
#include "latentdrive/worldsim.hpp"

namespace latentdrive {

struct TrainConfig {
  std::int64_t total_steps = 100000;  // agent steps, warmup included
  int frame_skip = 4;
  int grad_steps_per_agent_step = 1;
  double model_lr = 1e-4;
  int model_batch = 32;
  int warmup_steps = 1000;
  int eval_every = 5000;
  int eval_episodes = 10;
  int checkpoint_every = 0;  // 0: checkpoint at every evaluation
  double grad_clip = 100.0;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Every tunable of a run. Derived quantities (image sizes of the model and
/// replay, latent and action dimensions of the policy) are filled in by
/// finalize() rather than set directly.
struct AppConfig {
  sim::EnvConfig env;
  ModelConfig model;
  PolicyConfig policy;
  ReplayConfig replay;
  TrainConfig trainer;

  /// Propagates shared dimensions and validates every section.
  void finalize();
};

/// Parses INI text:
///   # comment          ; comment
///   [section]
///   key = value
/// Sections: env, model, policy, replay, trainer. Unset keys keep their
/// defaults. Throws ConfigError carrying the line number for syntax errors,
/// unknown sections or keys, duplicates and unparsable values.
AppConfig parse_config(const std::string& text);
/// Reads and parses a file. Throws ConfigError when unreadable.
AppConfig load_config(const std::string& path);
/// Canonical INI rendering of every key; parse_config(to_ini(c)) == c.
std::string to_ini(const AppConfig& config);

struct ConfigKeyDoc {
  std::string section;
  std::string key;
  std::string default_value;
  std::string doc;
};
/// All documented keys with their default values.
std::vector<ConfigKeyDoc> config_reference();

}  // namespace latentdrive
