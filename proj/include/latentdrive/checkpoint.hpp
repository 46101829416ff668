#pragma once

#include <cstdint>
#include <string>

#include <torch/torch.h>

#include "latentdrive/archive.hpp"
#include "latentdrive/config.hpp"
#include "latentdrive/latent_model.hpp"
#include "latentdrive/policy.hpp"

namespace latentdrive {

/// Stores every parameter and buffer of `module` as "<prefix>.<name>".
void put_module(ArrayArchive& archive, const std::string& prefix, const torch::nn::Module& module);
/// Copies archived tensors into `module`. Throws LoadError on a missing entry
/// or a shape mismatch.
void get_module(const ArrayArchive& archive, const std::string& prefix, torch::nn::Module& module);

struct CheckpointInfo {
  AppConfig config;
  std::int64_t agent_step = 0;
  std::string reason;  // "eval", "final" or "fault: <term>"
};

/// Model, agent (online and target critics) and the run config.
void save_checkpoint(const std::string& path, const CheckpointInfo& info, const LatentModel& model,
                     const SacAgent& agent);

struct LoadedCheckpoint {
  CheckpointInfo info;
  LatentModel model{nullptr};
  std::shared_ptr<SacAgent> agent;
};

/// Throws LoadError on a missing or corrupt file or an inconsistent config.
LoadedCheckpoint load_checkpoint(const std::string& path);

/// "step_00012000.ldck"
std::string checkpoint_name(std::int64_t agent_step);

}  // namespace latentdrive
