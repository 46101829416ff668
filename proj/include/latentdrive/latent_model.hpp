#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include <torch/torch.h>

#include "latentdrive/distributions.hpp"

namespace latentdrive {

enum class LatentMode { kFlat, kHierarchical };

std::string to_string(LatentMode m);
LatentMode latent_mode_from_string(const std::string& s);

struct ModelConfig {
  int image_size = 64;
  LatentMode mode = LatentMode::kHierarchical;
  int d1 = 32;
  int d2 = 256;
  int action_dim = 2;
  int hidden = 256;
  int feature_dim = 256;
  // Conv filters per layer; kernels are 5,3,3,3 and a final kernel that
  // reduces the remaining map to 1x1.
  std::array<int, 5> encoder_channels{32, 64, 128, 256, 256};
  // Deconv filters for the first four layers; the last layer emits 3 channels.
  std::array<int, 4> decoder_channels{256, 128, 64, 32};
  double sigma_dec = std::sqrt(0.1);

  /// Dimension of a full latent sample (z1 and z2 concatenated in both modes).
  int latent_dim() const { return d1 + d2; }
  /// Dimension of the factor whose posterior and prior are compared by the KL
  /// terms: the whole latent in flat mode, z1 in hierarchical mode.
  int kl_dim() const { return mode == LatentMode::kFlat ? d1 + d2 : d1; }
  void validate() const;
};

/// Number of stride-2 layers and the final kernel for a square input of side n.
struct ConvSchedule {
  int stride2_layers;
  int final_kernel;
};
ConvSchedule conv_schedule(int image_size);

class ConvEncoderImpl : public torch::nn::Module {
 public:
  explicit ConvEncoderImpl(const ModelConfig& config);
  /// [N, 3, H, W] -> [N, C_last]
  torch::Tensor forward(const torch::Tensor& images);

 private:
  torch::nn::Sequential layers_{nullptr};
};
TORCH_MODULE(ConvEncoder);

class ConvDecoderImpl : public torch::nn::Module {
 public:
  explicit ConvDecoderImpl(const ModelConfig& config);
  /// [N, latent_dim] -> [N, 3, H, W] per-pixel means (unbounded).
  torch::Tensor forward(const torch::Tensor& z);

 private:
  torch::nn::Sequential layers_{nullptr};
};
TORCH_MODULE(ConvDecoder);

/// Two hidden layers followed by a diagonal Gaussian head.
class GaussianMlpImpl : public torch::nn::Module {
 public:
  GaussianMlpImpl(int in, int hidden, int out);
  DiagGaussian forward(const torch::Tensor& x);
  torch::nn::Linear& head() { return head_; }

 private:
  torch::nn::Linear fc1_{nullptr}, fc2_{nullptr}, head_{nullptr};
};
TORCH_MODULE(GaussianMlp);

/// Aligned training windows: tau+1 frames and tau transitions per row.
struct SequenceBatch {
  torch::Tensor camera;  // [B, tau+1, 3, H, W]
  torch::Tensor lidar;   // [B, tau+1, 3, H, W]
  torch::Tensor mask;    // [B, tau+1, 3, H, W]
  torch::Tensor action;  // [B, tau, action_dim]
  torch::Tensor reward;  // [B, tau]
  torch::Tensor done;    // [B, tau], 1 for true terminal transitions

  int64_t batch() const { return camera.size(0); }
  int64_t tau() const { return action.size(1); }
  SequenceBatch to(torch::Dtype dtype) const;
};

/// Negative ELBO and its parts, each averaged over the batch.
struct ModelLossBreakdown {
  torch::Tensor recon_x;   // sum over frames of log p(x_t | z_t), both modalities
  torch::Tensor recon_m;   // sum over frames of log p(m_t | z_t)
  torch::Tensor kl_first;  // KL(q(z_1 | x_1) || p(z_1))
  torch::Tensor kl_steps;  // sum over transitions of KL(q(z_t+1 | .) || p(z_t+1 | z_t, a_t))
  torch::Tensor total;     // -(recon_x + recon_m) + kl_first + kl_steps
};

/// One filtering update: the compared posterior and prior factors plus the
/// full latent sample.
struct FilterStep {
  DiagGaussian posterior;
  DiagGaussian prior;
  torch::Tensor z;
};

struct FilterTrace {
  torch::Tensor z;         // [B, T+1, latent_dim]
  torch::Tensor kl_first;  // [B]
  torch::Tensor kl_steps;  // [B], summed over transitions
};

struct Rollout {
  torch::Tensor z;     // [B, H, latent_dim]
  torch::Tensor mask;  // [B, H, 3, size, size]
};

/// Sequential latent variable model: filtering posterior, learned prior,
/// per-modality encoders and decoders, and the semantic-mask decoder.
///
/// Noise tensors for a latent sample have latent_dim columns. In hierarchical
/// mode the first d1 columns drive z1 and the remaining d2 drive z2.
class LatentModelImpl : public torch::nn::Module {
 public:
  explicit LatentModelImpl(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }

  /// Camera and lidar batches [N, 3, H, W] -> fused features [N, feature_dim].
  torch::Tensor encode_features(const torch::Tensor& camera, const torch::Tensor& lidar);

  DiagGaussian filter_first(const torch::Tensor& features);
  DiagGaussian filter_step(const torch::Tensor& z, const torch::Tensor& features,
                           const torch::Tensor& action);
  DiagGaussian prior_first(int64_t batch, torch::TensorOptions options) const;
  DiagGaussian prior_step(const torch::Tensor& z, const torch::Tensor& action);

  FilterStep first(const torch::Tensor& features, const torch::Tensor& noise);
  FilterStep step(const torch::Tensor& z, const torch::Tensor& features, const torch::Tensor& action,
                  const torch::Tensor& noise);
  /// Samples z_{t+1} from the learned prior transition.
  torch::Tensor prior_sample(const torch::Tensor& z, const torch::Tensor& action, const torch::Tensor& noise);

  struct ObsDecoding {
    torch::Tensor camera;
    torch::Tensor lidar;
  };
  ObsDecoding decode_obs(const torch::Tensor& z);
  torch::Tensor decode_mask(const torch::Tensor& z);

  /// Runs the filtering chain over [B, T+1] frames. noise: [B, T+1, latent_dim].
  FilterTrace filter_sequence(const torch::Tensor& camera, const torch::Tensor& lidar,
                              const torch::Tensor& action, const torch::Tensor& noise);

  /// Throws TrainingFault naming the first non-finite term.
  ModelLossBreakdown model_loss(const SequenceBatch& batch, const torch::Tensor& noise);

  /// Rolls the prior forward from z for actions [B, H, action_dim] with noise
  /// [B, H, latent_dim] and decodes every predicted latent into a mask.
  Rollout predict_rollout(const torch::Tensor& z, const torch::Tensor& actions, const torch::Tensor& noise);

 private:
  torch::Tensor complete_z2_first(const torch::Tensor& z1, const torch::Tensor& noise2);
  torch::Tensor complete_z2_step(const torch::Tensor& z1, const torch::Tensor& z_prev,
                                 const torch::Tensor& action, const torch::Tensor& noise2);
  void check_images(const torch::Tensor& images, const char* what) const;

  ModelConfig config_;
  ConvEncoder camera_encoder_{nullptr}, lidar_encoder_{nullptr};
  torch::nn::Linear fuse_{nullptr};
  ConvDecoder camera_decoder_{nullptr}, lidar_decoder_{nullptr}, mask_decoder_{nullptr};
  // Flat mode: posterior and prior over the whole latent.
  // Hierarchical mode: posterior/prior over z1; the z2 factors are shared.
  GaussianMlp q_first_{nullptr}, q_step_{nullptr}, p_step_{nullptr};
  GaussianMlp p_first_z2_{nullptr}, p_step_z2_{nullptr};
};
TORCH_MODULE(LatentModel);

/// Per-tick recursive filter for acting: filter_first on the first frame and
/// filter_step afterwards.
class OnlineFilter {
 public:
  explicit OnlineFilter(LatentModel model) : model_(std::move(model)) {}

  /// camera, lidar: [B, 3, H, W]; prev_action: [B, action_dim], required on
  /// every call after the first; noise: [B, latent_dim].
  torch::Tensor infer(const torch::Tensor& camera, const torch::Tensor& lidar,
                      const std::optional<torch::Tensor>& prev_action, const torch::Tensor& noise);
  void reset() { z_.reset(); }
  bool started() const { return z_.has_value(); }
  const torch::Tensor& latent() const { return *z_; }

 private:
  LatentModel model_;
  std::optional<torch::Tensor> z_;
};

}  // namespace latentdrive
