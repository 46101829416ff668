#pragma once

#include <torch/torch.h>

namespace latentdrive {

inline constexpr double kMinStddev = 1e-4;

/// Diagonal Gaussian over the last tensor dimension; leading dims are batch.
struct DiagGaussian {
  torch::Tensor mean;
  torch::Tensor stddev;

  /// stddev = softplus(raw) + kMinStddev.
  static DiagGaussian from_raw(torch::Tensor mean, const torch::Tensor& raw_stddev);
  static DiagGaussian standard_like(const torch::Tensor& mean);

  /// Reparameterised draw: mean + stddev * noise.
  torch::Tensor sample(const torch::Tensor& noise) const;
  /// Log density summed over the last dimension.
  torch::Tensor log_prob(const torch::Tensor& x) const;
  DiagGaussian detached() const { return {mean.detach(), stddev.detach()}; }
};

/// Closed-form KL(q || p) summed over the last dimension.
torch::Tensor kl_diag_gaussian(const DiagGaussian& q, const DiagGaussian& p);

/// Log density of `target` under N(mean, sigma^2) per element, summed over every
/// dimension except the first.
torch::Tensor fixed_sigma_log_likelihood(const torch::Tensor& target, const torch::Tensor& mean,
                                         double sigma);

}  // namespace latentdrive
