#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <torch/torch.h>

namespace latentdrive {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed value of the checked quantity
  double tolerance = 0.0;  // bound the measured value is held to
  std::string detail;
  double seconds = 0.0;
};

struct ValidationOptions {
  std::uint64_t seed = 0;
  int kl_pairs = 100;
  std::int64_t kl_samples = 1'000'000;
  int reward_states = 10'000;
  int env_transitions = 1'000;
  int render_states = 1'000;
  int gradient_coords = 24;   // finite-difference coordinates per loss
  int sac_bridge_iterations = 4000;
  /// Fault injection: negate the closed-form KL before it is checked.
  bool inject_kl_sign_fault = false;
  /// Suites to run by name (see validation_suites); empty runs every suite.
  std::vector<std::string> suites;
};

/// Independent oracle of the driving reward.
double reward_oracle(bool collided, bool out_of_lane, double v_lon, double steer_angle);

std::vector<CheckResult> check_reward(const ValidationOptions& options);
std::vector<CheckResult> check_kl(const ValidationOptions& options);
std::vector<CheckResult> check_gradients(const ValidationOptions& options);
std::vector<CheckResult> check_soft_policy_iteration(const ValidationOptions& options);
std::vector<CheckResult> check_discount_equivalence(const ValidationOptions& options);
std::vector<CheckResult> check_sac_bridge(const ValidationOptions& options);
std::vector<CheckResult> check_rendering(const ValidationOptions& options);
std::vector<CheckResult> check_pixel_diff(const ValidationOptions& options);

/// Suite names in run order: reward, kl, gradient, spi, discount, sac_bridge,
/// render, pixel_diff.
std::vector<std::string> validation_suites();

/// The selected suites in order. Throws UsageError on an unknown suite name.
std::vector<CheckResult> run_validation(const ValidationOptions& options);

/// Central-difference gradient check. Perturbs `coords` randomly chosen
/// coordinates of `params` by +-h and compares with `analytic` (same layout as
/// params). Relative error uses max(|fd|, |analytic|, floor) as denominator.
struct GradientCheck {
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  int coords = 0;
};
GradientCheck finite_difference_check(const std::function<double()>& loss, const std::vector<torch::Tensor>& params,
                                      const std::vector<torch::Tensor>& analytic, int coords, double h, double floor,
                                      std::uint64_t seed);

}  // namespace latentdrive
