#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latentdrive/image.hpp"

namespace latentdrive {

// ---- interpretability metric

struct PixelDiffReport {
  double e = 0.0;                 // mean of per_frame
  std::vector<double> per_frame;  // sum |m_hat - m| / (W H C)
  int n = 0;
  int width = 0;
  int height = 0;
  int channels = 3;
};

/// Mean absolute per-pixel gap between decoded and true masks. Throws
/// ContractError on count or shape mismatch.
PixelDiffReport pixel_diff(const std::vector<Image>& decoded, const std::vector<Image>& truth);
double pixel_diff_frame(const Image& decoded, const Image& truth);

// ---- tabular control-as-inference oracles

struct TabularMDP {
  int states = 0;
  int actions = 0;
  std::vector<double> transition;  // [s][a][s'] row-major
  std::vector<double> reward;      // [s][a]
  double gamma = 0.9;

  double p(int s, int a, int s2) const { return transition[(static_cast<std::size_t>(s) * actions + a) * states + s2]; }
  double r(int s, int a) const { return reward[static_cast<std::size_t>(s) * actions + a]; }
  /// Throws ContractError unless every transition row sums to 1 within 1e-12.
  void validate() const;
};

/// Random MDP with Dirichlet(1) transition rows and uniform rewards in [-1, 1].
TabularMDP random_mdp(int states, int actions, double gamma, std::uint64_t seed);

struct SoftPolicyResult {
  std::vector<double> q;       // [s][a]
  std::vector<double> policy;  // [s][a]
  std::vector<double> value;   // [s], soft state value
  int iterations = 0;
};

/// Alternates exact soft policy evaluation and pi ∝ exp(Q / alpha) until
/// max |dQ| < 1e-10. `initial_policy` ([s][a], optional) seeds the iteration.
SoftPolicyResult soft_policy_iteration(const TabularMDP& mdp, double alpha,
                                       const std::vector<double>& initial_policy = {});

/// max |Q - (r + gamma P alpha logsumexp(Q / alpha))| over (s, a).
double soft_bellman_residual(const TabularMDP& mdp, double alpha, const std::vector<double>& q);

/// Exact discounted value of `policy` ([s][a]) from every state.
std::vector<double> policy_value(const TabularMDP& mdp, const std::vector<double>& policy);

struct DiscountEquivalenceReport {
  double analytic = 0.0;    // discounted value from the start state
  double mc_mean = 0.0;     // undiscounted return with an absorbing jump of probability 1 - gamma
  double mc_se = 0.0;
  double gap = 0.0;         // mc_mean - analytic
  double mean_length = 0.0; // steps before absorption
  double absorb_freq = 0.0; // absorptions per step
  double absorb_se = 0.0;
};

/// Monte-Carlo check of the discount-as-absorbing-state construction.
DiscountEquivalenceReport discount_equivalence_check(const TabularMDP& mdp, const std::vector<double>& policy,
                                                     int start_state, int n_rollouts, std::uint64_t seed);

// ---- learning curves

struct Curve {
  std::vector<double> x;
  std::vector<double> y;
};

struct CurveStats {
  std::vector<double> x;
  std::vector<double> mean;
  std::vector<double> stddev;  // population standard deviation across runs
};

/// Mean and standard deviation across runs on the union of their x grids.
/// Runs are linearly interpolated and held constant beyond their own range.
/// Throws ContractError on empty input.
CurveStats aggregate_curves(const std::vector<Curve>& runs);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
  std::vector<double> numeric_column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
void write_curve_csv(const CurveStats& stats, const std::string& path);
/// Line plot of the mean with a shaded +-1 std band.
Image plot_curve(const CurveStats& stats, int width = 480, int height = 320);

}  // namespace latentdrive
