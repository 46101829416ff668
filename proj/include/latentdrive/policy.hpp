#pragma once

#include <vector>

#include <torch/torch.h>

namespace latentdrive {

struct PolicyConfig {
  int latent_dim = 288;
  int action_dim = 2;
  int hidden = 256;
  double alpha = 1.0;   // entropy temperature, fixed
  double gamma = 0.99;
  double target_rho = 0.005;
  double lr = 3e-4;
  int batch = 256;

  void validate() const;
};

inline constexpr double kLogStdMin = -20.0;
inline constexpr double kLogStdMax = 2.0;

/// Tanh-squashed Gaussian draw.
struct PolicySample {
  torch::Tensor action;      // tanh(pre_squash), strictly inside (-1, 1)
  torch::Tensor log_prob;    // [B]
  torch::Tensor pre_squash;  // u
};

/// log(1 - tanh(u)^2) = 2 (log 2 - u - softplus(-2u)), summed over the last dim.
torch::Tensor tanh_log_det(const torch::Tensor& u);

class ActorImpl : public torch::nn::Module {
 public:
  ActorImpl(int latent_dim, int hidden, int action_dim);

  struct Params {
    torch::Tensor mean;
    torch::Tensor log_std;  // clamped to [kLogStdMin, kLogStdMax]
  };
  Params forward(const torch::Tensor& z);
  torch::nn::Linear& head() { return head_; }

 private:
  torch::nn::Linear fc1_{nullptr}, fc2_{nullptr}, head_{nullptr};
};
TORCH_MODULE(Actor);

/// Q(z, a): two hidden layers and a linear scalar head.
class CriticImpl : public torch::nn::Module {
 public:
  CriticImpl(int latent_dim, int hidden, int action_dim);
  /// Returns [B].
  torch::Tensor forward(const torch::Tensor& z, const torch::Tensor& action);
  torch::nn::Linear& head() { return head_; }

 private:
  torch::nn::Linear fc1_{nullptr}, fc2_{nullptr}, head_{nullptr};
};
TORCH_MODULE(Critic);

/// Squashed-Gaussian sample for mean/log_std and standard-normal noise.
PolicySample squashed_sample(const torch::Tensor& mean, const torch::Tensor& log_std, const torch::Tensor& noise);

/// theta_bar <- rho theta + (1 - rho) theta_bar, in place. Throws ContractError on
/// count or shape mismatch.
void soft_update(const std::vector<torch::Tensor>& targets, const std::vector<torch::Tensor>& online, double rho);

/// y = r + gamma (1 - done) v_next, detached.
torch::Tensor soft_bellman_target(const torch::Tensor& reward, const torch::Tensor& done, double gamma,
                                  const torch::Tensor& next_soft_value);

/// 1/2 mean over the batch and both critics of (Q_i - y)^2; `weight` [B]
/// (optional) turns the batch mean into a weighted mean.
torch::Tensor twin_critic_loss(const torch::Tensor& q1, const torch::Tensor& q2, const torch::Tensor& target,
                               const torch::Tensor& weight = {});

/// RL transitions built from filtered latents.
struct Transitions {
  torch::Tensor z;       // [B, latent_dim]
  torch::Tensor action;  // [B, action_dim]
  torch::Tensor reward;  // [B]
  torch::Tensor z_next;  // [B, latent_dim]
  torch::Tensor done;    // [B]
};

enum class ActMode { kStochastic, kDeterministic };

/// Soft actor-critic on latent states: squashed-Gaussian actor, twin critics
/// with min backup, and delayed target critics.
class SacAgent : public torch::nn::Module {
 public:
  explicit SacAgent(const PolicyConfig& config);

  const PolicyConfig& config() const { return config_; }
  Actor& actor() { return actor_; }
  Critic& q1() { return q1_; }
  Critic& q2() { return q2_; }
  Critic& q1_target() { return q1_target_; }
  Critic& q2_target() { return q2_target_; }

  std::vector<torch::Tensor> actor_parameters() const { return actor_->parameters(); }
  std::vector<torch::Tensor> critic_parameters() const;
  std::vector<torch::Tensor> target_parameters() const;

  PolicySample policy_sample(const torch::Tensor& z, const torch::Tensor& noise);
  /// Online critic values [B] for both critics.
  std::pair<torch::Tensor, torch::Tensor> q_values(const torch::Tensor& z, const torch::Tensor& action);
  /// r + gamma (1 - done) (min_i Qbar_i(z', a') - alpha log pi(a'|z')), a' drawn with `noise`.
  torch::Tensor q_target(const torch::Tensor& reward, const torch::Tensor& done, const torch::Tensor& z_next,
                         const torch::Tensor& noise);
  /// Throws TrainingFault when non-finite.
  torch::Tensor critic_loss(const Transitions& batch, const torch::Tensor& next_noise);
  /// mean(alpha log pi(a|z) - min_i Q_i(z, a)) with reparameterised a.
  torch::Tensor actor_loss(const torch::Tensor& z, const torch::Tensor& noise);
  /// Gradients of actor_loss with respect to actor parameters only.
  std::vector<torch::Tensor> actor_gradients(const torch::Tensor& loss);
  void soft_update_targets(double rho);
  torch::Tensor act(const torch::Tensor& z, ActMode mode, const torch::Tensor& noise);

 private:
  PolicyConfig config_;
  Actor actor_{nullptr};
  Critic q1_{nullptr}, q2_{nullptr}, q1_target_{nullptr}, q2_target_{nullptr};
};

// ---- discrete bridge used by the tabular oracle checks

/// Categorical policy over a finite action set: two hidden layers and logits.
class CategoricalActorImpl : public torch::nn::Module {
 public:
  CategoricalActorImpl(int state_dim, int hidden, int actions);
  /// Log-probabilities [B, A].
  torch::Tensor forward(const torch::Tensor& z);

 private:
  torch::nn::Linear fc1_{nullptr}, fc2_{nullptr}, head_{nullptr};
};
TORCH_MODULE(CategoricalActor);

/// Expected soft value sum_a pi(a) (q(a) - alpha log pi(a)) over the action axis.
torch::Tensor discrete_soft_value(const torch::Tensor& log_pi, const torch::Tensor& q, double alpha);
/// mean over states of sum_a pi(a) (alpha log pi(a) - q(a)).
torch::Tensor discrete_actor_loss(const torch::Tensor& log_pi, const torch::Tensor& q, double alpha);

}  // namespace latentdrive
