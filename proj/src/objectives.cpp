#include "spot/objectives.hpp"

#include <cmath>

#include "spot/errors.hpp"

namespace spot::objectives {

namespace {

void require_same_shape(const PolicyParams& policy, const PolicyParams& reference) {
  if (!policy.same_shape(reference)) {
    throw InvalidInputError("policy and reference must share vocab and order");
  }
}

}  // namespace

double sigmoid(double z) noexcept {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double log_sigmoid(double z) noexcept {
  if (z >= 0.0) {
    return -std::log1p(std::exp(-z));
  }
  return z - std::log1p(std::exp(z));
}

double tether_coefficient(double r) {
  if (!std::isfinite(r)) {
    throw InvalidInputError("tether_coefficient: reward must be finite");
  }
  return sigmoid(-r);  // == 1 - sigmoid(r), without the cancellation
}

double implicit_reward(const PolicyParams& policy, const PolicyParams& reference,
                       const RewardConfig& cfg, const TokenSequence& prompt,
                       const TokenSequence& response) {
  require_same_shape(policy, reference);
  return cfg.beta * (log_prob(policy, prompt, response) -
                     log_prob(reference, prompt, response));
}

SftResult loss_sft(const PolicyParams& policy, const TokenSequence& prompt,
                   const TokenSequence& chosen) {
  SftResult out{-log_prob(policy, prompt, chosen), log_prob_grad(policy, prompt, chosen)};
  out.grad.scale(-1.0);
  return out;
}

LossResult loss_reward_sft(const PolicyParams& policy, const PolicyParams& reference,
                           const RewardConfig& cfg, const TokenSequence& prompt,
                           const TokenSequence& chosen) {
  require_same_shape(policy, reference);
  const double r = implicit_reward(policy, reference, cfg, prompt, chosen);
  const double lambda = tether_coefficient(r);

  // Scale the SFT gradient by lambda * beta in one product so the Eq-level
  // factorization holds bitwise, not just to rounding.
  GradientTable grad = log_prob_grad(policy, prompt, chosen);
  grad.scale(-(lambda * cfg.beta));

  RewardRecord rec;
  rec.r_chosen = r;
  rec.r_rejected = 0.0;
  rec.margin = rec.r_chosen - rec.r_rejected;
  rec.lambda_chosen = lambda;
  return LossResult{-log_sigmoid(r), std::move(grad), rec};
}

LossResult loss_dpo(const PolicyParams& policy, const PolicyParams& reference,
                    const RewardConfig& cfg, const ContrastivePair& pair) {
  require_same_shape(policy, reference);
  const TokenSequence& prompt = pair.prompt_tokens();
  const double r_chosen = implicit_reward(policy, reference, cfg, prompt, pair.chosen_tokens());
  const double r_rejected =
      implicit_reward(policy, reference, cfg, prompt, pair.rejected_tokens());
  const double margin = r_chosen - r_rejected;

  const double coeff = tether_coefficient(margin) * cfg.beta;
  GradientTable grad = log_prob_grad(policy, prompt, pair.chosen_tokens());
  grad.scale(-coeff);
  grad.add_scaled(log_prob_grad(policy, prompt, pair.rejected_tokens()), coeff);

  RewardRecord rec;
  rec.r_chosen = r_chosen;
  rec.r_rejected = r_rejected;
  rec.margin = margin;
  rec.lambda_chosen = tether_coefficient(r_chosen);
  return LossResult{-log_sigmoid(margin), std::move(grad), rec};
}

LossResult loss_spot_bce(const PolicyParams& policy, const PolicyParams& reference,
                         const RewardConfig& cfg, const ContrastivePair& pair) {
  require_same_shape(policy, reference);
  const TokenSequence& prompt = pair.prompt_tokens();
  const double r_chosen = implicit_reward(policy, reference, cfg, prompt, pair.chosen_tokens());
  const double r_rejected =
      implicit_reward(policy, reference, cfg, prompt, pair.rejected_tokens());

  const double positive_coeff = tether_coefficient(r_chosen) * cfg.beta;
  const double negative_coeff = sigmoid(r_rejected) * cfg.beta;

  GradientTable grad = log_prob_grad(policy, prompt, pair.chosen_tokens());
  grad.scale(-positive_coeff);
  grad.add_scaled(log_prob_grad(policy, prompt, pair.rejected_tokens()), negative_coeff);

  RewardRecord rec;
  rec.r_chosen = r_chosen;
  rec.r_rejected = r_rejected;
  rec.margin = r_chosen - r_rejected;
  rec.lambda_chosen = tether_coefficient(r_chosen);
  const double loss = -log_sigmoid(r_chosen) - log_sigmoid(-r_rejected);
  return LossResult{loss, std::move(grad), rec};
}

LossResult loss_spot_bco(const PolicyParams& policy, const PolicyParams& reference,
                         const RewardConfig& cfg, const ContrastivePair& pair,
                         const DeltaTracker& tracker) {
  require_same_shape(policy, reference);
  const TokenSequence& prompt = pair.prompt_tokens();
  const double r_chosen = implicit_reward(policy, reference, cfg, prompt, pair.chosen_tokens());
  const double r_rejected =
      implicit_reward(policy, reference, cfg, prompt, pair.rejected_tokens());
  const double delta = tracker.delta;  // constant for the whole batch

  const double positive_coeff = tether_coefficient(r_chosen - delta) * cfg.beta;
  const double negative_coeff = sigmoid(r_rejected - delta) * cfg.beta;

  GradientTable grad = log_prob_grad(policy, prompt, pair.chosen_tokens());
  grad.scale(-positive_coeff);
  grad.add_scaled(log_prob_grad(policy, prompt, pair.rejected_tokens()), negative_coeff);

  RewardRecord rec;
  rec.r_chosen = r_chosen;
  rec.r_rejected = r_rejected;
  rec.margin = r_chosen - r_rejected;
  rec.lambda_chosen = tether_coefficient(r_chosen);
  const double loss = -log_sigmoid(r_chosen - delta) - log_sigmoid(-(r_rejected - delta));
  return LossResult{loss, std::move(grad), rec};
}

void update_delta(DeltaTracker& tracker,
                  std::span<const std::pair<double, double>> batch_rewards) {
  if (batch_rewards.empty()) {
    throw InvalidInputError("update_delta: batch must be non-empty");
  }
  double sum = 0.0;
  for (const auto& [r_chosen, r_rejected] : batch_rewards) {
    sum += 0.5 * (r_chosen + r_rejected);
  }
  const double batch_mean = sum / static_cast<double>(batch_rewards.size());
  if (!tracker.initialized) {
    tracker.delta = batch_mean;
    tracker.initialized = true;
  } else {
    tracker.delta = tracker.alpha * batch_mean + (1.0 - tracker.alpha) * tracker.delta;
  }
}

}  // namespace spot::objectives
