#pragma once

#include <span>
#include <utility>

#include "spot/pair.hpp"
#include "spot/policy.hpp"

namespace spot::objectives {

struct RewardConfig {
  double beta = 0.1;
};

/// Per-pair reward snapshot: the quantities behind the reward-evolution plots.
struct RewardRecord {
  double r_chosen = 0.0;
  double r_rejected = 0.0;
  double margin = 0.0;          // r_chosen - r_rejected, exactly
  double lambda_chosen = 0.0;   // 1 - sigmoid(r_chosen), in (0, 1)
  int step = 0;
};

/// Running reward-shift threshold. delta is 0 until the first update; after
/// that it is a convex combination of past batch means of (r+ + r-)/2.
struct DeltaTracker {
  double delta = 0.0;
  double alpha = 0.1;  // EMA coefficient in (0, 1]
  bool initialized = false;
};

double sigmoid(double z) noexcept;

/// log sigma(z), computed as -log1p(e^-z) / z - log1p(e^z) by sign.
double log_sigmoid(double z) noexcept;

/// The elastic tether 1 - sigma(r), evaluated as sigma(-r) so it keeps full
/// precision deep in saturation. Strictly decreasing, range (0, 1).
double tether_coefficient(double r);

/// beta * (log pi_theta(y|x) - log pi_ref(y|x)). Policies must share shape.
double implicit_reward(const PolicyParams& policy, const PolicyParams& reference,
                       const RewardConfig& cfg, const TokenSequence& prompt,
                       const TokenSequence& response);

struct SftResult {
  double loss;
  GradientTable grad;
};

struct LossResult {
  double loss;
  GradientTable grad;
  RewardRecord record;
};

/// Negative log-likelihood of the chosen response; gradient carries the unit
/// coefficient.
SftResult loss_sft(const PolicyParams& policy, const TokenSequence& prompt,
                   const TokenSequence& chosen);

/// -log sigma(r+). The gradient is exactly tether_coefficient(r+) * beta times
/// the SFT gradient, entrywise; that factorization is load-bearing and tested.
LossResult loss_reward_sft(const PolicyParams& policy, const PolicyParams& reference,
                           const RewardConfig& cfg, const TokenSequence& prompt,
                           const TokenSequence& chosen);

/// -log sigma(r+ - r-): the Bradley-Terry ranking loss over the margin.
LossResult loss_dpo(const PolicyParams& policy, const PolicyParams& reference,
                    const RewardConfig& cfg, const ContrastivePair& pair);

/// -log sigma(r+) - log sigma(-r-): decoupled binary classification with the
/// implicit reward as the logit.
LossResult loss_spot_bce(const PolicyParams& policy, const PolicyParams& reference,
                         const RewardConfig& cfg, const ContrastivePair& pair);

/// BCE with both logits shifted by the tracker's delta, which is treated as a
/// constant (no gradient flows through the tracker).
LossResult loss_spot_bco(const PolicyParams& policy, const PolicyParams& reference,
                         const RewardConfig& cfg, const ContrastivePair& pair,
                         const DeltaTracker& tracker);

/// Folds one batch of (r+, r-) pairs into the tracker: the batch statistic is
/// the mean of (r+ + r-)/2; the first batch seeds delta, later batches blend
/// with weight alpha. Empty batches are rejected.
void update_delta(DeltaTracker& tracker,
                  std::span<const std::pair<double, double>> batch_rewards);

}  // namespace spot::objectives
