#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "spot/vocab.hpp"

namespace spot {

/**
 * Rolling encoder for the last `order` tokens, BOS-padded on the left so the
 * window is always full. code() is the base-V integer with the most recent
 * token as the least significant digit; it indexes PolicyParams rows.
 */
class ContextWindow {
 public:
  ContextWindow(int order, int vocab_size);

  void push(TokenId t);
  std::size_t code() const noexcept { return code_; }
  int order() const noexcept { return order_; }

 private:
  int order_;
  int vocab_size_;
  std::array<TokenId, 3> window_{};  // window_[0] is the oldest of the kept tokens
  std::size_t code_ = 0;

  void recompute();
};

/**
 * Log-linear n-gram policy: one softmax row of V logits per context, V^n
 * contexts. Serves as both the trainable policy and, via a plain copy, the
 * frozen reference. Value semantics; scoring and sampling never mutate.
 */
class PolicyParams {
 public:
  PolicyParams(Vocab vocab, int order);  // zero logits (uniform next-token law)

  const Vocab& vocab() const noexcept { return vocab_; }
  int order() const noexcept { return order_; }
  int vocab_size() const noexcept { return vocab_.size(); }
  std::size_t num_contexts() const noexcept { return num_contexts_; }

  std::span<const double> row(std::size_t context) const;
  std::span<double> row(std::size_t context);
  double logit(std::size_t context, TokenId t) const;
  void set_logit(std::size_t context, TokenId t, double value);

  const std::vector<double>& data() const noexcept { return logits_; }
  std::vector<double>& data() noexcept { return logits_; }

  bool same_shape(const PolicyParams& other) const noexcept;

  friend bool operator==(const PolicyParams&, const PolicyParams&) = default;

 private:
  Vocab vocab_;
  int order_;
  std::size_t num_contexts_;
  std::vector<double> logits_;  // row-major [context][token]
};

/**
 * dObjective/dLogit table, same shape as the policy it was taken against.
 * Rows for contexts a sequence never visits stay exactly zero, and every
 * nonzero row is mean-free (softmax gradients live on the simplex tangent).
 */
class GradientTable {
 public:
  GradientTable(int vocab_size, int order);
  static GradientTable like(const PolicyParams& params);

  int vocab_size() const noexcept { return vocab_size_; }
  int order() const noexcept { return order_; }
  std::size_t num_contexts() const noexcept { return num_contexts_; }

  std::span<const double> row(std::size_t context) const;
  std::span<double> row(std::size_t context);
  double entry(std::size_t context, TokenId t) const;

  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

  void scale(double s);
  /// this += s * other (shapes must match).
  void add_scaled(const GradientTable& other, double s);
  double max_abs() const noexcept;
  double l2_norm() const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const GradientTable&, const GradientTable&) = default;

 private:
  int vocab_size_;
  int order_;
  std::size_t num_contexts_;
  std::vector<double> data_;
};

/// Stable log-softmax of one logit row evaluated at `t` (max-subtracted).
double row_log_softmax_at(std::span<const double> row, TokenId t);

/// Stable softmax of one logit row into `out` (resized to row size).
void row_softmax(std::span<const double> row, std::vector<double>& out);

/**
 * Sum over response steps of log softmax(logits[ctx_t])[y_t], where ctx_t is
 * the last n tokens of the BOS-padded prompt followed by the response prefix.
 * The response must be non-empty and end with EOS; the prompt must be
 * non-empty. Always <= 0.
 */
double log_prob(const PolicyParams& params, const TokenSequence& prompt,
                const TokenSequence& response);

/**
 * d log_prob / d logits: entry [c][v] = sum over steps t with ctx_t = c of
 * (1[y_t = v] - softmax(logits[c])[v]).
 */
GradientTable log_prob_grad(const PolicyParams& params, const TokenSequence& prompt,
                            const TokenSequence& response);

}  // namespace spot
