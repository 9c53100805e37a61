#include "spot/policy.hpp"

#include <algorithm>
#include <cmath>

#include "spot/errors.hpp"

namespace spot {

namespace {

constexpr int kMaxOrder = 3;

std::size_t pow_size(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= static_cast<std::size_t>(base);
  }
  return out;
}

void validate_scoring_inputs(const PolicyParams& params, const TokenSequence& prompt,
                             const TokenSequence& response) {
  if (prompt.empty()) {
    throw InvalidInputError("log_prob: prompt must be non-empty");
  }
  if (response.empty()) {
    throw InvalidInputError("log_prob: response must be non-empty");
  }
  if (!response.ends_with_eos()) {
    throw InvalidInputError("log_prob: response must end with EOS");
  }
  validate_tokens(params.vocab(), prompt, "log_prob prompt");
  validate_tokens(params.vocab(), response, "log_prob response");
}

}  // namespace

// ---------------------------------------------------------------------------
// ContextWindow
// ---------------------------------------------------------------------------

ContextWindow::ContextWindow(int order, int vocab_size)
    : order_(order), vocab_size_(vocab_size) {
  if (order < 1 || order > kMaxOrder) {
    throw InvalidInputError("context order must be in [1, 3]");
  }
  if (vocab_size < 3) {
    throw InvalidInputError("vocab size must be >= 3");
  }
  window_.fill(Vocab::kBos);
  recompute();
}

void ContextWindow::push(TokenId t) {
  for (int i = 0; i + 1 < order_; ++i) {
    window_[static_cast<std::size_t>(i)] = window_[static_cast<std::size_t>(i + 1)];
  }
  window_[static_cast<std::size_t>(order_ - 1)] = t;
  recompute();
}

void ContextWindow::recompute() {
  std::size_t code = 0;
  for (int i = 0; i < order_; ++i) {
    code = code * static_cast<std::size_t>(vocab_size_) +
           static_cast<std::size_t>(window_[static_cast<std::size_t>(i)]);
  }
  code_ = code;
}

// ---------------------------------------------------------------------------
// PolicyParams
// ---------------------------------------------------------------------------

PolicyParams::PolicyParams(Vocab vocab, int order)
    : vocab_(std::move(vocab)), order_(order) {
  if (order_ < 1 || order_ > kMaxOrder) {
    throw InvalidInputError("policy order must be in [1, 3]");
  }
  if (vocab_.size() < 3) {
    throw InvalidInputError("policy vocab must have at least 3 tokens");
  }
  num_contexts_ = pow_size(vocab_.size(), order_);
  logits_.assign(num_contexts_ * static_cast<std::size_t>(vocab_.size()), 0.0);
}

std::span<const double> PolicyParams::row(std::size_t context) const {
  return {logits_.data() + context * static_cast<std::size_t>(vocab_.size()),
          static_cast<std::size_t>(vocab_.size())};
}

std::span<double> PolicyParams::row(std::size_t context) {
  return {logits_.data() + context * static_cast<std::size_t>(vocab_.size()),
          static_cast<std::size_t>(vocab_.size())};
}

double PolicyParams::logit(std::size_t context, TokenId t) const {
  return row(context)[static_cast<std::size_t>(t)];
}

void PolicyParams::set_logit(std::size_t context, TokenId t, double value) {
  row(context)[static_cast<std::size_t>(t)] = value;
}

bool PolicyParams::same_shape(const PolicyParams& other) const noexcept {
  return order_ == other.order_ && vocab_ == other.vocab_;
}

// ---------------------------------------------------------------------------
// GradientTable
// ---------------------------------------------------------------------------

GradientTable::GradientTable(int vocab_size, int order)
    : vocab_size_(vocab_size), order_(order) {
  if (order_ < 1 || order_ > kMaxOrder) {
    throw InvalidInputError("gradient table order must be in [1, 3]");
  }
  num_contexts_ = pow_size(vocab_size_, order_);
  data_.assign(num_contexts_ * static_cast<std::size_t>(vocab_size_), 0.0);
}

GradientTable GradientTable::like(const PolicyParams& params) {
  return GradientTable(params.vocab_size(), params.order());
}

std::span<const double> GradientTable::row(std::size_t context) const {
  return {data_.data() + context * static_cast<std::size_t>(vocab_size_),
          static_cast<std::size_t>(vocab_size_)};
}

std::span<double> GradientTable::row(std::size_t context) {
  return {data_.data() + context * static_cast<std::size_t>(vocab_size_),
          static_cast<std::size_t>(vocab_size_)};
}

double GradientTable::entry(std::size_t context, TokenId t) const {
  return row(context)[static_cast<std::size_t>(t)];
}

void GradientTable::scale(double s) {
  for (double& v : data_) {
    v *= s;
  }
}

void GradientTable::add_scaled(const GradientTable& other, double s) {
  if (other.data_.size() != data_.size()) {
    throw InvalidInputError("gradient table shape mismatch in add_scaled");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += s * other.data_[i];
  }
}

double GradientTable::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double GradientTable::l2_norm() const noexcept {
  double s = 0.0;
  for (double v : data_) {
    s += v * v;
  }
  return std::sqrt(s);
}

bool GradientTable::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

// ---------------------------------------------------------------------------
// Scoring
// ---------------------------------------------------------------------------

double row_log_softmax_at(std::span<const double> row, TokenId t) {
  const double m = *std::max_element(row.begin(), row.end());
  double sum = 0.0;
  for (double v : row) {
    sum += std::exp(v - m);
  }
  return row[static_cast<std::size_t>(t)] - m - std::log(sum);
}

void row_softmax(std::span<const double> row, std::vector<double>& out) {
  out.resize(row.size());
  const double m = *std::max_element(row.begin(), row.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = std::exp(row[i] - m);
    sum += out[i];
  }
  for (double& v : out) {
    v /= sum;
  }
}

double log_prob(const PolicyParams& params, const TokenSequence& prompt,
                const TokenSequence& response) {
  validate_scoring_inputs(params, prompt, response);
  ContextWindow ctx(params.order(), params.vocab_size());
  for (TokenId t : prompt.tokens) {
    ctx.push(t);
  }
  double lp = 0.0;
  for (TokenId t : response.tokens) {
    lp += row_log_softmax_at(params.row(ctx.code()), t);
    ctx.push(t);
  }
  return lp;
}

GradientTable log_prob_grad(const PolicyParams& params, const TokenSequence& prompt,
                            const TokenSequence& response) {
  validate_scoring_inputs(params, prompt, response);
  ContextWindow ctx(params.order(), params.vocab_size());
  for (TokenId t : prompt.tokens) {
    ctx.push(t);
  }
  GradientTable grad = GradientTable::like(params);
  std::vector<double> probs;
  for (TokenId t : response.tokens) {
    row_softmax(params.row(ctx.code()), probs);
    auto out = grad.row(ctx.code());
    for (std::size_t v = 0; v < probs.size(); ++v) {
      out[v] -= probs[v];
    }
    out[static_cast<std::size_t>(t)] += 1.0;
    ctx.push(t);
  }
  return grad;
}

}  // namespace spot
