#include "spot/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "spot/errors.hpp"

namespace spot {

namespace {

double uniform01(std::mt19937_64& rng) {
  // 53 random bits -> [0, 1); identical on every conforming platform.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TokenSequence sample(const PolicyParams& params, const TokenSequence& prompt,
                     const SampleConfig& cfg) {
  if (!(cfg.temperature > 0.0)) {
    throw InvalidInputError("sample: temperature must be > 0");
  }
  if (!(cfg.top_p > 0.0) || cfg.top_p > 1.0) {
    throw InvalidInputError("sample: top_p must be in (0, 1]");
  }
  if (cfg.max_len < 1) {
    throw InvalidInputError("sample: max_len must be >= 1");
  }
  if (prompt.empty()) {
    throw InvalidInputError("sample: prompt must be non-empty");
  }
  validate_tokens(params.vocab(), prompt, "sample prompt");

  const int v_size = params.vocab_size();
  std::mt19937_64 rng(cfg.seed);
  ContextWindow ctx(params.order(), v_size);
  for (TokenId t : prompt.tokens) {
    ctx.push(t);
  }

  std::vector<double> scaled(static_cast<std::size_t>(v_size));
  std::vector<double> probs;
  std::vector<TokenId> order(static_cast<std::size_t>(v_size));

  TokenSequence out;
  for (int step = 0; step < cfg.max_len; ++step) {
    auto row = params.row(ctx.code());
    for (int t = 0; t < v_size; ++t) {
      scaled[static_cast<std::size_t>(t)] = row[static_cast<std::size_t>(t)] / cfg.temperature;
    }
    scaled[static_cast<std::size_t>(Vocab::kBos)] =
        -std::numeric_limits<double>::infinity();  // BOS never sampled
    row_softmax(scaled, probs);

    for (int t = 0; t < v_size; ++t) {
      order[static_cast<std::size_t>(t)] = t;
    }
    std::sort(order.begin(), order.end(), [&](TokenId a, TokenId b) {
      double pa = probs[static_cast<std::size_t>(a)];
      double pb = probs[static_cast<std::size_t>(b)];
      if (pa != pb) {
        return pa > pb;
      }
      return a < b;  // deterministic nucleus under ties
    });

    // Smallest prefix with cumulative mass >= top_p. Rounding can leave the
    // total a hair under 1, so the full list is the fallback.
    std::size_t kept = order.size();
    double cum = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      cum += probs[static_cast<std::size_t>(order[i])];
      if (cum >= cfg.top_p) {
        kept = i + 1;
        break;
      }
    }
    double kept_mass = 0.0;
    for (std::size_t i = 0; i < kept; ++i) {
      kept_mass += probs[static_cast<std::size_t>(order[i])];
    }

    const double u = uniform01(rng) * kept_mass;
    TokenId picked = order[kept - 1];
    double acc = 0.0;
    for (std::size_t i = 0; i < kept; ++i) {
      acc += probs[static_cast<std::size_t>(order[i])];
      if (u < acc) {
        picked = order[i];
        break;
      }
    }

    out.tokens.push_back(picked);
    if (picked == Vocab::kEos) {
      return out;
    }
    ctx.push(picked);
  }
  out.tokens.push_back(Vocab::kEos);
  return out;
}

}  // namespace spot
