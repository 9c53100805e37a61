#pragma once

#include <cstdint>

#include "spot/policy.hpp"
#include "spot/vocab.hpp"

namespace spot {

struct SampleConfig {
  double temperature = 0.7;
  double top_p = 0.8;
  int max_len = 64;        // content tokens drawn before EOS is forced
  std::uint64_t seed = 0;
};

/**
 * Autoregressive nucleus draw, seeded and fully deterministic (the uniform
 * variates are derived from mt19937_64 directly, not through library
 * distributions). Per step: logits are divided by temperature, BOS is masked
 * out of the candidate set, tokens are sorted by descending probability (ties
 * broken by ascending id), the smallest prefix reaching cumulative mass
 * >= top_p is kept and renormalized, and one token is drawn. Generation stops
 * at EOS; after max_len content tokens EOS is appended. The result always
 * ends with EOS and never contains BOS.
 */
TokenSequence sample(const PolicyParams& params, const TokenSequence& prompt,
                     const SampleConfig& cfg);

}  // namespace spot
