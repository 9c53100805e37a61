#pragma once

#include <string>
#include <variant>

#include "spot/vocab.hpp"

namespace spot {

/// Sequences travel either as token ids (toy policy) or as raw text (remote
/// students whose tokenization we do not know). The dataset format admits both.
using SeqOrText = std::variant<TokenSequence, std::string>;

inline bool holds_tokens(const SeqOrText& s) {
  return std::holds_alternative<TokenSequence>(s);
}

/**
 * One unit of training data: prompt x, rejected response y-, rectified
 * response y+, and the edit fraction between them. created_at is bookkeeping
 * set when the pair is built and is intentionally not serialized, so dataset
 * files are byte-stable across identical runs.
 */
struct ContrastivePair {
  SeqOrText prompt;
  SeqOrText rejected;
  SeqOrText chosen;
  double change_ratio = 0.0;
  std::string oracle_id;
  std::string created_at;

  bool tokenized() const {
    return holds_tokens(prompt) && holds_tokens(rejected) && holds_tokens(chosen);
  }

  const TokenSequence& prompt_tokens() const;
  const TokenSequence& rejected_tokens() const;
  const TokenSequence& chosen_tokens() const;
};

/// Equality on the serialized fields (everything except created_at).
bool records_equal(const ContrastivePair& a, const ContrastivePair& b);

}  // namespace spot
