#include "spot/pair.hpp"

#include "spot/errors.hpp"

namespace spot {

namespace {

const TokenSequence& tokens_of(const SeqOrText& s, const char* what) {
  if (const auto* seq = std::get_if<TokenSequence>(&s)) {
    return *seq;
  }
  throw InvalidInputError(std::string("pair field '") + what +
                          "' holds text, not token ids");
}

}  // namespace

const TokenSequence& ContrastivePair::prompt_tokens() const {
  return tokens_of(prompt, "prompt");
}

const TokenSequence& ContrastivePair::rejected_tokens() const {
  return tokens_of(rejected, "rejected");
}

const TokenSequence& ContrastivePair::chosen_tokens() const {
  return tokens_of(chosen, "chosen");
}

bool records_equal(const ContrastivePair& a, const ContrastivePair& b) {
  return a.prompt == b.prompt && a.rejected == b.rejected && a.chosen == b.chosen &&
         a.change_ratio == b.change_ratio && a.oracle_id == b.oracle_id;
}

}  // namespace spot
