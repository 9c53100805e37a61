#include "spot/vocab.hpp"

#include <sstream>
#include <unordered_set>

#include "spot/errors.hpp"

namespace spot {

namespace {

void check_names(const std::vector<std::string>& names) {
  if (names.size() < 3) {
    throw InvalidInputError("vocab needs BOS, EOS and at least one content token");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) {
      throw InvalidInputError("vocab token names must be non-empty");
    }
    if (!seen.insert(n).second) {
      throw InvalidInputError("duplicate vocab token name: " + n);
    }
  }
}

}  // namespace

Vocab Vocab::make(std::vector<std::string> content_names) {
  std::vector<std::string> names;
  names.reserve(content_names.size() + 2);
  names.emplace_back("<bos>");
  names.emplace_back("<eos>");
  for (auto& n : content_names) {
    names.push_back(std::move(n));
  }
  return from_names(std::move(names));
}

Vocab Vocab::from_names(std::vector<std::string> all_names) {
  check_names(all_names);
  Vocab v;
  v.names = std::move(all_names);
  return v;
}

TokenId Vocab::id_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) {
      return static_cast<TokenId>(i);
    }
  }
  throw InvalidInputError("unknown token name: " + std::string(name));
}

std::string render_text(const Vocab& vocab, const TokenSequence& seq, bool strip_eos) {
  validate_tokens(vocab, seq, "render_text");
  std::size_t n = seq.size();
  if (strip_eos && n > 0 && seq.tokens.back() == Vocab::kEos) {
    --n;
  }
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += vocab.names[static_cast<std::size_t>(seq.tokens[i])];
  }
  return out;
}

TokenSequence parse_text(const Vocab& vocab, std::string_view text, bool append_eos) {
  TokenSequence seq;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    seq.tokens.push_back(vocab.id_of(word));
  }
  if (append_eos) {
    seq.tokens.push_back(Vocab::kEos);
  }
  return seq;
}

void validate_tokens(const Vocab& vocab, const TokenSequence& seq, std::string_view what) {
  for (TokenId t : seq.tokens) {
    if (!vocab.valid_token(t)) {
      throw InvalidInputError(std::string(what) + ": token id " + std::to_string(t) +
                              " out of range for vocab of size " +
                              std::to_string(vocab.size()));
    }
  }
}

}  // namespace spot
