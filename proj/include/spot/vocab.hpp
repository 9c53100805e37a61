#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spot {

using TokenId = std::int32_t;

/**
 * Synthetic token alphabet. Ids 0 and 1 are reserved for the begin and end
 * markers; everything else is a content token. Names must be unique and are
 * used by the text bridge (render/parse) between the toy policy and the
 * text-level rectification pipeline.
 */
struct Vocab {
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kEos = 1;

  std::vector<std::string> names;

  /// Builds a vocab of "<bos>", "<eos>" followed by the given content tokens.
  /// Throws InvalidInputError unless the result has at least one content token
  /// and all names are unique.
  static Vocab make(std::vector<std::string> content_names);

  /// Builds a vocab from the full name list (ids are positions). Same checks.
  static Vocab from_names(std::vector<std::string> all_names);

  int size() const noexcept { return static_cast<int>(names.size()); }
  bool valid_token(TokenId t) const noexcept { return t >= 0 && t < size(); }

  /// Id of a token name; throws InvalidInputError if unknown.
  TokenId id_of(std::string_view name) const;

  friend bool operator==(const Vocab&, const Vocab&) = default;
};

/// A prompt or response: ordered token ids, all valid for the bound vocab.
struct TokenSequence {
  std::vector<TokenId> tokens;

  TokenSequence() = default;
  TokenSequence(std::initializer_list<TokenId> ids) : tokens(ids) {}
  explicit TokenSequence(std::vector<TokenId> ids) : tokens(std::move(ids)) {}

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  TokenId back() const { return tokens.back(); }
  bool ends_with_eos() const noexcept {
    return !tokens.empty() && tokens.back() == Vocab::kEos;
  }

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

/// Space-joined token names. With strip_eos, a single trailing EOS is dropped
/// first (the answer span offered to verifiers and oracles excludes it).
std::string render_text(const Vocab& vocab, const TokenSequence& seq, bool strip_eos);

/// Inverse of render_text over whitespace-separated names. Unknown names throw
/// InvalidInputError. With append_eos the result is made scoreable.
TokenSequence parse_text(const Vocab& vocab, std::string_view text, bool append_eos);

/// Throws InvalidInputError unless every id is valid for the vocab.
void validate_tokens(const Vocab& vocab, const TokenSequence& seq, std::string_view what);

}  // namespace spot
