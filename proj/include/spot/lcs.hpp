#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spot/pair.hpp"
#include "spot/vocab.hpp"

namespace spot::pipeline {

/// Longest common subsequence length over token ids. Symmetric, and at most
/// min(|a|, |b|). Empty inputs are fine here.
std::size_t lcs_length(std::span<const TokenId> a, std::span<const TokenId> b);

std::vector<std::string> split_words(std::string_view text);

/// LCS over whitespace-delimited words; the unit for remote-mode text whose
/// tokenization is unknown. Numerator and denominator of the change ratio must
/// use the same unit, so text pairs go through this everywhere.
std::size_t lcs_length_words(std::string_view a, std::string_view b);

/// 1 - LCS(y-, y+) / |y+|, in [0, 1]. Empty y+ is rejected.
double change_ratio(const TokenSequence& y_minus, const TokenSequence& y_plus);
double change_ratio_text(std::string_view y_minus, std::string_view y_plus);

/// Dispatches on the pair's representation; mixed token/text pairs are rejected.
double change_ratio_of(const ContrastivePair& pair);

struct FilterResult {
  std::vector<ContrastivePair> kept;     // change_ratio <= gamma, input order
  std::vector<ContrastivePair> dropped;  // the rest, input order
};

/// Splits on the stored change_ratio; the boundary sample (ratio == gamma) is
/// kept. Requires 0 <= gamma <= 1.
FilterResult filter_pairs(std::vector<ContrastivePair> pairs, double gamma);

/// 20 equal bins on [0, 1]; a ratio of exactly 1 lands in the last bin.
struct ChangeRatioHistogram {
  static constexpr int kBins = 20;
  std::array<std::int64_t, kBins> counts{};

  void add(double ratio);
  std::int64_t total() const;
};

ChangeRatioHistogram change_ratio_histogram(std::span<const ContrastivePair> pairs);

/// CSV with columns bin_low, bin_high, count.
void write_histogram_csv(const ChangeRatioHistogram& hist, const std::filesystem::path& path);

}  // namespace spot::pipeline
