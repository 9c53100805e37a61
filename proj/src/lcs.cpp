#include "spot/lcs.hpp"

#include <algorithm>
#include <sstream>

#include "spot/errors.hpp"
#include "spot/io_util.hpp"

namespace spot::pipeline {

namespace {

template <typename T>
std::size_t lcs_length_impl(std::span<const T> a, std::span<const T> b) {
  if (a.empty() || b.empty()) {
    return 0;
  }
  if (b.size() > a.size()) {
    std::swap(a, b);  // keep the DP rows on the shorter side
  }
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        curr[j] = prev[j - 1] + 1;
      } else {
        curr[j] = std::max(prev[j], curr[j - 1]);
      }
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

double ratio_from(std::size_t lcs, std::size_t plus_len) {
  if (plus_len == 0) {
    throw InvalidInputError("change_ratio: rectified sequence must be non-empty");
  }
  return 1.0 - static_cast<double>(lcs) / static_cast<double>(plus_len);
}

}  // namespace

std::size_t lcs_length(std::span<const TokenId> a, std::span<const TokenId> b) {
  return lcs_length_impl(a, b);
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) {
    words.push_back(std::move(w));
  }
  return words;
}

std::size_t lcs_length_words(std::string_view a, std::string_view b) {
  const auto wa = split_words(a);
  const auto wb = split_words(b);
  return lcs_length_impl(std::span<const std::string>(wa), std::span<const std::string>(wb));
}

double change_ratio(const TokenSequence& y_minus, const TokenSequence& y_plus) {
  return ratio_from(lcs_length(y_minus.tokens, y_plus.tokens), y_plus.size());
}

double change_ratio_text(std::string_view y_minus, std::string_view y_plus) {
  const auto wa = split_words(y_minus);
  const auto wb = split_words(y_plus);
  return ratio_from(
      lcs_length_impl(std::span<const std::string>(wa), std::span<const std::string>(wb)),
      wb.size());
}

double change_ratio_of(const ContrastivePair& pair) {
  const bool minus_tok = holds_tokens(pair.rejected);
  const bool plus_tok = holds_tokens(pair.chosen);
  if (minus_tok != plus_tok) {
    throw InvalidInputError("change_ratio: rejected and chosen must share a representation");
  }
  if (minus_tok) {
    return change_ratio(std::get<TokenSequence>(pair.rejected),
                        std::get<TokenSequence>(pair.chosen));
  }
  return change_ratio_text(std::get<std::string>(pair.rejected),
                           std::get<std::string>(pair.chosen));
}

FilterResult filter_pairs(std::vector<ContrastivePair> pairs, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidInputError("filter_pairs: gamma must be in [0, 1]");
  }
  FilterResult out;
  for (auto& p : pairs) {
    if (p.change_ratio <= gamma) {
      out.kept.push_back(std::move(p));
    } else {
      out.dropped.push_back(std::move(p));
    }
  }
  return out;
}

void ChangeRatioHistogram::add(double ratio) {
  int bin = static_cast<int>(ratio * kBins);
  bin = std::clamp(bin, 0, kBins - 1);
  ++counts[static_cast<std::size_t>(bin)];
}

std::int64_t ChangeRatioHistogram::total() const {
  std::int64_t t = 0;
  for (auto c : counts) {
    t += c;
  }
  return t;
}

ChangeRatioHistogram change_ratio_histogram(std::span<const ContrastivePair> pairs) {
  ChangeRatioHistogram h;
  for (const auto& p : pairs) {
    h.add(p.change_ratio);
  }
  return h;
}

void write_histogram_csv(const ChangeRatioHistogram& hist, const std::filesystem::path& path) {
  std::string csv = "bin_low,bin_high,count\n";
  for (int b = 0; b < ChangeRatioHistogram::kBins; ++b) {
    csv += io::format_double(static_cast<double>(b) / ChangeRatioHistogram::kBins);
    csv += ',';
    csv += io::format_double(static_cast<double>(b + 1) / ChangeRatioHistogram::kBins);
    csv += ',';
    csv += std::to_string(hist.counts[static_cast<std::size_t>(b)]);
    csv += '\n';
  }
  io::atomic_write(path, csv);
}

}  // namespace spot::pipeline
