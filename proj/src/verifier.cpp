#include "spot/verifier.hpp"

#include "spot/errors.hpp"

namespace spot::pipeline {

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view to_string(VerifierMode mode) {
  switch (mode) {
    case VerifierMode::kExactMatch:
      return "exact-match";
    case VerifierMode::kBoxedExtract:
      return "boxed-extract";
  }
  return "exact-match";
}

VerifierMode verifier_mode_from_string(std::string_view s) {
  if (s == "exact-match") {
    return VerifierMode::kExactMatch;
  }
  if (s == "boxed-extract") {
    return VerifierMode::kBoxedExtract;
  }
  throw InvalidInputError("unknown verifier mode: " + std::string(s));
}

std::optional<std::string> extract_last_boxed(std::string_view text) {
  constexpr std::string_view kMarker = "\\boxed{";
  std::size_t best = std::string_view::npos;
  std::size_t pos = 0;
  while ((pos = text.find(kMarker, pos)) != std::string_view::npos) {
    best = pos;
    pos += kMarker.size();
  }
  if (best == std::string_view::npos) {
    return std::nullopt;
  }
  std::size_t i = best + kMarker.size();
  int depth = 1;
  std::string content;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{') {
      ++depth;
    } else if (c == '}') {
      --depth;
      if (depth == 0) {
        return content;
      }
    }
    content += c;
  }
  return std::nullopt;  // unbalanced braces
}

Verdict verify_response(const Task& task, std::string_view response_text) {
  if (task.ground_truth.empty()) {
    throw InvalidInputError("verify_response: task '" + task.id +
                            "' has an empty ground truth");
  }
  Verdict v;
  switch (task.verifier) {
    case VerifierMode::kExactMatch: {
      v.extracted = trim(response_text);
      v.passed = v.extracted == trim(task.ground_truth);
      return v;
    }
    case VerifierMode::kBoxedExtract: {
      const auto boxed = extract_last_boxed(response_text);
      if (!boxed.has_value()) {
        v.parse_failed = true;
        v.passed = false;
        return v;
      }
      v.extracted = trim(*boxed);
      v.passed = v.extracted == trim(task.ground_truth);
      return v;
    }
  }
  return v;
}

}  // namespace spot::pipeline
