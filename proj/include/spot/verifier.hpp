#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spot/pair.hpp"

namespace spot::pipeline {

enum class VerifierMode {
  kExactMatch,    // whitespace-trimmed equality of the pre-EOS answer span
  kBoxedExtract,  // last \boxed{...} group, compared trimmed
};

std::string_view to_string(VerifierMode mode);
VerifierMode verifier_mode_from_string(std::string_view s);

struct Task {
  std::string id;
  SeqOrText prompt;
  std::string ground_truth;
  VerifierMode verifier = VerifierMode::kExactMatch;
};

struct Verdict {
  bool passed = false;
  bool parse_failed = false;  // boxed-extract found no well-formed \boxed{...}
  std::string extracted;      // what was compared against the ground truth
};

/// Content of the last \boxed{...} group, brace-nesting aware; nullopt when
/// absent or unbalanced.
std::optional<std::string> extract_last_boxed(std::string_view text);

/// Judges a response rendered as text (for token responses: EOS already
/// stripped by the renderer). Ground truth must be non-empty.
Verdict verify_response(const Task& task, std::string_view response_text);

}  // namespace spot::pipeline
