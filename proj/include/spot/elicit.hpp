#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spot/oracle.hpp"
#include "spot/pair.hpp"
#include "spot/sampling.hpp"
#include "spot/verifier.hpp"

namespace spot::pipeline {

/// Where candidate responses come from: the in-process toy policy or a remote
/// chat endpoint.
class ResponseGenerator {
 public:
  virtual ~ResponseGenerator() = default;

  /// One response for the task. task_index feeds per-task seeding so a run is
  /// one deterministic function of the base seed.
  virtual SeqOrText generate(const Task& task, std::size_t task_index) = 0;

  virtual std::string describe() const = 0;
};

class PolicyGenerator : public ResponseGenerator {
 public:
  PolicyGenerator(PolicyParams params, SampleConfig sampling);

  SeqOrText generate(const Task& task, std::size_t task_index) override;
  std::string describe() const override;

 private:
  PolicyParams params_;
  SampleConfig sampling_;
};

/// Sends the task prompt as the user message of a chat completion and returns
/// the raw text.
class RemoteGenerator : public ResponseGenerator {
 public:
  explicit RemoteGenerator(HttpOracleConfig config);

  SeqOrText generate(const Task& task, std::size_t task_index) override;
  std::string describe() const override;

 private:
  HttpOracleClient client_;
};

struct ElicitFailure {
  Task task;
  SeqOrText rejected;
  bool parse_flagged = false;
};

struct ElicitStats {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;         // retained for rectification
  std::size_t parse_flagged = 0;  // failures whose verdict could not be parsed

  double pass_rate() const {
    return total == 0 ? 0.0 : static_cast<double>(passed) / static_cast<double>(total);
  }
};

struct ElicitResult {
  std::vector<ElicitFailure> failures;
  ElicitStats stats;
};

/// One sample per task; only verifier-failing responses are retained. A
/// transport failure aborts with the offending task id in the message.
ElicitResult elicit_errors(ResponseGenerator& generator, const std::vector<Task>& tasks);

/// Convenience overload binding the toy policy.
ElicitResult elicit_errors(const PolicyParams& policy, const std::vector<Task>& tasks,
                           const SampleConfig& sampling);

}  // namespace spot::pipeline
