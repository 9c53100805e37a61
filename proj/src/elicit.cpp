#include "spot/elicit.hpp"

#include "spot/errors.hpp"

namespace spot::pipeline {

PolicyGenerator::PolicyGenerator(PolicyParams params, SampleConfig sampling)
    : params_(std::move(params)), sampling_(sampling) {}

SeqOrText PolicyGenerator::generate(const Task& task, std::size_t task_index) {
  if (!holds_tokens(task.prompt)) {
    throw InvalidInputError("task '" + task.id + "': policy generator needs a token prompt");
  }
  SampleConfig cfg = sampling_;
  cfg.seed = sampling_.seed + static_cast<std::uint64_t>(task_index);
  return sample(params_, std::get<TokenSequence>(task.prompt), cfg);
}

std::string PolicyGenerator::describe() const {
  return "policy(order=" + std::to_string(params_.order()) + ")";
}

RemoteGenerator::RemoteGenerator(HttpOracleConfig config) : client_(std::move(config)) {}

SeqOrText RemoteGenerator::generate(const Task& task, std::size_t /*task_index*/) {
  if (holds_tokens(task.prompt)) {
    throw InvalidInputError("task '" + task.id + "': remote generator needs a text prompt");
  }
  return client_.chat("", std::get<std::string>(task.prompt));
}

std::string RemoteGenerator::describe() const {
  return client_.id();
}

namespace {

ElicitResult run_elicit(ResponseGenerator& generator, const std::vector<Task>& tasks,
                        const Vocab* vocab) {
  if (tasks.empty()) {
    throw InvalidInputError("elicit_errors: task list must be non-empty");
  }
  ElicitResult out;
  out.stats.total = tasks.size();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    SeqOrText response;
    try {
      response = generator.generate(task, i);
    } catch (const TransportError& e) {
      throw TransportError("task '" + task.id + "': " + e.what());
    }

    std::string text;
    if (holds_tokens(response)) {
      if (vocab == nullptr) {
        throw InvalidInputError("task '" + task.id +
                                "': token response without a vocab to render it");
      }
      text = render_text(*vocab, std::get<TokenSequence>(response), /*strip_eos=*/true);
    } else {
      text = std::get<std::string>(response);
    }

    const Verdict verdict = verify_response(task, text);
    if (verdict.passed) {
      ++out.stats.passed;
      continue;
    }
    ++out.stats.failed;
    if (verdict.parse_failed) {
      ++out.stats.parse_flagged;
    }
    out.failures.push_back(ElicitFailure{task, std::move(response), verdict.parse_failed});
  }
  return out;
}

}  // namespace

ElicitResult elicit_errors(ResponseGenerator& generator, const std::vector<Task>& tasks) {
  return run_elicit(generator, tasks, nullptr);
}

ElicitResult elicit_errors(const PolicyParams& policy, const std::vector<Task>& tasks,
                           const SampleConfig& sampling) {
  PolicyGenerator generator(policy, sampling);
  const Vocab& vocab = policy.vocab();
  return run_elicit(generator, tasks, &vocab);
}

}  // namespace spot::pipeline
