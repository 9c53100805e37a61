#include "spot/oracle.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "spot/errors.hpp"
#include "spot/lcs.hpp"

namespace spot::pipeline {

namespace {

constexpr std::string_view kPromptWithoutGroundTruth =
    R"(Act as a helpful teaching assistant. Your goal is to revise a student model's answer to make it correct, while maintaining the student model's original writing style, tone, and formatting. The final result should look as if the student model had solved the problem correctly on its first try.

You should first solve the problem independently and do the following:
1. Identify the correct parts of the student model's answer and keep them.
2. Replace the incorrect parts with correct reasoning.
3. Carefully match the student model's original writing style, including their tone, vocabulary, formatting and sentence structure.

**IMPORTANT OUTPUT FORMAT:**
1. First output "=== CORRECTED STARTED ===" followed by the corrected answer
2. Ends with the corrected answer in the format: 'Therefore, the final answer is: $\\boxed{{ANSWER}}$.'
3. Then output "=== CORRECTED ENDED ===" at the end of the corrected trace
4. Do not output meta-phrases like "Here is the corrected version")";

constexpr std::string_view kPromptWithGroundTruth =
    R"(Act as a helpful teaching assistant. Your goal is to revise a student model's answer to make it correct, while maintaining the student model's original writing style, tone, and formatting. The final result should look as if the student model had solved the problem correctly on its first try.

You should compare the student model's answer with the Reference Ground Truth and do the following:
1. Identify the correct parts of the student model's answer and keep them.
2. Replace the incorrect parts with correct reasoning.
3. Carefully match the student model's original writing style, including their tone, vocabulary, and sentence structure.

**IMPORTANT OUTPUT FORMAT:**
1. First output "=== CORRECTED STARTED ===" followed by the corrected answer
2. Ends with the corrected answer in the format: 'Therefore, the final answer is: $\\boxed{{ANSWER}}$.'
3. Then output "=== CORRECTED ENDED ===" at the end of the corrected trace
4. Do not output meta-phrases like "Here is the corrected version")";

std::size_t count_occurrences(const std::string& haystack, std::string_view needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::string fenced(std::string_view body) {
  std::string out;
  out += kCorrectedStart;
  out += '\n';
  out += body;
  out += '\n';
  out += kCorrectedEnd;
  return out;
}

}  // namespace

std::string rectification_prompt(bool with_ground_truth) {
  return std::string(with_ground_truth ? kPromptWithGroundTruth : kPromptWithoutGroundTruth);
}

std::string build_user_message(const OracleRequest& request) {
  std::string msg;
  if (request.ground_truth.has_value()) {
    msg += "Reference Ground Truth:\n";
    msg += *request.ground_truth;
    msg += "\n\n";
  }
  msg += "Student Model's Answer:\n";
  msg += request.student_answer;
  return msg;
}

// ---------------------------------------------------------------------------
// MockOracle
// ---------------------------------------------------------------------------

MockOracle::MockOracle(std::string id, Handler handler)
    : id_(std::move(id)), handler_(std::move(handler)) {}

std::string MockOracle::complete(const OracleRequest& request) {
  return handler_(request);
}

std::unique_ptr<MockOracle> MockOracle::ground_truth() {
  return std::make_unique<MockOracle>("mock:ground_truth", [](const OracleRequest& req) {
    return fenced(req.ground_truth.value_or(req.student_answer));
  });
}

std::unique_ptr<MockOracle> MockOracle::identity() {
  return std::make_unique<MockOracle>("mock:identity", [](const OracleRequest& req) {
    return fenced(req.student_answer);
  });
}

std::unique_ptr<MockOracle> MockOracle::replace_word(std::size_t index,
                                                     std::string replacement) {
  return std::make_unique<MockOracle>(
      "mock:replace_word",
      [index, replacement = std::move(replacement)](const OracleRequest& req) {
        auto words = split_words(req.student_answer);
        if (index >= words.size()) {
          throw InvalidInputError("mock replace_word: index out of range");
        }
        words[index] = replacement;
        std::string body;
        for (std::size_t i = 0; i < words.size(); ++i) {
          if (i > 0) {
            body += ' ';
          }
          body += words[i];
        }
        return fenced(body);
      });
}

// ---------------------------------------------------------------------------
// HttpOracleClient
// ---------------------------------------------------------------------------

HttpOracleClient::HttpOracleClient(HttpOracleConfig config) : config_(std::move(config)) {
  if (config_.base_url.empty()) {
    throw ConfigError("http oracle: base_url must be set");
  }
  if (config_.max_attempts < 1) {
    throw ConfigError("http oracle: max_attempts must be >= 1");
  }
}

std::string HttpOracleClient::id() const {
  return "http:" + config_.model;
}

std::string HttpOracleClient::complete(const OracleRequest& request) {
  return chat(request.system_prompt, build_user_message(request));
}

std::string HttpOracleClient::chat(const std::string& system_prompt,
                                   const std::string& user_message) {
  nlohmann::json messages = nlohmann::json::array();
  if (!system_prompt.empty()) {
    messages.push_back({{"role", "system"}, {"content", system_prompt}});
  }
  messages.push_back({{"role", "user"}, {"content", user_message}});
  nlohmann::json body = {
      {"model", config_.model},
      {"messages", std::move(messages)},
      {"temperature", config_.temperature},
  };
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }

  std::string last_error;
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    if (attempt > 0) {
      const auto backoff =
          std::chrono::milliseconds(config_.initial_backoff_ms) * (1 << (attempt - 1));
      std::this_thread::sleep_for(backoff);
    }
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.timeout_sec);
    client.set_read_timeout(config_.timeout_sec);

    auto res = client.Post(config_.path, headers, payload, "application/json");
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = "status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw TransportError("oracle request rejected with status " +
                           std::to_string(res->status) + ": " + res->body);
    }

    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("oracle response is not JSON: ") + e.what(), res->body);
    }
    if (!parsed.contains("choices") || !parsed["choices"].is_array() ||
        parsed["choices"].empty() || !parsed["choices"][0].contains("message") ||
        !parsed["choices"][0]["message"].contains("content") ||
        !parsed["choices"][0]["message"]["content"].is_string()) {
      throw ParseError("oracle response has no choices[0].message.content", res->body);
    }
    return parsed["choices"][0]["message"]["content"].get<std::string>();
  }
  throw TransportError("oracle unreachable after " + std::to_string(config_.max_attempts) +
                       " attempts (" + last_error + "): " + config_.base_url);
}

std::optional<std::string> oracle_key_from_env() {
  const char* key = std::getenv("SPOT_ORACLE_KEY");
  if (key == nullptr || key[0] == '\0') {
    return std::nullopt;
  }
  return std::string(key);
}

// ---------------------------------------------------------------------------
// Extraction and the rectify operation
// ---------------------------------------------------------------------------

std::string extract_corrected(const std::string& raw_response) {
  const std::size_t starts = count_occurrences(raw_response, kCorrectedStart);
  const std::size_t ends = count_occurrences(raw_response, kCorrectedEnd);
  if (starts != 1 || ends != 1) {
    throw ParseError("expected exactly one start and one end marker, got " +
                         std::to_string(starts) + "/" + std::to_string(ends),
                     raw_response);
  }
  const std::size_t start_pos = raw_response.find(kCorrectedStart);
  const std::size_t end_pos = raw_response.find(kCorrectedEnd);
  if (end_pos < start_pos) {
    throw ParseError("end marker precedes start marker", raw_response);
  }
  const std::size_t body_begin = start_pos + kCorrectedStart.size();
  return trim(std::string_view(raw_response).substr(body_begin, end_pos - body_begin));
}

std::string rectify(OracleClient& oracle, const std::string& y_minus,
                    const std::optional<std::string>& ground_truth) {
  if (y_minus.empty()) {
    throw InvalidInputError("rectify: student answer must be non-empty");
  }
  OracleRequest request;
  request.system_prompt = rectification_prompt(ground_truth.has_value());
  request.student_answer = y_minus;
  request.ground_truth = ground_truth;
  return extract_corrected(oracle.complete(request));
}

}  // namespace spot::pipeline
