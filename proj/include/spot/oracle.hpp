#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace spot::pipeline {

inline constexpr std::string_view kCorrectedStart = "=== CORRECTED STARTED ===";
inline constexpr std::string_view kCorrectedEnd = "=== CORRECTED ENDED ===";

/// The fixed teaching-assistant instructions, in the with- and without-
/// reference variants. The corrected trace must come back fenced between
/// kCorrectedStart and kCorrectedEnd.
std::string rectification_prompt(bool with_ground_truth);

struct OracleRequest {
  std::string system_prompt;
  std::string student_answer;
  std::optional<std::string> ground_truth;
};

/// User-message body: the student answer, preceded by the reference answer
/// when one is supplied.
std::string build_user_message(const OracleRequest& request);

class OracleClient {
 public:
  virtual ~OracleClient() = default;

  /// Raw completion text. Throws TransportError once retries (if any) are
  /// exhausted.
  virtual std::string complete(const OracleRequest& request) = 0;

  /// Stable identifier recorded on every pair this oracle produced.
  virtual std::string id() const = 0;
};

/// Deterministic in-process oracle for hermetic runs: the handler maps a
/// request to the raw response text, markers included (or deliberately not).
class MockOracle : public OracleClient {
 public:
  using Handler = std::function<std::string(const OracleRequest&)>;

  MockOracle(std::string id, Handler handler);

  std::string complete(const OracleRequest& request) override;
  std::string id() const override { return id_; }

  /// Replies with the ground truth when present, otherwise echoes the student
  /// answer; always fenced.
  static std::unique_ptr<MockOracle> ground_truth();

  /// Fenced echo of the student answer.
  static std::unique_ptr<MockOracle> identity();

  /// Fenced echo with the whitespace-delimited word at `index` replaced.
  static std::unique_ptr<MockOracle> replace_word(std::size_t index, std::string replacement);

 private:
  std::string id_;
  Handler handler_;
};

struct HttpOracleConfig {
  std::string base_url;  // scheme + host[:port], e.g. "https://api.example.com"
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key;   // goes out as a bearer token when non-empty
  double temperature = 0.0;
  int max_attempts = 3;
  int initial_backoff_ms = 250;
  int timeout_sec = 30;
};

/// JSON-over-HTTP chat-completions client with exponential backoff on
/// connection failures, 429 and 5xx.
class HttpOracleClient : public OracleClient {
 public:
  explicit HttpOracleClient(HttpOracleConfig config);

  std::string complete(const OracleRequest& request) override;
  std::string id() const override;

  /// Bare chat call (an empty system prompt sends a single user message).
  std::string chat(const std::string& system_prompt, const std::string& user_message);

 private:
  HttpOracleConfig config_;
};

/// SPOT_ORACLE_KEY from the environment, if set.
std::optional<std::string> oracle_key_from_env();

/// Text strictly between the start and end markers, whitespace-trimmed. Each
/// marker must occur exactly once and in order; otherwise ParseError carrying
/// the raw response.
std::string extract_corrected(const std::string& raw_response);

/// Builds the instruction prompt (ground-truth variant when one is given),
/// queries the oracle, and extracts the fenced correction.
std::string rectify(OracleClient& oracle, const std::string& y_minus,
                    const std::optional<std::string>& ground_truth);

}  // namespace spot::pipeline
