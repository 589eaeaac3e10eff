/*
 * Copyright 2026 The Orality Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orality/error.hpp"

namespace orality {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  int max_tokens = 0;
};

/// Quota or token budget exhausted; the session should stop gracefully.
class TokenLimitError : public Error {
 public:
  explicit TokenLimitError(const std::string& detail)
      : Error("token limit: " + detail) {}
};

/// The endpoint rejected the request or kept failing.
class EndpointError : public Error {
 public:
  EndpointError(const std::string& what, int status)
      : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

/// OpenAI chat-completions body: model, messages[{role, content}],
/// temperature, max_tokens.
std::string to_request_json(const ChatRequest& request);

/// choices[0].message.content of a chat-completions response.
/// Throws EndpointError when the body has no such field.
std::string parse_completion_text(std::string_view body);

struct HttpReply {
  int status = 0;  // 0 = no HTTP response (connection failure, timeout)
  std::string body;
  std::string transport_error;
  std::optional<double> retry_after_seconds;
};

class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual HttpReply post(const std::string& json_body) = 0;
};

/// POSTs to an OpenAI-compatible chat-completions URL with a bearer key.
/// Safe to share across threads: every call opens its own connection.
class HttpChatTransport : public ChatTransport {
 public:
  HttpChatTransport(std::string endpoint_url, std::string api_key,
                    std::chrono::seconds timeout = std::chrono::seconds(120));
  HttpReply post(const std::string& json_body) override;

 private:
  std::string origin_;
  std::string path_;
  std::string api_key_;
  std::chrono::seconds timeout_;
};

enum class ReplyKind { ok, retryable, token_limit, fatal };

/// 429/5xx/408 and transport failures are retryable unless the body reports
/// an exhausted quota or context window, which is a token limit.
ReplyKind classify_reply(const HttpReply& reply);

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds base_backoff{1000};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{60000};

  /// Delay before retry number `retry` (1-based): base * multiplier^(retry-1),
  /// capped at max_backoff.
  std::chrono::milliseconds delay_for(int retry) const;
};

/// Anything that turns a chat request into assistant text.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual std::string complete(const ChatRequest& request) = 0;
};

/// Transport plus retry with exponential backoff.
class ChatClient : public ChatBackend {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  explicit ChatClient(std::shared_ptr<ChatTransport> transport,
                      RetryPolicy policy = {}, Sleeper sleeper = {});

  /// Throws TokenLimitError, or EndpointError for fatal replies and when
  /// max_attempts is exhausted.
  std::string complete(const ChatRequest& request) override;

 private:
  std::shared_ptr<ChatTransport> transport_;
  RetryPolicy policy_;
  Sleeper sleeper_;
};

}  // namespace orality
