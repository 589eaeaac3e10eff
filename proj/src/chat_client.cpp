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

#include "orality/chat_client.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "orality/text.hpp"

namespace orality {

namespace {

constexpr std::array<std::string_view, 5> kTokenLimitMarkers = {
    "insufficient_quota", "context_length_exceeded", "tokens per day",
    "token limit", "quota exceeded"};

bool mentions_token_limit(std::string_view body) {
  std::string lower = text::to_lower(body);
  return std::any_of(kTokenLimitMarkers.begin(), kTokenLimitMarkers.end(),
                     [&](std::string_view m) {
                       return lower.find(m) != std::string::npos;
                     });
}

std::string describe(const HttpReply& reply) {
  if (reply.status == 0) return "transport error: " + reply.transport_error;
  std::string body = reply.body.substr(0, 300);
  return "HTTP " + std::to_string(reply.status) + ": " + body;
}

}  // namespace

std::string to_request_json(const ChatRequest& request) {
  nlohmann::ordered_json body;
  body["model"] = request.model;
  body["messages"] = nlohmann::ordered_json::array();
  for (const ChatMessage& m : request.messages) {
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_tokens;
  return body.dump();
}

std::string parse_completion_text(std::string_view body) {
  nlohmann::json json = nlohmann::json::parse(body, nullptr, false);
  if (json.is_discarded()) throw EndpointError("response is not JSON", 200);
  if (!json.contains("choices") || !json["choices"].is_array() ||
      json["choices"].empty()) {
    throw EndpointError("response has no choices", 200);
  }
  const auto& choice = json["choices"][0];
  if (!choice.contains("message") || !choice["message"].contains("content") ||
      !choice["message"]["content"].is_string()) {
    throw EndpointError("response has no message content", 200);
  }
  return choice["message"]["content"].get<std::string>();
}

HttpChatTransport::HttpChatTransport(std::string endpoint_url,
                                     std::string api_key,
                                     std::chrono::seconds timeout)
    : api_key_(std::move(api_key)), timeout_(timeout) {
  auto scheme = endpoint_url.find("://");
  if (scheme == std::string::npos) {
    throw InputError("endpoint must be an http(s) URL: " + endpoint_url);
  }
  auto slash = endpoint_url.find('/', scheme + 3);
  if (slash == std::string::npos) {
    origin_ = endpoint_url;
    path_ = "/v1/chat/completions";
  } else {
    origin_ = endpoint_url.substr(0, slash);
    path_ = endpoint_url.substr(slash);
  }
}

HttpReply HttpChatTransport::post(const std::string& json_body) {
  httplib::Client client(origin_);
  client.set_connection_timeout(std::chrono::seconds(30));
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);
  httplib::Headers headers;
  if (!api_key_.empty()) {
    headers.emplace("Authorization", "Bearer " + api_key_);
  }

  HttpReply reply;
  auto result = client.Post(path_, headers, json_body, "application/json");
  if (!result) {
    reply.transport_error = httplib::to_string(result.error());
    return reply;
  }
  reply.status = result->status;
  reply.body = result->body;
  if (result->has_header("Retry-After")) {
    try {
      reply.retry_after_seconds = std::stod(result->get_header_value("Retry-After"));
    } catch (const std::exception&) {
      // HTTP-date form; fall back to our own backoff.
    }
  }
  return reply;
}

ReplyKind classify_reply(const HttpReply& reply) {
  if (reply.status == 0) return ReplyKind::retryable;
  if (reply.status >= 200 && reply.status < 300) return ReplyKind::ok;
  if (mentions_token_limit(reply.body)) return ReplyKind::token_limit;
  if (reply.status == 429 || reply.status == 408 || reply.status >= 500) {
    return ReplyKind::retryable;
  }
  return ReplyKind::fatal;
}

std::chrono::milliseconds RetryPolicy::delay_for(int retry) const {
  double ms = static_cast<double>(base_backoff.count()) *
              std::pow(multiplier, std::max(retry - 1, 0));
  ms = std::min(ms, static_cast<double>(max_backoff.count()));
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

ChatClient::ChatClient(std::shared_ptr<ChatTransport> transport,
                       RetryPolicy policy, Sleeper sleeper)
    : transport_(std::move(transport)),
      policy_(policy),
      sleeper_(std::move(sleeper)) {
  if (!transport_) throw InputError("chat client needs a transport");
  if (policy_.max_attempts < 1) throw InputError("max_attempts must be >= 1");
  if (!sleeper_) {
    sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

std::string ChatClient::complete(const ChatRequest& request) {
  const std::string body = to_request_json(request);
  std::string last_error;
  for (int attempt = 1; attempt <= policy_.max_attempts; ++attempt) {
    HttpReply reply = transport_->post(body);
    std::chrono::milliseconds wait = policy_.delay_for(attempt);
    switch (classify_reply(reply)) {
      case ReplyKind::ok: {
        std::string content = parse_completion_text(reply.body);
        if (!text::trim(content).empty()) return content;
        last_error = "empty completion";
        break;
      }
      case ReplyKind::token_limit:
        throw TokenLimitError(describe(reply));
      case ReplyKind::fatal:
        throw EndpointError(describe(reply), reply.status);
      case ReplyKind::retryable:
        last_error = describe(reply);
        if (reply.retry_after_seconds) {
          auto hinted = std::chrono::milliseconds(
              static_cast<long long>(*reply.retry_after_seconds * 1000.0));
          wait = std::max(wait, std::min(hinted, policy_.max_backoff));
        }
        break;
    }
    if (attempt < policy_.max_attempts) sleeper_(wait);
  }
  throw EndpointError("max retries exceeded (" + last_error + ")", 0);
}

}  // namespace orality
