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

#include <set>

#include <nlohmann/json.hpp>

#include "orality/error.hpp"
#include "orality/session.hpp"
#include "orality/text.hpp"

namespace orality {

namespace {

using nlohmann::json;

const std::set<std::string> kTopLevelKeys = {
    "endpoint",        "api_key_env",       "model",
    "preset",          "adventure_file",    "adventure_text",
    "max_adventure_chars", "opening_prompt", "max_interactions_per_player",
    "stateless",       "wall_clock_limit_s", "retry",
    "agents"};

const std::set<std::string> kAgentKeys = {
    "name",        "role",        "model",          "temperature",
    "max_tokens",  "system_message", "description", "description_file"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw InputError(where + ": unknown key \"" + key + "\"");
    }
  }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key) || obj[key].is_null()) return fallback;
  try {
    return obj[key].get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("session config: bad value for \"") + key + "\"");
  }
}

std::string read_relative(const std::filesystem::path& base,
                          const std::string& file) {
  std::filesystem::path p(file);
  if (p.is_relative()) p = base / p;
  return text::read_file(p);
}

}  // namespace

SessionConfig parse_session_config(std::string_view source,
                                   const std::filesystem::path& base_dir) {
  json root = json::parse(source, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    throw InputError("session config: not a JSON object");
  }
  reject_unknown(root, kTopLevelKeys, "session config");

  SessionConfig cfg;
  cfg.endpoint = get_or<std::string>(root, "endpoint", "");
  cfg.api_key_env = get_or<std::string>(root, "api_key_env", cfg.api_key_env);
  cfg.opening_prompt = get_or<std::string>(root, "opening_prompt", cfg.opening_prompt);
  cfg.max_interactions_per_player =
      get_or<int>(root, "max_interactions_per_player", cfg.max_interactions_per_player);
  cfg.stateless = get_or<bool>(root, "stateless", false);
  cfg.wall_clock_limit = std::chrono::milliseconds(static_cast<long long>(
      get_or<double>(root, "wall_clock_limit_s", 1800.0) * 1000.0));

  if (root.contains("adventure_file")) {
    cfg.adventure_text =
        read_relative(base_dir, get_or<std::string>(root, "adventure_file", ""));
  } else {
    cfg.adventure_text = get_or<std::string>(root, "adventure_text", "");
  }
  const auto max_chars = get_or<std::size_t>(root, "max_adventure_chars", 0);

  if (root.contains("retry")) {
    const json& r = root["retry"];
    reject_unknown(r, {"max_attempts", "base_backoff_ms", "multiplier", "max_backoff_ms"},
                   "session config retry");
    cfg.retry.max_attempts = get_or<int>(r, "max_attempts", cfg.retry.max_attempts);
    cfg.retry.base_backoff = std::chrono::milliseconds(
        get_or<long long>(r, "base_backoff_ms", cfg.retry.base_backoff.count()));
    cfg.retry.multiplier = get_or<double>(r, "multiplier", cfg.retry.multiplier);
    cfg.retry.max_backoff = std::chrono::milliseconds(
        get_or<long long>(r, "max_backoff_ms", cfg.retry.max_backoff.count()));
  }

  std::optional<Preset> preset;
  if (root.contains("preset")) {
    std::string name = get_or<std::string>(root, "preset", "");
    preset = parse_preset(name);
    if (!preset) throw InputError("session config: unknown preset \"" + name + "\"");
  }
  const std::string default_model = get_or<std::string>(root, "model", "");

  if (!root.contains("agents") || !root["agents"].is_array()) {
    throw InputError("session config: \"agents\" must be a list");
  }
  const json& agents = root["agents"];
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const json& a = agents[i];
    const std::string where = "session config agent " + std::to_string(i);
    if (!a.is_object()) throw InputError(where + ": not an object");
    reject_unknown(a, kAgentKeys, where);

    AgentSpec spec;
    spec.name = get_or<std::string>(a, "name", "");
    auto role = parse_role(get_or<std::string>(a, "role", i == 0 ? "gm" : "player"));
    if (!role || *role == Role::unknown) throw InputError(where + ": bad role");
    spec.role = *role;
    spec.model = get_or<std::string>(a, "model", default_model);
    if (spec.model.empty()) throw InputError(where + ": no model");

    std::optional<AgentParams> fallback;
    if (preset && i < 4) fallback = preset_parameters(*preset)[i];
    if (a.contains("temperature")) {
      spec.temperature = get_or<double>(a, "temperature", 0.0);
    } else if (fallback) {
      spec.temperature = fallback->temperature;
    } else {
      throw InputError(where + ": no temperature and no preset");
    }
    if (a.contains("max_tokens")) {
      spec.max_tokens = get_or<int>(a, "max_tokens", 0);
    } else if (fallback) {
      spec.max_tokens = fallback->max_tokens;
    } else {
      throw InputError(where + ": no max_tokens and no preset");
    }

    if (a.contains("system_message")) {
      spec.system_message = get_or<std::string>(a, "system_message", "");
    } else if (spec.role == Role::gm) {
      if (text::trim(cfg.adventure_text).empty()) {
        throw InputError("session config: GM needs an adventure");
      }
      spec.system_message = gm_system_message(cfg.adventure_text, max_chars);
    } else {
      std::string description =
          a.contains("description_file")
              ? read_relative(base_dir, get_or<std::string>(a, "description_file", ""))
              : get_or<std::string>(a, "description", "");
      if (text::trim(description).empty()) {
        throw InputError(where + ": player needs a description");
      }
      spec.system_message = player_system_message(description);
    }
    cfg.agents.push_back(std::move(spec));
  }
  validate_config(cfg);
  return cfg;
}

SessionConfig load_session_config(const std::filesystem::path& path) {
  return parse_session_config(text::read_file(path), path.parent_path());
}

}  // namespace orality
