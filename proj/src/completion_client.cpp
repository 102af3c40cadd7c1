// Copyright 2026 The toxtrig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toxtrig/completion_client.hpp"

#include <chrono>
#include <cstdio>
#include <thread>

#include <httplib.h>

#include "toxtrig/errors.hpp"
#include "toxtrig/io_util.hpp"

namespace toxtrig {

using nlohmann::json;

std::string prompt_hash(std::span<const ChatMessage> messages) {
  std::uint64_t h = 1469598103934665603ull;
  for (const ChatMessage& m : messages) {
    h = fnv1a64(m.role, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(m.content, h);
    h = fnv1a64("\x1e", h);
  }
  return to_hex(h);
}

json chat_request_body(const ChatRequest& request) {
  json messages = json::array();
  for (const ChatMessage& m : request.messages)
    messages.push_back({{"role", m.role}, {"content", m.content}});
  return json{
      {"model", request.model},
      {"messages", std::move(messages)},
      {"temperature", request.temperature},
      {"top_p", request.top_p},
      {"max_tokens", request.max_tokens},
      {"response_format",
       {{"type", "json_schema"},
        {"json_schema",
         {{"name", "toxic_habit_phrases"},
          {"strict", true},
          {"schema", request.response_schema}}}}},
  };
}

HttpCompletionClient::HttpCompletionClient(std::string base_url,
                                           std::string path,
                                           std::string api_key,
                                           std::size_t max_retries)
    : base_url_(std::move(base_url)),
      path_(std::move(path)),
      api_key_(std::move(api_key)),
      max_retries_(max_retries) {
  if (base_url_.empty())
    throw ConfigError("completion endpoint is not configured");
}

std::string HttpCompletionClient::complete(const ChatRequest& request) {
  const std::string body = chat_request_body(request).dump();
  std::string last_failure;
  for (std::size_t attempt = 0; attempt <= max_retries_; ++attempt) {
    if (attempt > 0)
      std::this_thread::sleep_for(
          std::chrono::milliseconds(250ll << (attempt - 1)));

    // httplib clients are not safe for concurrent calls; one per request
    // keeps this object shareable across workers.
    httplib::Client cli(base_url_);
    cli.set_connection_timeout(30, 0);
    cli.set_read_timeout(120, 0);
    httplib::Headers headers;
    if (!api_key_.empty())
      headers.emplace("Authorization", "Bearer " + api_key_);

    auto res = cli.Post(path_, headers, body, "application/json");
    if (!res) {
      last_failure = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_failure = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200)
      throw ClientError("completion request failed with HTTP " +
                        std::to_string(res->status) + ": " + res->body);

    json parsed;
    try {
      parsed = json::parse(res->body);
    } catch (const json::exception& e) {
      throw ClientError(std::string("completion response is not JSON: ") +
                        e.what());
    }
    if (!parsed.contains("choices") || !parsed["choices"].is_array() ||
        parsed["choices"].empty())
      throw ClientError("completion response carries no choices");
    const json& message = parsed["choices"][0].value("message", json());
    if (!message.contains("content") || !message["content"].is_string())
      throw ClientError("completion response has no message content");
    return message["content"].get<std::string>();
  }
  throw ClientError("completion request failed after " +
                    std::to_string(max_retries_) + " retries (" +
                    last_failure + ")");
}

ReplayCompletionClient::ReplayCompletionClient(
    const std::filesystem::path& fixture_file) {
  const std::string content = read_file(fixture_file);
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = eol == std::string::npos
                                ? std::string_view(content).substr(pos)
                                : std::string_view(content).substr(pos, eol - pos);
    pos = eol == std::string::npos ? content.size() : eol + 1;
    ++lineno;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("replay fixture line " + std::to_string(lineno) +
                       ": expected 'hash<TAB>payload'");
    const std::string hash(line.substr(0, tab));
    json payload;
    try {
      payload = json::parse(line.substr(tab + 1));
    } catch (const json::exception& e) {
      throw ParseError("replay fixture line " + std::to_string(lineno) +
                       ": payload is not a JSON string (" + e.what() + ")");
    }
    if (!payload.is_string())
      throw ParseError("replay fixture line " + std::to_string(lineno) +
                       ": payload is not a JSON string");
    responses_[hash] = payload.get<std::string>();
  }
}

std::string ReplayCompletionClient::complete(const ChatRequest& request) {
  const std::string hash = prompt_hash(request.messages);
  auto it = responses_.find(hash);
  if (it == responses_.end())
    throw ClientError("replay miss: no recorded response for prompt hash " +
                      hash);
  return it->second;
}

std::string ReplayCompletionClient::render_fixture_file(
    const std::map<std::string, std::string>& responses) {
  std::string out;
  for (const auto& [hash, payload] : responses)
    out += hash + "\t" + json(payload).dump() + "\n";
  return out;
}

RecordingCompletionClient::RecordingCompletionClient(
    CompletionClient& inner, std::filesystem::path out_file)
    : inner_(inner), out_file_(std::move(out_file)) {}

RecordingCompletionClient::~RecordingCompletionClient() {
  try {
    flush();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failed to flush recorded responses: %s\n", e.what());
  }
}

std::string RecordingCompletionClient::complete(const ChatRequest& request) {
  const std::string payload = inner_.complete(request);
  const std::string hash = prompt_hash(request.messages);
  std::lock_guard<std::mutex> lock(mutex_);
  recorded_[hash] = payload;
  return payload;
}

void RecordingCompletionClient::flush() {
  std::lock_guard<std::mutex> lock(mutex_);
  write_file(out_file_, ReplayCompletionClient::render_fixture_file(recorded_));
}

}  // namespace toxtrig
