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

#ifndef TOXTRIG_COMPLETION_CLIENT_HPP_
#define TOXTRIG_COMPLETION_CLIENT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace toxtrig {

struct ChatMessage {
  std::string role;
  std::string content;

  bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
  std::string model;
  double temperature = 0.0;
  double top_p = 1.0;
  std::size_t max_tokens = 4000;
  std::vector<ChatMessage> messages;
  nlohmann::json response_schema;  // JSON schema for structured output
};

// Stable 64-bit hash of the fully rendered message sequence, hex-encoded.
// Keys replay fixtures: any change to the prompt invalidates stale fixtures
// loudly instead of silently serving old answers.
std::string prompt_hash(std::span<const ChatMessage> messages);

// Chat-completions request body including the structured-output constraint.
nlohmann::json chat_request_body(const ChatRequest& request);

// One completion turn. Implementations return the first choice's message
// content (the structured payload) and must be safe to share across worker
// threads.
class CompletionClient {
 public:
  virtual ~CompletionClient() = default;
  virtual std::string complete(const ChatRequest& request) = 0;
};

// POSTs to base_url + path with bearer auth. Retries 429s, 5xx and transport
// failures with exponential backoff up to max_retries, then raises
// ClientError.
class HttpCompletionClient : public CompletionClient {
 public:
  HttpCompletionClient(std::string base_url, std::string path,
                       std::string api_key, std::size_t max_retries = 2);

  std::string complete(const ChatRequest& request) override;

 private:
  std::string base_url_;
  std::string path_;
  std::string api_key_;
  std::size_t max_retries_;
};

// Serves recorded payloads keyed by prompt hash from a fixture file: one
// `hash<TAB>json-encoded-payload` record per line. A miss raises ClientError
// naming the hash.
class ReplayCompletionClient : public CompletionClient {
 public:
  explicit ReplayCompletionClient(const std::filesystem::path& fixture_file);

  std::string complete(const ChatRequest& request) override;

  std::size_t size() const { return responses_.size(); }

  static std::string render_fixture_file(
      const std::map<std::string, std::string>& responses);

 private:
  std::map<std::string, std::string> responses_;
};

// Delegates to an inner client and records every (hash, payload) pair.
// flush() writes the fixture file sorted by hash; the destructor flushes too.
class RecordingCompletionClient : public CompletionClient {
 public:
  RecordingCompletionClient(CompletionClient& inner,
                            std::filesystem::path out_file);
  ~RecordingCompletionClient() override;

  std::string complete(const ChatRequest& request) override;
  void flush();

 private:
  CompletionClient& inner_;
  std::filesystem::path out_file_;
  std::map<std::string, std::string> recorded_;
  std::mutex mutex_;
};

}  // namespace toxtrig

#endif  // TOXTRIG_COMPLETION_CLIENT_HPP_
