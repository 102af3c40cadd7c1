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

#include "toxtrig/manifest.hpp"

#include <chrono>
#include <ctime>

namespace toxtrig {

using nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool RunManifest::clean() const {
  for (const auto& [_, diag] : documents)
    if (!diag.clean()) return false;
  return true;
}

json RunManifest::to_json() const {
  json config_json{
      {"model", config.request.model},
      {"temperature", config.request.temperature},
      {"top_p", config.request.top_p},
      {"max_tokens", config.request.max_tokens},
      {"seed", config.request.seed},
      {"k", config.request.k},
      {"endpoint", config.endpoint},
      {"completions_path", config.completions_path},
      {"parallelism", config.parallelism},
      {"max_retries", config.max_retries},
      {"assertion_variant", config.assertion_variant},
      {"example_char_budget", config.example_char_budget},
  };

  json docs = json::object();
  for (const auto& [doc_id, diag] : documents) {
    json hallucinated = json::array();
    for (const auto& h : diag.hallucinated)
      hallucinated.push_back({{"section", h.section_index},
                              {"kind", std::string(to_tag(h.kind))},
                              {"phrase", h.phrase}});
    docs[doc_id] = json{
        {"sections", diag.sections},
        {"failed_sections", diag.failed_sections},
        {"errors", diag.errors},
        {"hallucinated_phrases", std::move(hallucinated)},
        {"candidate_spans", diag.candidate_spans},
        {"kept_mentions", diag.kept_mentions},
        {"overlaps_resolved", diag.candidate_spans - diag.kept_mentions},
    };
  }

  return json{
      {"tool_version", tool_version},
      {"strategy", strategy},
      {"seed", seed},
      {"corpus_digest", corpus_digest},
      {"config", std::move(config_json)},
      {"inputs", inputs},
      {"documents", std::move(docs)},
      {"started_at", started_at},
      {"finished_at", finished_at},
  };
}

std::string RunManifest::to_pretty_json() const { return to_json().dump(2) + "\n"; }

}  // namespace toxtrig
