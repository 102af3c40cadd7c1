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

#ifndef TOXTRIG_MANIFEST_HPP_
#define TOXTRIG_MANIFEST_HPP_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "toxtrig/alignment.hpp"
#include "toxtrig/run_config.hpp"

namespace toxtrig {

inline constexpr std::string_view kToxtrigVersion = "0.1.0";

struct DocumentDiagnostics {
  std::size_t sections = 0;
  std::vector<std::size_t> failed_sections;
  std::vector<std::string> errors;  // parallel to failed_sections
  std::vector<PhraseAlignment::Hallucination> hallucinated;
  std::size_t candidate_spans = 0;
  std::size_t kept_mentions = 0;

  bool clean() const { return failed_sections.empty() && errors.empty(); }
};

// Record of one extraction run: configuration snapshot, seed, corpus digest,
// inputs and per-document diagnostics. Together with the replay fixture it
// pins everything needed to reproduce the run offline. Serialized with
// sorted keys, so identical runs give identical bytes apart from the two
// timestamp fields.
struct RunManifest {
  std::string tool_version{kToxtrigVersion};
  std::string strategy;
  std::uint64_t seed = 0;
  std::string corpus_digest;
  RunConfig config;
  std::map<std::string, std::string> inputs;  // flag name -> path
  std::map<std::string, DocumentDiagnostics> documents;
  std::string started_at;
  std::string finished_at;

  bool clean() const;
  nlohmann::json to_json() const;
  std::string to_pretty_json() const;
};

// Current UTC time as an ISO-8601 second-resolution string.
std::string utc_timestamp();

}  // namespace toxtrig

#endif  // TOXTRIG_MANIFEST_HPP_
