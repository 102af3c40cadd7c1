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

#ifndef TOXTRIG_RUN_CONFIG_HPP_
#define TOXTRIG_RUN_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "toxtrig/llm_extractor.hpp"

namespace toxtrig {

// Everything an extraction run needs beyond the corpus itself. Read from a
// flat `key = value` config file (a TOML subset: comments with '#', quoted or
// bare strings, integers, floats, booleans).
struct RunConfig {
  LlmRequestConfig request;
  std::string endpoint;  // base URL, e.g. https://api.example.com
  std::string completions_path = "/v1/chat/completions";
  std::size_t parallelism = 4;
  std::size_t max_retries = 2;
  bool assertion_variant = false;
  std::size_t example_char_budget = kDefaultExampleCharBudget;
};

// Recognized keys: endpoint, completions_path, model, k, seed, temperature,
// top_p, max_tokens, parallelism, max_retries, assertion_variant,
// example_char_budget. Unknown keys and invalid values raise ConfigError
// with the line number.
RunConfig parse_run_config(std::string_view text);

RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace toxtrig

#endif  // TOXTRIG_RUN_CONFIG_HPP_
