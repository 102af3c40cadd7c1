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

#ifndef TOXTRIG_LLM_EXTRACTOR_HPP_
#define TOXTRIG_LLM_EXTRACTOR_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toxtrig/completion_client.hpp"
#include "toxtrig/phrase_set.hpp"
#include "toxtrig/prompt.hpp"
#include "toxtrig/segmentation.hpp"
#include "toxtrig/types.hpp"

namespace toxtrig {

// Request parameters of one extraction run.
struct LlmRequestConfig {
  std::string model = "gpt-4.1";
  double temperature = 0.0;
  double top_p = 1.0;
  std::size_t max_tokens = 4000;
  std::uint64_t seed = 0;  // example-sampling seed
  std::size_t k = 5;       // few-shot example count; 0 = zero-shot
};

struct SectionExtraction {
  Section section;
  PhraseSet phrases;
  std::string error;  // empty on success; failed sections keep empty phrases

  bool ok() const { return error.empty(); }
};

// One completion request per section, in section order. Failures (transport
// after retries, unparseable payloads) are recorded per section and the
// document continues.
std::vector<SectionExtraction> llm_extract_document(
    const Document& doc, const LlmRequestConfig& config,
    const PromptTemplate& prompt, std::span<const FewShotExample> examples,
    CompletionClient& client);

}  // namespace toxtrig

#endif  // TOXTRIG_LLM_EXTRACTOR_HPP_
