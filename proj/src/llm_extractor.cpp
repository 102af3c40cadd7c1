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

#include "toxtrig/llm_extractor.hpp"

namespace toxtrig {

std::vector<SectionExtraction> llm_extract_document(
    const Document& doc, const LlmRequestConfig& config,
    const PromptTemplate& prompt, std::span<const FewShotExample> examples,
    CompletionClient& client) {
  std::vector<SectionExtraction> results;
  for (const Section& section : segment_sections(doc.text)) {
    SectionExtraction result;
    result.section = section;
    try {
      ChatRequest request;
      request.model = config.model;
      request.temperature = config.temperature;
      request.top_p = config.top_p;
      request.max_tokens = config.max_tokens;
      request.messages = render_prompt(prompt, examples, section);
      request.response_schema = build_response_schema(prompt.assertion_variant);
      const std::string payload = client.complete(request);
      result.phrases =
          parse_phrase_set_payload(payload, prompt.assertion_variant);
    } catch (const std::exception& e) {
      result.error = e.what();
      result.phrases = PhraseSet{};
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace toxtrig
