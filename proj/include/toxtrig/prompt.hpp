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

#ifndef TOXTRIG_PROMPT_HPP_
#define TOXTRIG_PROMPT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "toxtrig/completion_client.hpp"
#include "toxtrig/corpus.hpp"
#include "toxtrig/phrase_set.hpp"
#include "toxtrig/segmentation.hpp"

namespace toxtrig {

inline constexpr std::size_t kDefaultExampleCharBudget = 1500;

// An in-context demonstration: a train excerpt plus the phrases annotated in
// it. Every gold phrase occurs verbatim in text.
struct FewShotExample {
  std::string text;
  PhraseSet gold;

  bool operator==(const FewShotExample&) const = default;
};

struct PromptTemplate {
  std::string system_text;
  std::string task_instruction;
  std::string example_format;  // must contain the {text} placeholder
  bool assertion_variant = false;

  // Built-in template; the assertion variant additionally asks for a
  // present/negated label per phrase.
  static PromptTemplate standard(bool assertion_variant = false);
};

// Draws k distinct documents (deterministically for a given seed) from the
// train documents that carry gold mentions. Documents within the character
// budget contribute whole; longer ones fall back to their first section that
// fully contains a gold mention, or to the whole document when no section
// does. Raises Error when fewer than k documents are eligible.
std::vector<FewShotExample> sample_examples(
    const Corpus& train, std::size_t k, std::uint64_t seed,
    std::size_t char_budget = kDefaultExampleCharBudget);

// System message, then one user/assistant pair per example, then the target
// section as the final user message. Verifies the placeholder resolves and
// the rendered prompt names all four trigger types.
std::vector<ChatMessage> render_prompt(const PromptTemplate& prompt,
                                       std::span<const FewShotExample> examples,
                                       const Section& target);

// Structured-output schema for the four phrase lists; the assertion variant
// upgrades list items to {phrase, assertion} objects.
nlohmann::json build_response_schema(bool assertion_variant);

}  // namespace toxtrig

#endif  // TOXTRIG_PROMPT_HPP_
