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

#include "toxtrig/prompt.hpp"

#include <algorithm>

#include "toxtrig/errors.hpp"
#include "toxtrig/rng.hpp"
#include "toxtrig/unicode.hpp"

namespace toxtrig {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kPlaceholder = "{text}";

std::string substitute_text(const std::string& format,
                            const std::string& text) {
  std::string out = format;
  std::size_t pos = 0;
  bool replaced = false;
  while ((pos = out.find(kPlaceholder, pos)) != std::string::npos) {
    out.replace(pos, kPlaceholder.size(), text);
    pos += text.size();
    replaced = true;
  }
  if (!replaced)
    throw ConfigError("prompt example format lacks the {text} placeholder");
  return out;
}

bool contains_fold(const std::string& haystack, std::string_view needle) {
  const std::u32string h = uni::fold(uni::decode_utf8(haystack));
  const std::u32string n = uni::fold(uni::decode_utf8(needle));
  return h.find(n) != std::u32string::npos;
}

// Cue-word check for demonstration labels: a phrase counts as negated when
// one of the two preceding tokens is a negation marker.
std::string infer_assertion(const std::string& text,
                            const std::string& phrase) {
  const std::size_t pos = text.find(phrase);
  if (pos == std::string::npos || pos == 0) return "present";
  const std::u32string prefix = uni::fold(uni::decode_utf8(text.substr(0, pos)));
  std::vector<std::u32string> tokens;
  std::u32string current;
  for (char32_t c : prefix) {
    if (uni::is_letter(c)) {
      current.push_back(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  const std::size_t from = tokens.size() > 2 ? tokens.size() - 2 : 0;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const std::string tok = uni::encode_utf8(tokens[i]);
    if (tok == "no" || tok == "sin" || tok == "niega" || tok == "niegan")
      return "negated";
  }
  return "present";
}

std::string serialize_demonstration(const FewShotExample& example,
                                    bool assertion_variant) {
  if (!assertion_variant) return serialize_phrase_set(example.gold);
  ordered_json j;
  for (TriggerType t : kAllTriggerTypes) {
    ordered_json list = ordered_json::array();
    for (const std::string& phrase : example.gold.of(t))
      list.push_back({{"phrase", phrase},
                      {"assertion", infer_assertion(example.text, phrase)}});
    j[std::string(to_json_key(t))] = std::move(list);
  }
  return j.dump();
}

FewShotExample make_example(const Document& doc,
                            const std::vector<Mention>& mentions,
                            std::size_t char_budget) {
  FewShotExample example;
  example.text = doc.text;
  const std::vector<Mention>* used = &mentions;
  std::vector<Mention> section_mentions;
  if (uni::utf8_length(doc.text) > char_budget) {
    for (const Section& sec : segment_sections(doc.text)) {
      section_mentions.clear();
      for (const Mention& m : mentions)
        if (m.start >= sec.start && m.end <= sec.end)
          section_mentions.push_back(m);
      if (!section_mentions.empty()) {
        example.text = sec.text;
        used = &section_mentions;
        break;
      }
    }
    // No section fully contains a mention: fall back to the whole document.
  }
  for (const Mention& m : *used) {
    if (example.text.find(m.surface) == std::string::npos)
      throw IntegrityError("gold phrase '" + m.surface +
                           "' does not occur verbatim in example text of '" +
                           doc.id + "'");
    example.gold.of(m.kind).push_back(m.surface);
  }
  return example;
}

}  // namespace

PromptTemplate PromptTemplate::standard(bool assertion_variant) {
  PromptTemplate t;
  t.assertion_variant = assertion_variant;
  t.system_text =
      "You are a clinical text annotation assistant for Spanish case "
      "reports.";
  t.task_instruction =
      "Read the clinical text and extract every phrase that mentions a toxic "
      "habit of the patient. Classify each phrase into one of four "
      "categories: tobacco, alcohol, cannabis, or drug. Copy each phrase "
      "exactly as it appears in the text and keep it as short as possible. "
      "Include negated and historical mentions (for example 'no fumador' "
      "still mentions tobacco). Answer with a JSON object holding the keys "
      "\"tobacco\", \"alcohol\", \"cannabis\" and \"drug\"; use empty lists "
      "for categories without mentions.";
  if (assertion_variant)
    t.task_instruction +=
        " For every phrase also report whether the habit is asserted or "
        "negated, as objects {\"phrase\": ..., \"assertion\": \"present\" or "
        "\"negated\"}.";
  t.example_format = "Text:\n{text}";
  return t;
}

std::vector<FewShotExample> sample_examples(const Corpus& train, std::size_t k,
                                            std::uint64_t seed,
                                            std::size_t char_budget) {
  if (k == 0) return {};

  std::vector<const Document*> eligible;
  for (const Document& doc : train.documents) {
    auto it = train.gold.find(doc.id);
    if (it != train.gold.end() && !it->second.empty())
      eligible.push_back(&doc);
  }
  if (k > eligible.size())
    throw Error("requested " + std::to_string(k) +
                " few-shot examples but only " +
                std::to_string(eligible.size()) +
                " train documents carry gold mentions");

  deterministic_shuffle(eligible, seed);
  std::vector<FewShotExample> examples;
  examples.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    examples.push_back(make_example(*eligible[i],
                                    train.gold.at(eligible[i]->id),
                                    char_budget));
  return examples;
}

std::vector<ChatMessage> render_prompt(const PromptTemplate& prompt,
                                       std::span<const FewShotExample> examples,
                                       const Section& target) {
  std::vector<ChatMessage> messages;
  messages.push_back(
      {"system", prompt.system_text + "\n\n" + prompt.task_instruction});
  for (const FewShotExample& ex : examples) {
    messages.push_back({"user", substitute_text(prompt.example_format,
                                                ex.text)});
    messages.push_back(
        {"assistant", serialize_demonstration(ex, prompt.assertion_variant)});
  }
  messages.push_back(
      {"user", substitute_text(prompt.example_format, target.text)});

  std::string joined;
  for (const ChatMessage& m : messages) joined += m.content + "\n";
  for (TriggerType t : kAllTriggerTypes)
    if (!contains_fold(joined, to_json_key(t)))
      throw ConfigError("rendered prompt does not mention trigger type '" +
                        std::string(to_json_key(t)) + "'");
  return messages;
}

json build_response_schema(bool assertion_variant) {
  json item;
  if (assertion_variant) {
    item = json{{"type", "object"},
                {"additionalProperties", false},
                {"required", {"phrase", "assertion"}},
                {"properties",
                 {{"phrase", {{"type", "string"}}},
                  {"assertion",
                   {{"type", "string"},
                    {"enum", {"present", "negated"}}}}}}};
  } else {
    item = json{{"type", "string"}};
  }
  json properties;
  json required = json::array();
  for (TriggerType t : kAllTriggerTypes) {
    properties[std::string(to_json_key(t))] =
        json{{"type", "array"}, {"items", item}};
    required.push_back(std::string(to_json_key(t)));
  }
  return json{{"type", "object"},
              {"additionalProperties", false},
              {"required", std::move(required)},
              {"properties", std::move(properties)}};
}

}  // namespace toxtrig
