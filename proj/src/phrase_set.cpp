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

#include "toxtrig/phrase_set.hpp"

#include <json.hpp>

#include "toxtrig/errors.hpp"
#include "toxtrig/unicode.hpp"

namespace toxtrig {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string trim_phrase(const std::string& phrase) {
  std::u32string chars = uni::decode_utf8(phrase);
  std::size_t a = 0;
  std::size_t b = chars.size();
  while (a < b && uni::is_space(chars[a])) ++a;
  while (b > a && uni::is_space(chars[b - 1])) --b;
  return uni::encode_utf8(std::u32string_view(chars).substr(a, b - a));
}

std::string excerpt(const std::string& payload) {
  constexpr std::size_t kMax = 200;
  if (payload.size() <= kMax) return payload;
  return payload.substr(0, kMax) + "...";
}

[[noreturn]] void bad_payload(const std::string& payload,
                              const std::string& why) {
  throw ParseError("invalid phrase payload: " + why + "; payload: " +
                   excerpt(payload));
}

}  // namespace

std::size_t PhraseSet::total() const {
  std::size_t n = 0;
  for (const auto& list : by_type) n += list.size();
  return n;
}

std::string_view to_json_key(TriggerType t) {
  switch (t) {
    case TriggerType::Tobacco:
      return "tobacco";
    case TriggerType::Alcohol:
      return "alcohol";
    case TriggerType::Cannabis:
      return "cannabis";
    case TriggerType::Drug:
      return "drug";
  }
  return "tobacco";
}

std::string serialize_phrase_set(const PhraseSet& phrases) {
  ordered_json j;
  for (TriggerType t : kAllTriggerTypes)
    j[std::string(to_json_key(t))] = phrases.of(t);
  return j.dump();
}

PhraseSet parse_phrase_set_payload(const std::string& payload,
                                   bool assertion_variant) {
  json j;
  try {
    j = json::parse(payload);
  } catch (const json::exception& e) {
    bad_payload(payload, std::string("not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) bad_payload(payload, "top-level value is not an object");

  PhraseSet out;
  for (TriggerType t : kAllTriggerTypes) {
    const std::string key(to_json_key(t));
    if (!j.contains(key)) bad_payload(payload, "missing key '" + key + "'");
    const json& list = j.at(key);
    if (!list.is_array()) bad_payload(payload, "'" + key + "' is not a list");
    for (const json& item : list) {
      std::string phrase;
      if (assertion_variant) {
        if (!item.is_object() || !item.contains("phrase") ||
            !item.at("phrase").is_string() || !item.contains("assertion") ||
            !item.at("assertion").is_string())
          bad_payload(payload, "'" + key +
                                   "' entries must be {phrase, assertion} "
                                   "objects in the assertion variant");
        phrase = item.at("phrase").get<std::string>();
      } else {
        if (!item.is_string())
          bad_payload(payload, "'" + key + "' entries must be strings");
        phrase = item.get<std::string>();
      }
      phrase = trim_phrase(phrase);
      if (!phrase.empty()) out.of(t).push_back(std::move(phrase));
    }
  }
  return out;
}

}  // namespace toxtrig
