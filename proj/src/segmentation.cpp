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

#include "toxtrig/segmentation.hpp"

#include "toxtrig/unicode.hpp"

namespace toxtrig {

namespace {

bool is_break(char32_t c) { return c == U'\n' || c == U'\r'; }

bool is_terminator(char32_t c) {
  return c == U'.' || c == U'?' || c == U'!' || c == 0x2026;  // …
}

}  // namespace

std::vector<Section> segment_sections(const std::string& text) {
  const std::u32string chars = uni::decode_utf8(text);
  const std::size_t n = chars.size();
  std::vector<Section> sections;

  auto flush = [&](std::size_t a, std::size_t b) {
    while (a < b && uni::is_space(chars[a])) ++a;
    while (b > a && uni::is_space(chars[b - 1])) --b;
    if (a < b)
      sections.push_back(Section{
          a, b,
          uni::encode_utf8(std::u32string_view(chars).substr(a, b - a))});
  };

  std::size_t fragment_start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_break(chars[i])) {
      ++i;
      continue;
    }
    const std::size_t run_start = i;
    std::size_t breaks = 0;
    while (i < n && is_break(chars[i])) {
      if (chars[i] == U'\r' && i + 1 < n && chars[i + 1] == U'\n')
        i += 2;
      else
        i += 1;
      ++breaks;
    }
    if (breaks >= 2) {
      flush(fragment_start, run_start);
      fragment_start = i;
    }
    // A single break stays inside its fragment.
  }
  flush(fragment_start, n);
  return sections;
}

std::size_t count_sentences(const std::string& text) {
  const std::u32string chars = uni::decode_utf8(text);
  const std::size_t n = chars.size();
  std::size_t count = 0;
  bool in_sentence = false;
  for (std::size_t i = 0; i < n; ++i) {
    const char32_t c = chars[i];
    if (is_break(c)) {
      if (in_sentence) {
        ++count;
        in_sentence = false;
      }
      continue;
    }
    if (is_terminator(c)) {
      in_sentence = true;
      std::size_t j = i + 1;
      while (j < n && uni::is_space(chars[j])) ++j;
      if (j >= n || uni::is_upper(chars[j]) || chars[j] == U'¿' ||
          chars[j] == U'¡') {
        ++count;
        in_sentence = false;
      }
      continue;
    }
    if (!uni::is_space(c)) in_sentence = true;
  }
  if (in_sentence) ++count;
  return count;
}

}  // namespace toxtrig
