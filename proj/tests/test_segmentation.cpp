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

#include <doctest.h>

#include <random>

#include "toxtrig/segmentation.hpp"
#include "toxtrig/unicode.hpp"

using namespace toxtrig;

TEST_CASE("splits on blank lines with original-text offsets") {
  const auto sections = segment_sections("Anamnesis.\n\nFumador activo.");
  REQUIRE(sections.size() == 2);
  CHECK(sections[0] == Section{0, 10, "Anamnesis."});
  CHECK(sections[1] == Section{12, 27, "Fumador activo."});
}

TEST_CASE("a single newline does not split") {
  const auto sections = segment_sections("A\nB");
  REQUIRE(sections.size() == 1);
  CHECK(sections[0] == Section{0, 3, "A\nB"});
}

TEST_CASE("empty and whitespace-only input yields no sections") {
  CHECK(segment_sections("").empty());
  CHECK(segment_sections(" \n\n\t\n\n ").empty());
}

TEST_CASE("sections are trimmed and longer separator runs add nothing") {
  const auto sections = segment_sections(" x \n\n\n\n y ");
  REQUIRE(sections.size() == 2);
  CHECK(sections[0] == Section{1, 2, "x"});
  CHECK(sections[1] == Section{8, 9, "y"});
}

TEST_CASE("CRLF pairs count as single line breaks") {
  const auto one = segment_sections("a\r\nb");
  REQUIRE(one.size() == 1);
  const auto two = segment_sections("a\r\n\r\nb");
  REQUIRE(two.size() == 2);
  CHECK(two[1].text == "b");
}

TEST_CASE("every section is a slice of the original text") {
  std::mt19937_64 rng(7);
  const std::u32string alphabet = U"ab ñé.\n";
  for (int round = 0; round < 200; ++round) {
    std::u32string chars;
    const std::size_t len = rng() % 120;
    for (std::size_t i = 0; i < len; ++i)
      chars.push_back(alphabet[rng() % alphabet.size()]);
    const std::string text = uni::encode_utf8(chars);

    std::size_t prev_end = 0;
    for (const Section& s : segment_sections(text)) {
      CHECK(s.start >= prev_end);
      CHECK(s.start < s.end);
      CHECK(uni::slice_utf8(text, s.start, s.end) == s.text);
      prev_end = s.end;
    }
  }
}

TEST_CASE("sentence counting follows the terminator rule") {
  CHECK(count_sentences("Hola. ¿Cómo estás? Bien.") == 3);
  CHECK(count_sentences("") == 0);
  CHECK(count_sentences("sin puntuación final") == 1);
  CHECK(count_sentences("Anamnesis.\n\nFumador activo.") == 2);
  // lowercase after the period: no boundary ("p. ej.")
  CHECK(count_sentences("p. ej. Algo") == 2);
  // a line break ends a sentence in progress
  CHECK(count_sentences("Anamnesis\nFumador activo.") == 2);
}

TEST_CASE("sentence counting is deterministic") {
  const std::string text = "Uno. Dos… ¿Tres? ¡Cuatro! cinco";
  const std::size_t first = count_sentences(text);
  for (int i = 0; i < 5; ++i) CHECK(count_sentences(text) == first);
}
