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

#include "toxtrig/errors.hpp"
#include "toxtrig/unicode.hpp"

using namespace toxtrig;

TEST_CASE("decode/encode round-trips Spanish text") {
  const std::string text = "Paciente con tabaquismo: áéíóúüñ ¿fumador? ¡Sí!";
  const std::u32string chars = uni::decode_utf8(text);
  CHECK(uni::encode_utf8(chars) == text);
}

TEST_CASE("decode rejects malformed UTF-8") {
  CHECK_THROWS_AS(uni::decode_utf8("\xC3"), ParseError);          // truncated
  CHECK_THROWS_AS(uni::decode_utf8("\x80"), ParseError);          // stray cont
  CHECK_THROWS_AS(uni::decode_utf8("\xC0\xAF"), ParseError);      // overlong
  CHECK_THROWS_AS(uni::decode_utf8("\xED\xA0\x80"), ParseError);  // surrogate
}

TEST_CASE("offsets count scalar values, not bytes") {
  const std::string text = "cocaína";  // 7 characters, 8 bytes
  CHECK(text.size() == 8);
  CHECK(uni::utf8_length(text) == 7);
  CHECK(uni::slice_utf8(text, 0, 7) == "cocaína");
  CHECK(uni::slice_utf8(text, 4, 5) == "í");
  CHECK_THROWS_AS(uni::slice_utf8(text, 0, 8), IntegrityError);
}

TEST_CASE("case folding covers the Spanish alphabet") {
  CHECK(uni::fold(U"FUMADOR") == U"fumador");
  CHECK(uni::fold(U"ÁÉÍÓÚÜÑ") == U"áéíóúüñ");
  CHECK(uni::fold(U"ya minúsculas") == U"ya minúsculas");
}

TEST_CASE("folding is per-character and preserves length") {
  const std::u32string mixed = U"Tabaco ß ÄÖÜ Ÿ ŽŠ Ñ 123 ¿?";
  CHECK(uni::fold(mixed).size() == mixed.size());
}

TEST_CASE("letter and uppercase classification") {
  CHECK(uni::is_letter(U'a'));
  CHECK(uni::is_letter(U'ñ'));
  CHECK(uni::is_letter(U'É'));
  CHECK(!uni::is_letter(U'3'));
  CHECK(!uni::is_letter(U' '));
  CHECK(!uni::is_letter(U'¿'));
  CHECK(uni::is_upper(U'A'));
  CHECK(uni::is_upper(U'Ñ'));
  CHECK(!uni::is_upper(U'a'));
  CHECK(!uni::is_upper(U'.'));
}
