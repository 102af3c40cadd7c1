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
#include "toxtrig/run_config.hpp"

using namespace toxtrig;

TEST_CASE("defaults match the submitted run configuration") {
  const RunConfig cfg = parse_run_config("");
  CHECK(cfg.request.temperature == 0.0);
  CHECK(cfg.request.top_p == 1.0);
  CHECK(cfg.request.max_tokens == 4000);
  CHECK(cfg.request.k == 5);
  CHECK(cfg.parallelism == 4);
  CHECK(cfg.max_retries == 2);
  CHECK(!cfg.assertion_variant);
}

TEST_CASE("a full config file parses") {
  const RunConfig cfg = parse_run_config(
      "# extraction run\n"
      "endpoint = \"https://api.example.com\"  # azure deployment\n"
      "completions_path = \"/openai/chat\"\n"
      "model = \"gpt-4.1\"\n"
      "k = 7\n"
      "seed = 42\n"
      "temperature = 0.5\n"
      "top_p = 0.9\n"
      "max_tokens = 16000\n"
      "parallelism = 2\n"
      "max_retries = 1\n"
      "assertion_variant = true\n"
      "example_char_budget = 800\n");
  CHECK(cfg.endpoint == "https://api.example.com");
  CHECK(cfg.completions_path == "/openai/chat");
  CHECK(cfg.request.model == "gpt-4.1");
  CHECK(cfg.request.k == 7);
  CHECK(cfg.request.seed == 42);
  CHECK(cfg.request.temperature == 0.5);
  CHECK(cfg.request.top_p == 0.9);
  CHECK(cfg.request.max_tokens == 16000);
  CHECK(cfg.parallelism == 2);
  CHECK(cfg.max_retries == 1);
  CHECK(cfg.assertion_variant);
  CHECK(cfg.example_char_budget == 800);
}

TEST_CASE("bare strings and escapes are accepted") {
  const RunConfig cfg = parse_run_config(
      "model = gpt-4.1\nendpoint = \"http://x#y\\\"z\"\n");
  CHECK(cfg.request.model == "gpt-4.1");
  CHECK(cfg.endpoint == "http://x#y\"z");
}

TEST_CASE("unknown keys and bad values fail with line numbers") {
  auto expect_line = [](const std::string& text, const std::string& line) {
    try {
      parse_run_config(text);
      FAIL("expected ConfigError for: ", text);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(line) != std::string::npos);
    }
  };
  expect_line("model = x\nmystery = 1\n", "line 2");
  expect_line("temperature = -1\n", "line 1");
  expect_line("max_tokens = 0\n", "line 1");
  expect_line("k = five\n", "line 1");
  expect_line("assertion_variant = maybe\n", "line 1");
  expect_line("[table]\n", "line 1");
  expect_line("sin igual\n", "line 1");
  expect_line("model = \"a\\\"\n", "line 1");  // dangling escape
  expect_line("model = \"a\\q\"\n", "line 1");
}
