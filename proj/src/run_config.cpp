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

#include "toxtrig/run_config.hpp"

#include <charconv>

#include "toxtrig/errors.hpp"
#include "toxtrig/io_util.hpp"

namespace toxtrig {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& why) {
  throw ConfigError("config line " + std::to_string(lineno) + ": " + why);
}

// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
    if (c == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string parse_string(std::string_view value, std::size_t lineno) {
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    std::string out;
    const std::size_t end = value.size() - 1;  // closing quote
    for (std::size_t i = 1; i < end; ++i) {
      if (value[i] != '\\') {
        out.push_back(value[i]);
        continue;
      }
      if (i + 1 >= end) bad_line(lineno, "dangling escape");
      ++i;
      switch (value[i]) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        default:
          bad_line(lineno,
                   std::string("unsupported escape '\\") + value[i] + "'");
      }
    }
    return out;
  }
  return std::string(value);
}

std::uint64_t parse_unsigned(std::string_view value, std::size_t lineno) {
  std::uint64_t out = 0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    bad_line(lineno, "expected a non-negative integer, got '" +
                         std::string(value) + "'");
  return out;
}

double parse_double(std::string_view value, std::size_t lineno) {
  double out = 0.0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    bad_line(lineno, "expected a number, got '" + std::string(value) + "'");
  return out;
}

bool parse_bool(std::string_view value, std::size_t lineno) {
  if (value == "true") return true;
  if (value == "false") return false;
  bad_line(lineno, "expected true or false, got '" + std::string(value) + "'");
}

}  // namespace

RunConfig parse_run_config(std::string_view text) {
  RunConfig cfg;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = eol == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[')
      bad_line(lineno, "tables are not supported; use flat keys");
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      bad_line(lineno, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) bad_line(lineno, "empty value for key '" + key + "'");

    if (key == "endpoint") {
      cfg.endpoint = parse_string(value, lineno);
    } else if (key == "completions_path") {
      cfg.completions_path = parse_string(value, lineno);
    } else if (key == "model") {
      cfg.request.model = parse_string(value, lineno);
    } else if (key == "k") {
      cfg.request.k = parse_unsigned(value, lineno);
    } else if (key == "seed") {
      cfg.request.seed = parse_unsigned(value, lineno);
    } else if (key == "temperature") {
      cfg.request.temperature = parse_double(value, lineno);
      if (cfg.request.temperature < 0.0)
        bad_line(lineno, "temperature must be >= 0");
    } else if (key == "top_p") {
      cfg.request.top_p = parse_double(value, lineno);
    } else if (key == "max_tokens") {
      cfg.request.max_tokens = parse_unsigned(value, lineno);
      if (cfg.request.max_tokens == 0)
        bad_line(lineno, "max_tokens must be > 0");
    } else if (key == "parallelism") {
      cfg.parallelism = parse_unsigned(value, lineno);
      if (cfg.parallelism == 0) bad_line(lineno, "parallelism must be > 0");
    } else if (key == "max_retries") {
      cfg.max_retries = parse_unsigned(value, lineno);
    } else if (key == "assertion_variant") {
      cfg.assertion_variant = parse_bool(value, lineno);
    } else if (key == "example_char_budget") {
      cfg.example_char_budget = parse_unsigned(value, lineno);
      if (cfg.example_char_budget == 0)
        bad_line(lineno, "example_char_budget must be > 0");
    } else {
      bad_line(lineno, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_file(path));
}

}  // namespace toxtrig
