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

#ifndef TOXTRIG_ERRORS_HPP_
#define TOXTRIG_ERRORS_HPP_

#include <stdexcept>

namespace toxtrig {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that could not be read at all: malformed standoff lines, invalid
// UTF-8, unparseable JSON payloads.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally readable input whose content contradicts itself: offsets that
// do not match surfaces, spans out of bounds, conflicting dictionary entries.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Completion-client failures: HTTP errors after retries, replay misses.
class ClientError : public Error {
 public:
  using Error::Error;
};

}  // namespace toxtrig

#endif  // TOXTRIG_ERRORS_HPP_
