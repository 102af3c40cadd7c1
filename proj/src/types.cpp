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

#include "toxtrig/types.hpp"

namespace toxtrig {

std::string_view to_tag(TriggerType t) {
  switch (t) {
    case TriggerType::Tobacco:
      return "TOBACCO";
    case TriggerType::Alcohol:
      return "ALCOHOL";
    case TriggerType::Cannabis:
      return "CANNABIS";
    case TriggerType::Drug:
      return "DRUG";
  }
  return "TOBACCO";
}

std::optional<TriggerType> trigger_type_from_tag(std::string_view tag) {
  for (TriggerType t : kAllTriggerTypes)
    if (tag == to_tag(t)) return t;
  return std::nullopt;
}

}  // namespace toxtrig
