// Copyright 2026 The wft-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wft {

// Argument outside an operation's mathematical domain (non-positive length,
// superluminal speed, singular denominator, ...). std::domain_error so the
// CLI can map every violation of a formula precondition to one exit code.
using std::domain_error;

// Request exceeds a hard resource budget (e.g. mesh vertex cap).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wft
