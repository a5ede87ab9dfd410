// Copyright 2026 The symbreak Authors
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

#ifndef SYMBREAK_ERRORS_H_
#define SYMBREAK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace symbreak {

// Malformed user input: graph6 words, family specs, bad arguments.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused to run because a configured resource bound would be
// exceeded. The message names the bound.
class SizeBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No closed-form rule covers the requested (graph, k, mode) combination.
class NoClosedForm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace symbreak

#endif  // SYMBREAK_ERRORS_H_
