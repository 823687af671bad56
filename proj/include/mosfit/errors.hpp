// Copyright 2026 The mosfit Authors. All Rights Reserved.
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

#ifndef MOSFIT_ERRORS_HPP_
#define MOSFIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mosfit {

// Invalid user-supplied data (bad ratings, malformed files, mismatched ids).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A metric whose value is mathematically undefined for the given input
// (e.g. correlation of a constant vector, ppref over zero pairs).
class UndefinedMetricError : public std::runtime_error {
 public:
  explicit UndefinedMetricError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace mosfit

#endif  // MOSFIT_ERRORS_HPP_
