// Copyright 2026 The docsum Authors.
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

#ifndef DOCSUM_ERROR_HPP_
#define DOCSUM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace docsum {

// Input that violates a documented contract: malformed corpus files, duplicate
// ids, unknown categories, schema mismatches. The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file that could not be parsed at all.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace docsum

#endif  // DOCSUM_ERROR_HPP_
