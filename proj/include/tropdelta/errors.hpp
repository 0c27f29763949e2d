// Copyright 2026 The tropdelta Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tropdelta {

// Malformed caller input: bad labels, unknown edges, non-prime moduli.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The cell structure used here exists only for n >= 4.
class UnsupportedRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed (non-canonical input, coefficient blow-up).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_supported_n(int n, const char* what) {
  if (n < 4) {
    throw UnsupportedRange(std::string(what) + ": n = " + std::to_string(n) +
                           " is unsupported (the CW structure needs n >= 4)");
  }
}

}  // namespace tropdelta
