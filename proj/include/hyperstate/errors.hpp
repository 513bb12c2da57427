// Copyright 2026 The hyperstate Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperstate {

/// Malformed serialized input. `position()` is the byte offset where parsing stopped.
class parse_error : public std::runtime_error {
   public:
    parse_error(const std::string &what, std::size_t position)
        : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"), position_(position) {
    }
    std::size_t position() const noexcept {
        return position_;
    }

   private:
    std::size_t position_;
};

/// Well-formed input that violates a structural invariant.
class validation_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a size limit of the chosen algorithm.
class unsupported_size_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hyperstate
