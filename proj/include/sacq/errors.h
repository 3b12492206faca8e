// Copyright 2026 The sacq Authors
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

#ifndef SACQ_ERRORS_H
#define SACQ_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sacq {

/// Malformed input: bad truth-table length, bad hex digit, ANF syntax, and so on.
/// `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// A request exceeds a hard size ceiling (variable count, qubit count, enumeration bound).
class SizeLimitError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// A numerical or structural invariant was violated at runtime (e.g. norm drift).
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace sacq

#endif
