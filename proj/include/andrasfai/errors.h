// Copyright 2026 The Andrasfai Authors
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

#ifndef ANDRASFAI_ERRORS_H_
#define ANDRASFAI_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace andrasfai {

// Argument outside the domain of an operation (k < 1, j out of range,
// vertex out of range, degree mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Connection set violating the Cayley conditions. `residue` is the element
// that breaks them.
class ConnectionSetError : public DomainError {
 public:
  ConnectionSetError(const std::string& what, long long residue)
      : DomainError(what), residue_(residue) {}
  long long residue() const { return residue_; }

 private:
  long long residue_;
};

// Malformed graph6 / edge-list text. `offset` is the byte offset of the
// first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A group enumeration would exceed the configured element cap.
class GroupTooLargeError : public std::runtime_error {
 public:
  explicit GroupTooLargeError(std::size_t cap)
      : std::runtime_error("group too large: more than " +
                           std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// verify_theorem called outside k >= 2.
class TheoremHypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace andrasfai

#endif  // ANDRASFAI_ERRORS_H_
