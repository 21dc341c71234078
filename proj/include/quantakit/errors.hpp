// Copyright 2026 The quantakit Authors
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

namespace quantakit {

/// Two typed arrows were combined whose bases do not line up.
class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A label was looked up in a basis that does not contain it.
class UnknownLabel : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search was asked to run beyond its configured bound.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NotUnitary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step function handed to rfold is not complemented by fst.
class NotComplemented : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested work lies outside what this library synthesizes.
class OutOfScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InsufficientAncillas : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ancilla was left in a nonzero state: always a synthesis bug.
class DirtyAncilla : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quantakit
