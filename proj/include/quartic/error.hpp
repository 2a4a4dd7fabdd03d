// Copyright 2026 The Quartic Authors.
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

namespace quartic {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain of the requested operation.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Both circulant lengths are even: the graph is disconnected and no
// circulant-accordion criterion applies.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

// A witness was requested for parameters the decider rejects.
class NotIsomorphic : public Error {
 public:
  using Error::Error;
};

// The oracle exceeded its node budget before finishing the search.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Malformed graph or witness document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace quartic
