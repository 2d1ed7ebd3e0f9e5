// Copyright 2026 The mwl Authors.
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

#ifndef MWL_ERRORS_HPP_
#define MWL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mwl {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would touch more vectors than the configured budget allows.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

// Malformed text input (code specs, polynomials, Gray-map tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mwl

#endif  // MWL_ERRORS_HPP_
