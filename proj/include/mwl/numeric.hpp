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

#ifndef MWL_NUMERIC_HPP_
#define MWL_NUMERIC_HPP_

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace mwl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(a, b) with C(a, b) = 0 for b < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

// base^exp, or nullopt once the result exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit = UINT64_MAX);

// The integer t >= 1 with t^k == value, if there is one. Exact; no floating point.
std::optional<std::uint64_t> exact_root(std::uint64_t value, std::uint64_t k);

// If value = p^e for a prime p and e >= 1, returns {p, e}.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::optional<PrimePower> as_prime_power(std::uint64_t value);

bool is_integer(const Rational& r);

}  // namespace mwl

#endif  // MWL_NUMERIC_HPP_
