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

#include "mwl/numeric.hpp"

#include <algorithm>

namespace mwl {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
    if (result > limit) return std::nullopt;
    if (base <= 1) break;
  }
  if (base == 0 && exp > 0) return 0;
  return result;
}

std::optional<std::uint64_t> exact_root(std::uint64_t value, std::uint64_t k) {
  if (k == 0) return std::nullopt;
  if (value <= 1) return value;
  // Binary search on t^k; t <= value always holds.
  std::uint64_t lo = 1;
  std::uint64_t hi = value;
  if (k >= 64) hi = 1;
  else if (k > 1) hi = std::min<std::uint64_t>(value, std::uint64_t{1} << (64 / k + 1));
  while (lo <= hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const auto p = checked_pow(mid, k, value);
    if (p && *p == value) return mid;
    if (p && *p < value) {
      lo = mid + 1;
    } else {
      if (mid == 0) break;
      hi = mid - 1;
    }
  }
  return std::nullopt;
}

std::optional<PrimePower> as_prime_power(std::uint64_t value) {
  if (value < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{value, 1};
  unsigned e = 0;
  while (value % p == 0) {
    value /= p;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return PrimePower{p, e};
}

bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace mwl
