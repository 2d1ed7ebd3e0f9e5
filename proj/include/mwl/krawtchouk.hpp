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

#ifndef MWL_KRAWTCHOUK_HPP_
#define MWL_KRAWTCHOUK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mwl/numeric.hpp"

namespace mwl {

struct KrawtchoukParams {
  std::uint32_t n = 0;
  std::uint64_t q = 2;

  KrawtchoukParams(std::uint32_t length, std::uint64_t alphabet);
};

// Largest n orthogonality_check accepts.
inline constexpr std::uint32_t kKrawtchoukBudget = 64;

// K_k(x) = sum_j (-1)^j (q-1)^(k-j) C(x, j) C(n-x, k-j), 0 <= k, x <= n.
BigInt krawtchouk(std::uint32_t k, std::uint32_t x, const KrawtchoukParams& params);

// matrix[k][j] = K_k(j).
std::vector<std::vector<BigInt>> krawtchouk_matrix(const KrawtchoukParams& params);

// sum_l K_k(l) K_l(j) == q^n [k == j] for every 0 <= k, j <= n.
bool orthogonality_check(const KrawtchoukParams& params);

// A'_k = (1/size) sum_j A_j K_k(j).
std::vector<Rational> coefficient_transform(std::span<const BigInt> dist,
                                            const KrawtchoukParams& params, const BigInt& size);

// Compares coefficient_transform with the substitution x -> x + (q-1) y,
// y -> x - y applied to the enumerator polynomial. Always true; kept as a
// cross-check between the two routes.
bool transforms_agree(std::span<const BigInt> dist, const KrawtchoukParams& params,
                      const BigInt& size);

}  // namespace mwl

#endif  // MWL_KRAWTCHOUK_HPP_
