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

#include "mwl/krawtchouk.hpp"

#include <string>

#include "mwl/errors.hpp"
#include "mwl/homopoly.hpp"

namespace mwl {

KrawtchoukParams::KrawtchoukParams(std::uint32_t length, std::uint64_t alphabet)
    : n(length), q(alphabet) {
  if (q < 2) throw OutOfRange("Krawtchouk alphabet size must be at least 2");
}

BigInt krawtchouk(std::uint32_t k, std::uint32_t x, const KrawtchoukParams& params) {
  if (k > params.n || x > params.n) {
    throw OutOfRange("Krawtchouk arguments must lie in 0.." + std::to_string(params.n));
  }
  const BigInt q_minus_one = BigInt(params.q) - 1;
  BigInt sum = 0;
  for (std::uint32_t j = 0; j <= k; ++j) {
    BigInt term = binomial(x, j) * binomial(params.n - x, k - j);
    if (term == 0) continue;
    term *= boost::multiprecision::pow(q_minus_one, k - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

std::vector<std::vector<BigInt>> krawtchouk_matrix(const KrawtchoukParams& params) {
  std::vector<std::vector<BigInt>> m(params.n + 1, std::vector<BigInt>(params.n + 1));
  for (std::uint32_t k = 0; k <= params.n; ++k) {
    for (std::uint32_t j = 0; j <= params.n; ++j) m[k][j] = krawtchouk(k, j, params);
  }
  return m;
}

bool orthogonality_check(const KrawtchoukParams& params) {
  if (params.n > kKrawtchoukBudget) {
    throw BudgetExceeded("orthogonality check limited to n <= " +
                         std::to_string(kKrawtchoukBudget));
  }
  const auto m = krawtchouk_matrix(params);
  const BigInt q_n = boost::multiprecision::pow(BigInt(params.q), params.n);
  for (std::uint32_t k = 0; k <= params.n; ++k) {
    for (std::uint32_t j = 0; j <= params.n; ++j) {
      BigInt sum = 0;
      for (std::uint32_t l = 0; l <= params.n; ++l) sum += m[k][l] * m[l][j];
      if (sum != (k == j ? q_n : BigInt(0))) return false;
    }
  }
  return true;
}

std::vector<Rational> coefficient_transform(std::span<const BigInt> dist,
                                            const KrawtchoukParams& params, const BigInt& size) {
  if (dist.size() != std::size_t{params.n} + 1) {
    throw LengthMismatch("distribution has " + std::to_string(dist.size()) +
                         " entries, expected " + std::to_string(params.n + 1));
  }
  if (size <= 0) throw OutOfRange("transform size must be positive");
  const auto m = krawtchouk_matrix(params);
  std::vector<Rational> out(dist.size());
  for (std::uint32_t k = 0; k <= params.n; ++k) {
    BigInt sum = 0;
    for (std::uint32_t j = 0; j <= params.n; ++j) sum += dist[j] * m[k][j];
    out[k] = Rational(sum, size);
  }
  return out;
}

bool transforms_agree(std::span<const BigInt> dist, const KrawtchoukParams& params,
                      const BigInt& size) {
  const auto coefficients = coefficient_transform(dist, params, size);
  const auto substituted = substitute_transform(HomoPoly::from_integers(dist), params.q, size);
  return std::equal(coefficients.begin(), coefficients.end(), substituted.coeffs().begin(),
                    substituted.coeffs().end());
}

}  // namespace mwl
