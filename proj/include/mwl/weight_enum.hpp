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

#ifndef MWL_WEIGHT_ENUM_HPP_
#define MWL_WEIGHT_ENUM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwl/homopoly.hpp"
#include "mwl/zmod_codes.hpp"

namespace mwl {

enum class WeightKind { Hamming, Lee, Euclidean };

std::string_view to_string(WeightKind kind);
std::optional<WeightKind> parse_weight_kind(std::string_view name);

// Largest per-coordinate weight: 1, floor(ell/2) or floor(ell/2)^2.
std::uint64_t weight_scale(WeightKind kind, Modulus modulus);

std::uint32_t lee_weight(std::uint32_t a, Modulus modulus);
std::uint64_t euclidean_weight(std::uint32_t a, Modulus modulus);
std::uint64_t residue_weight(std::uint32_t a, Modulus modulus, WeightKind kind);
std::uint64_t vector_weight(const RingVector& v, WeightKind kind);

// counts[w] = number of codewords of weight w, for w = 0 .. scale * n.
struct WeightDistribution {
  WeightKind kind;
  Modulus modulus;
  std::size_t length;
  std::vector<std::uint64_t> counts;

  std::uint64_t degree() const { return counts.size() - 1; }
  std::uint64_t total() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

WeightDistribution weight_distribution(const LinearCode& code, WeightKind kind);

HomoPoly to_poly(const WeightDistribution& dist);
// Requires nonnegative integer coefficients and degree scale * length.
WeightDistribution from_poly(const HomoPoly& p, WeightKind kind, Modulus modulus,
                             std::size_t length);

// sum over c in C of x^(D - wt(c)) y^wt(c), D = scale * n.
HomoPoly weight_enumerator(const LinearCode& code, WeightKind kind);

}  // namespace mwl

#endif  // MWL_WEIGHT_ENUM_HPP_
