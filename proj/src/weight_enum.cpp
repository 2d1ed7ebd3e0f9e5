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

#include "mwl/weight_enum.hpp"

#include <numeric>

#include "mwl/errors.hpp"

namespace mwl {

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Hamming:
      return "hamming";
    case WeightKind::Lee:
      return "lee";
    case WeightKind::Euclidean:
      return "euclidean";
  }
  return "?";
}

std::optional<WeightKind> parse_weight_kind(std::string_view name) {
  if (name == "hamming") return WeightKind::Hamming;
  if (name == "lee") return WeightKind::Lee;
  if (name == "euclidean") return WeightKind::Euclidean;
  return std::nullopt;
}

std::uint64_t weight_scale(WeightKind kind, Modulus modulus) {
  switch (kind) {
    case WeightKind::Hamming:
      return 1;
    case WeightKind::Lee:
      return modulus.half();
    case WeightKind::Euclidean:
      return modulus.half_squared();
  }
  return 1;
}

std::uint32_t lee_weight(std::uint32_t a, Modulus modulus) {
  if (a >= modulus.value()) throw OutOfRange("residue out of range for Lee weight");
  return std::min(a, modulus.value() - a);
}

std::uint64_t euclidean_weight(std::uint32_t a, Modulus modulus) {
  const std::uint64_t w = lee_weight(a, modulus);
  return w * w;
}

std::uint64_t residue_weight(std::uint32_t a, Modulus modulus, WeightKind kind) {
  switch (kind) {
    case WeightKind::Hamming:
      if (a >= modulus.value()) throw OutOfRange("residue out of range");
      return a == 0 ? 0 : 1;
    case WeightKind::Lee:
      return lee_weight(a, modulus);
    case WeightKind::Euclidean:
      return euclidean_weight(a, modulus);
  }
  return 0;
}

std::uint64_t vector_weight(const RingVector& v, WeightKind kind) {
  std::uint64_t w = 0;
  for (auto e : v.entries()) w += residue_weight(e, v.modulus(), kind);
  return w;
}

std::uint64_t WeightDistribution::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

WeightDistribution weight_distribution(const LinearCode& code, WeightKind kind) {
  const Modulus modulus = code.modulus();
  const std::size_t n = code.length();
  const PackedSpace space(modulus, n);
  std::vector<std::uint64_t> table(modulus.value());
  for (std::uint32_t a = 0; a < modulus.value(); ++a) table[a] = residue_weight(a, modulus, kind);

  WeightDistribution dist{kind, modulus, n,
                          std::vector<std::uint64_t>(weight_scale(kind, modulus) * n + 1, 0)};
  std::vector<std::uint32_t> digits(n);
  for (auto idx : code.codeword_indices()) {
    space.unpack_into(idx, digits);
    std::uint64_t w = 0;
    for (auto d : digits) w += table[d];
    ++dist.counts[w];
  }
  return dist;
}

HomoPoly to_poly(const WeightDistribution& dist) {
  std::vector<Rational> coeffs(dist.counts.begin(), dist.counts.end());
  return HomoPoly(std::move(coeffs));
}

WeightDistribution from_poly(const HomoPoly& p, WeightKind kind, Modulus modulus,
                             std::size_t length) {
  const std::uint64_t degree = weight_scale(kind, modulus) * length;
  if (p.degree() != degree) {
    throw DegreeMismatch("polynomial degree " + std::to_string(p.degree()) +
                         " does not match weight range " + std::to_string(degree));
  }
  if (!is_nonneg_integer_poly(p)) {
    throw OutOfRange("a weight distribution needs nonnegative integer coefficients");
  }
  WeightDistribution dist{kind, modulus, length, {}};
  dist.counts.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    dist.counts.push_back(boost::multiprecision::numerator(c).convert_to<std::uint64_t>());
  }
  return dist;
}

HomoPoly weight_enumerator(const LinearCode& code, WeightKind kind) {
  return to_poly(weight_distribution(code, kind));
}

}  // namespace mwl
