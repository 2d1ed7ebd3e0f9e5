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

#ifndef MWL_HOMOPOLY_HPP_
#define MWL_HOMOPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwl/numeric.hpp"

namespace mwl {

// sum_i c_i x^(D-i) y^i with exact rational coefficients.
class HomoPoly {
 public:
  // The zero polynomial of degree D.
  explicit HomoPoly(std::size_t degree);
  // coeffs[i] multiplies x^(D-i) y^i; D = coeffs.size() - 1. Must be non-empty.
  explicit HomoPoly(std::vector<Rational> coeffs);

  static HomoPoly from_integers(std::span<const std::int64_t> coeffs);
  static HomoPoly from_integers(std::span<const BigInt> coeffs);
  static HomoPoly from_integers(std::initializer_list<std::int64_t> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  HomoPoly operator+(const HomoPoly& other) const;
  // Throws DegreeMismatch on unequal degrees.
  HomoPoly operator-(const HomoPoly& other) const;
  HomoPoly operator*(const Rational& factor) const;

  friend bool operator==(const HomoPoly&, const HomoPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// (1/scale) * p(x + (multiplier-1) y, x - y), expanded exactly.
HomoPoly substitute_transform(const HomoPoly& p, std::uint64_t multiplier, const BigInt& scale);

inline bool poly_equal(const HomoPoly& p, const HomoPoly& q) { return p == q; }
inline HomoPoly poly_sub(const HomoPoly& p, const HomoPoly& q) { return p - q; }

bool is_nonneg_integer_poly(const HomoPoly& p);

// "deg D; i:c ..." with only nonzero coefficients, rationals as num/den.
std::string format_poly(const HomoPoly& p);
HomoPoly parse_poly(std::string_view text);
std::string format_rational(const Rational& r);

}  // namespace mwl

#endif  // MWL_HOMOPOLY_HPP_
