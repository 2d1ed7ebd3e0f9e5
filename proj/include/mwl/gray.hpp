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

#ifndef MWL_GRAY_HPP_
#define MWL_GRAY_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwl/zmod_codes.hpp"

namespace mwl {

// Addition and multiplication tables of GF(m).
//
// Element labels are 0 .. m-1. For m = p^k the label sum_j c_j p^j stands for
// the residue class of sum_j c_j x^j modulo a fixed monic irreducible
// polynomial over GF(p):
//
//   GF(4)  x^2 + x + 1        GF(9)  x^2 + 1          GF(25) x^2 + 4x + 2
//   GF(8)  x^3 + x + 1        GF(27) x^3 + 2x + 1     GF(49) x^2 + 6x + 3
//   GF(16) x^4 + x + 1        GF(81) x^4 + 2x^3 + 2
//   GF(32) x^5 + x^2 + 1
//   GF(64) x^6 + x + 1
//
// Primes below 256 use plain arithmetic mod p.
class FieldSpec {
 public:
  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return prime_; }
  unsigned extension_degree() const { return degree_; }
  // Low-to-high coefficients of the reduction polynomial; {0, 1} (i.e. x) for prime fields.
  std::span<const std::uint32_t> reduction_polynomial() const { return poly_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return tables_->add[a * order_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return tables_->mul[a * order_ + b]; }
  std::uint32_t neg(std::uint32_t a) const;

  // Checks identities, inverses, commutativity, associativity and distributivity.
  bool satisfies_field_axioms() const;

 private:
  friend FieldSpec make_field(std::uint32_t m);
  struct Tables {
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> mul;
  };

  std::uint32_t order_ = 0;
  std::uint32_t prime_ = 0;
  unsigned degree_ = 0;
  std::vector<std::uint32_t> poly_;
  std::shared_ptr<const Tables> tables_;
};

// Throws NotPrimePower for orders without a built-in construction.
FieldSpec make_field(std::uint32_t m);
bool is_supported_field_order(std::uint32_t m);
std::vector<std::uint32_t> supported_field_orders();

// A table Z_ell -> GF(m)^floor(ell/2). Row 0 must be all zero; other rows are
// arbitrary, so hand-built maps can be checked with the predicates below.
class GrayMap {
 public:
  GrayMap(Modulus modulus, FieldSpec field, std::vector<std::vector<std::uint32_t>> rows);

  Modulus modulus() const { return modulus_; }
  const FieldSpec& field() const { return field_; }
  std::size_t width() const { return modulus_.half(); }
  std::span<const std::uint32_t> row(std::uint32_t a) const { return rows_.at(a); }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

 private:
  Modulus modulus_;
  FieldSpec field_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

// With i = Lee weight of a and w = floor(ell/2):
//   0 < a < w   nonzero exactly at the last i positions, entries 1
//   a == w      every position nonzero, entries 1
//   a > w       nonzero exactly at the first i positions, entries m-1
GrayMap canonical_gray_map(Modulus modulus, const FieldSpec& field);

// Concatenated per-coordinate images.
std::vector<std::uint32_t> apply_gray(const GrayMap& map, const RingVector& v);

bool is_weight_preserving(const GrayMap& map);
// ell == m^floor(ell/2) and the rows are pairwise distinct.
bool is_bijective_extension(const GrayMap& map);
// Whether the image of the code is closed under GF(m) addition and scaling.
bool image_is_linear(const GrayMap& map, const LinearCode& code);

// One line per residue: "a : e1 e2 ... ew".
std::string format_gray_table(const GrayMap& map);
GrayMap parse_gray_table(std::string_view text, const FieldSpec& field);

}  // namespace mwl

#endif  // MWL_GRAY_HPP_
