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

#ifndef MWL_ZMOD_CODES_HPP_
#define MWL_ZMOD_CODES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mwl {

// The ring Z_ell, ell >= 2.
class Modulus {
 public:
  explicit Modulus(std::uint32_t ell);

  std::uint32_t value() const { return ell_; }
  // floor(ell/2): the largest Lee weight of a single residue.
  std::uint32_t half() const { return ell_ / 2; }
  // floor(ell/2)^2: the largest Euclidean weight of a single residue.
  std::uint64_t half_squared() const {
    return static_cast<std::uint64_t>(half()) * half();
  }

  std::uint32_t reduce(std::int64_t a) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;
  friend auto operator<=>(const Modulus&, const Modulus&) = default;

 private:
  std::uint32_t ell_;
};

// An n-tuple over Z_ell; every entry lies in [0, ell).
class RingVector {
 public:
  RingVector(Modulus modulus, std::vector<std::uint32_t> entries);

  static RingVector zero(Modulus modulus, std::size_t length);
  // Reduces arbitrary integers (negative ones included) mod ell.
  static RingVector reduced(Modulus modulus, std::span<const std::int64_t> values);

  Modulus modulus() const { return modulus_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const std::uint32_t> entries() const { return entries_; }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  bool is_zero() const;

  RingVector operator+(const RingVector& other) const;
  RingVector operator-() const;
  RingVector scaled(std::uint32_t lambda) const;
  // Standard inner product mod ell.
  std::uint32_t dot(const RingVector& other) const;

  friend bool operator==(const RingVector&, const RingVector&) = default;
  // Lexicographic on entries (after modulus).
  friend auto operator<=>(const RingVector&, const RingVector&) = default;

 private:
  Modulus modulus_;
  std::vector<std::uint32_t> entries_;
};

std::string to_string(const RingVector& v);

// Global cap on the number of candidate vectors any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
// all_linear_codes only runs while ell^n stays at or below this.
inline constexpr std::uint64_t kExhaustiveSpaceLimit = 10'000;

std::uint64_t enumeration_budget();
void set_enumeration_budget(std::uint64_t budget);

// ell^n, throwing BudgetExceeded when it is above `limit`.
std::uint64_t space_size(Modulus modulus, std::size_t length, std::uint64_t limit);
// ell^n checked against the global budget.
std::uint64_t space_size(Modulus modulus, std::size_t length);

// Mixed-radix packing of Z_ell^n into [0, ell^n). The first coordinate is the
// most significant digit, so integer order on indices is lexicographic order
// on vectors.
class PackedSpace {
 public:
  PackedSpace(Modulus modulus, std::size_t length);

  Modulus modulus() const { return modulus_; }
  std::size_t length() const { return length_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t pack(const RingVector& v) const;
  RingVector unpack(std::uint64_t index) const;
  void unpack_into(std::uint64_t index, std::span<std::uint32_t> digits) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;

 private:
  Modulus modulus_;
  std::size_t length_;
  std::uint64_t size_;
};

// Sorted, deduplicated packed codewords.
using CodewordIndices = std::vector<std::uint64_t>;

// An additive subgroup of Z_ell^n, given by generators. Two codes are equal
// when their codeword sets are equal, whatever generators describe them.
class LinearCode {
 public:
  LinearCode(Modulus modulus, std::size_t length, std::vector<RingVector> generators);

  static LinearCode zero(Modulus modulus, std::size_t length);
  static LinearCode full(Modulus modulus, std::size_t length);

  Modulus modulus() const { return modulus_; }
  std::size_t length() const { return length_; }
  std::span<const RingVector> generators() const { return generators_; }

  // Packed codeword set, computed on first use and shared between copies.
  const CodewordIndices& codeword_indices() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  struct SpanCache;

  LinearCode(Modulus modulus, std::size_t length, std::vector<RingVector> generators,
             CodewordIndices codewords);

  friend LinearCode dual_code(const LinearCode& code);
  friend std::vector<LinearCode> all_linear_codes(Modulus modulus, std::size_t length);

  Modulus modulus_;
  std::size_t length_;
  std::vector<RingVector> generators_;
  std::shared_ptr<SpanCache> cache_;
};

// {sum lambda_i g_i : lambda_i in Z_ell}, sorted lexicographically.
std::vector<RingVector> enumerate_codewords(const LinearCode& code);

std::uint64_t cardinality(const LinearCode& code);

// All x with <x, g> = 0 mod ell for every generator g. The result's generator
// list is its full codeword list.
LinearCode dual_code(const LinearCode& code);

// A small generating set of the code, picked greedily from its codewords.
std::vector<RingVector> reduced_generators(const LinearCode& code);

// Every additive subgroup of Z_ell^n exactly once, ordered lexicographically by
// sorted codeword list. Requires ell^n <= kExhaustiveSpaceLimit.
std::vector<LinearCode> all_linear_codes(Modulus modulus, std::size_t length);

// Code-spec text:
//   modulus 6
//   length 2
//   gen 2 0
// '#' starts a comment line; residues are reduced mod ell.
LinearCode parse_code_spec(std::string_view text);
std::string format_code_spec(const LinearCode& code);

}  // namespace mwl

#endif  // MWL_ZMOD_CODES_HPP_
