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

#include "mwl/gray.hpp"

#include <random>

#include "gtest/gtest.h"
#include "mwl/errors.hpp"
#include "mwl/numeric.hpp"
#include "mwl/weight_enum.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace mwl {
namespace {

using testing::make_code;
using Rows = std::vector<std::vector<std::uint32_t>>;

const std::uint32_t kSpecFieldOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

TEST(MakeField, SmallFields) {
  const auto f2 = make_field(2);
  EXPECT_EQ(f2.add(1, 1), 0u);
  const auto f3 = make_field(3);
  EXPECT_EQ(f3.add(2, 2), 1u);
  const auto f4 = make_field(4);
  EXPECT_EQ(f4.mul(2, 2), 3u);
  EXPECT_EQ(f4.characteristic(), 2u);
  EXPECT_EQ(f4.extension_degree(), 2u);
  EXPECT_EQ(make_field(9).mul(3, 3), 2u);  // x * x = -1 in GF(3)[x]/(x^2 + 1)
}

TEST(MakeField, EveryBuiltInFieldSatisfiesTheAxioms) {
  for (auto m : supported_field_orders()) {
    if (m > 81) continue;  // the axiom check is cubic in m
    EXPECT_TRUE(make_field(m).satisfies_field_axioms()) << "GF(" << m << ")";
  }
  for (auto m : kSpecFieldOrders) EXPECT_TRUE(is_supported_field_order(m)) << m;
}

TEST(MakeField, RejectsNonPrimePowers) {
  for (std::uint32_t m : {0u, 1u, 6u, 10u, 12u, 15u, 100u}) {
    EXPECT_THROW(make_field(m), NotPrimePower) << m;
  }
  EXPECT_THROW(make_field(128), NotPrimePower);  // prime power without a built-in polynomial
}

TEST(CanonicalGrayMap, ZSixOverGF2) {
  const auto map = canonical_gray_map(Modulus(6), make_field(2));
  EXPECT_EQ(map.rows(), (Rows{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}, {1, 0, 0}}));
}

TEST(CanonicalGrayMap, ZFourOverGF2) {
  const auto map = canonical_gray_map(Modulus(4), make_field(2));
  EXPECT_EQ(map.rows(), (Rows{{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
}

TEST(CanonicalGrayMap, ZThreeOverGF3) {
  const auto map = canonical_gray_map(Modulus(3), make_field(3));
  EXPECT_EQ(map.rows(), (Rows{{0}, {1}, {2}}));
}

TEST(CanonicalGrayMap, SupportPatterns) {
  for (std::uint32_t ell = 2; ell <= 16; ++ell) {
    const Modulus mod(ell);
    const std::uint32_t w = mod.half();
    for (auto m : kSpecFieldOrders) {
      const auto map = canonical_gray_map(mod, make_field(m));
      EXPECT_TRUE(is_weight_preserving(map));
      for (std::uint32_t a = 1; a < ell; ++a) {
        const auto row = map.row(a);
        const std::uint32_t i = lee_weight(a, mod);
        for (std::uint32_t pos = 0; pos < w; ++pos) {
          bool expect_nonzero;
          if (a < w) expect_nonzero = pos >= w - i;
          else if (a == w) expect_nonzero = true;
          else expect_nonzero = pos < i;
          EXPECT_EQ(row[pos] != 0, expect_nonzero) << ell << " " << m << " " << a;
        }
        if (a < w) {
          const auto mirror = map.row(ell - a);
          for (std::uint32_t pos = 0; pos < w; ++pos) {
            EXPECT_EQ(row[pos] != 0, mirror[w - 1 - pos] != 0);
          }
        }
      }
    }
  }
}

TEST(ApplyGray, SpecExamples) {
  const auto z4 = canonical_gray_map(Modulus(4), make_field(2));
  EXPECT_EQ(apply_gray(z4, RingVector::zero(Modulus(4), 3)), std::vector<std::uint32_t>(6, 0));
  EXPECT_EQ(apply_gray(z4, RingVector(Modulus(4), {2, 3})),
            (std::vector<std::uint32_t>{1, 1, 1, 0}));
  const auto z6 = canonical_gray_map(Modulus(6), make_field(2));
  EXPECT_EQ(apply_gray(z6, RingVector(Modulus(6), {5, 1})),
            (std::vector<std::uint32_t>{1, 0, 0, 0, 0, 1}));
  EXPECT_THROW(apply_gray(z6, RingVector(Modulus(4), {1})), OutOfRange);
}

TEST(ApplyGray, PreservesWeightOnRandomVectors) {
  std::mt19937_64 rng(53);
  for (std::uint32_t ell = 2; ell <= 16; ++ell) {
    for (auto m : kSpecFieldOrders) {
      const auto map = canonical_gray_map(Modulus(ell), make_field(m));
      for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const RingVector v(Modulus(ell), oracle::random_vector(rng, ell, n));
        const auto image = apply_gray(map, v);
        const auto hamming = std::count_if(image.begin(), image.end(), [](auto e) { return e; });
        ASSERT_EQ(static_cast<std::uint64_t>(hamming), vector_weight(v, WeightKind::Lee));
      }
    }
  }
}

TEST(IsWeightPreserving, RejectsHeavyRow) {
  const GrayMap bad(Modulus(4), make_field(2), Rows{{0, 0}, {1, 1}, {1, 1}, {1, 0}});
  EXPECT_FALSE(is_weight_preserving(bad));
  EXPECT_TRUE(is_weight_preserving(canonical_gray_map(Modulus(8), make_field(2))));
}

TEST(IsBijectiveExtension, SpecExamples) {
  EXPECT_TRUE(is_bijective_extension(canonical_gray_map(Modulus(4), make_field(2))));
  EXPECT_FALSE(is_bijective_extension(canonical_gray_map(Modulus(6), make_field(2))));
  EXPECT_TRUE(is_bijective_extension(canonical_gray_map(Modulus(2), make_field(2))));
}

TEST(IsBijectiveExtension, RepeatedRowsAreNotBijective) {
  // Z_3 -> GF(3) with 1 and 2 both sent to 1.
  const GrayMap collapsed(Modulus(3), make_field(3), Rows{{0}, {1}, {1}});
  EXPECT_TRUE(is_weight_preserving(collapsed));
  EXPECT_FALSE(is_bijective_extension(collapsed));
}

TEST(IsBijectiveExtension, OnlyTwoThreeFourUpToOneHundred) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hits;
  for (std::uint32_t ell = 2; ell <= 100; ++ell) {
    for (std::uint32_t m = 2; m <= ell; ++m) {
      if (ell % m != 0 || !as_prime_power(m)) continue;
      ASSERT_TRUE(is_supported_field_order(m)) << m;
      if (is_bijective_extension(canonical_gray_map(Modulus(ell), make_field(m)))) {
        hits.emplace_back(ell, m);
      }
    }
  }
  EXPECT_EQ(hits, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 3}, {4, 2}}));
}

TEST(ImageIsLinear, SpecExamples) {
  const auto z4 = canonical_gray_map(Modulus(4), make_field(2));
  EXPECT_TRUE(image_is_linear(z4, LinearCode::zero(Modulus(4), 2)));
  EXPECT_TRUE(image_is_linear(z4, LinearCode::full(Modulus(4), 1)));
  EXPECT_TRUE(image_is_linear(z4, make_code(4, 2, {{1, 1}})));
  const auto z2 = canonical_gray_map(Modulus(2), make_field(2));
  for (const auto& code : all_linear_codes(Modulus(2), 3)) EXPECT_TRUE(image_is_linear(z2, code));
}

// Brute force over Z_4 codes of length <= 3 for a nonlinear image.
TEST(ImageIsLinear, FindsNonlinearZFourImage) {
  const auto z4 = canonical_gray_map(Modulus(4), make_field(2));
  std::optional<LinearCode> first;
  for (std::size_t n = 1; n <= 3 && !first; ++n) {
    for (const auto& code : all_linear_codes(Modulus(4), n)) {
      if (!image_is_linear(z4, code)) {
        first = code;
        break;
      }
    }
  }
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(first->length(), 3u);
  // every code of length 1 or 2 has a linear image
  EXPECT_EQ(*first, make_code(4, 3, {{0, 1, 1}, {1, 0, 1}}));
  // 2 (v * w) = (0,2,0) is not a codeword
  EXPECT_FALSE(image_is_linear(z4, make_code(4, 3, {{1, 1, 0}, {0, 1, 1}})));
}

TEST(GrayTable, FormatAndParse) {
  const auto map = canonical_gray_map(Modulus(6), make_field(2));
  const std::string text = format_gray_table(map);
  EXPECT_EQ(text, "0 : 0 0 0\n1 : 0 0 1\n2 : 0 1 1\n3 : 1 1 1\n4 : 1 1 0\n5 : 1 0 0\n");
  const auto back = parse_gray_table(text, make_field(2));
  EXPECT_EQ(back.rows(), map.rows());
  const auto custom = parse_gray_table("# Z_4 with a swapped row\n0 : 0 0\n1 : 1 0\n2 : 1 1\n3 : 0 1\n",
                                       make_field(2));
  EXPECT_TRUE(is_weight_preserving(custom));
  EXPECT_TRUE(is_bijective_extension(custom));
}

TEST(GrayTable, Errors) {
  const auto f2 = make_field(2);
  EXPECT_THROW(parse_gray_table("0 : 0\n2 : 1\n", f2), ParseError);
  EXPECT_THROW(parse_gray_table("0 : 0 0\n1 : 0 2\n2 : 1 1\n3 : 1 0\n", f2), ParseError);
  EXPECT_THROW(parse_gray_table("0 : 0 0\n1 0 1\n2 : 1 1\n3 : 1 0\n", f2), ParseError);
  EXPECT_THROW(parse_gray_table("0 : 0\n1 : 1 1\n2 : 1\n", f2), LengthMismatch);
  EXPECT_THROW(parse_gray_table("0 : 1\n1 : 1\n", f2), OutOfRange);
}

}  // namespace
}  // namespace mwl
