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

#ifndef MWL_IDENTITY_HPP_
#define MWL_IDENTITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mwl/homopoly.hpp"
#include "mwl/weight_enum.hpp"
#include "mwl/zmod_codes.hpp"

namespace mwl {

// Does  E_{C^perp}(x, y) = (1/|C|) E_C(x + (t-1) y, x - y)  hold, where E is
// the Lee or Euclidean enumerator?
struct IdentityQuery {
  LinearCode code;
  WeightKind kind;
  std::uint64_t multiplier;

  // Rejects Hamming weight and multipliers below 2.
  IdentityQuery(LinearCode code, WeightKind kind, std::uint64_t multiplier);
};

enum class VerdictStatus { Holds, Fails, StructurallyImpossible, NotWellFormed };
enum class VerdictReason { MultiplierNotIntegral, NoBijectiveGrayMap, TransformNotEnumerator, Verified };

std::string_view to_string(VerdictStatus status);
std::string_view to_string(VerdictReason reason);

struct IdentityVerdict {
  VerdictStatus status;
  VerdictReason reason;
  // transform minus dual enumerator; present exactly when status is Fails.
  std::optional<HomoPoly> discrepancy;
  // Both sides of the comparison, when one was made.
  std::optional<HomoPoly> dual_enumerator;
  std::optional<HomoPoly> transformed;
};

// "verdict=<status> reason=<reason> discrepancy=<poly or none>"
std::string format_verdict(const IdentityVerdict& verdict);

// Exit status of the `check` command for this verdict: 0, 1 or 2.
int verdict_exit_code(const IdentityVerdict& verdict);

// The prime power t > 1 dividing ell with t^floor(ell/2) == ell (Lee) or
// t^(floor(ell/2)^2) == ell (Euclidean), if any.
std::optional<std::uint64_t> existence_condition(Modulus modulus, WeightKind kind);

IdentityVerdict check_identity(const IdentityQuery& query);

// ell^(1/floor(ell/2)) resp. ell^(1/floor(ell/2)^2) when it is an integer.
std::optional<std::uint64_t> root_multiplier(Modulus modulus, WeightKind kind);

// The identity with multiplier ell^(1/floor(ell/2)) (Lee) or
// ell^(1/floor(ell/2)^2) (Euclidean). NotWellFormed when that root is not an
// integer; otherwise the same as check_identity with that multiplier.
IdentityVerdict check_shiromoto_form(const LinearCode& code, WeightKind kind);

// Every ell in 2..max_ell with a multiplier from existence_condition.
std::vector<std::pair<std::uint32_t, std::uint64_t>> scan_existence(WeightKind kind,
                                                                    std::uint32_t max_ell);

struct Counterexample {
  LinearCode code;
  HomoPoly discrepancy;
};

// First failing code over lengths 1..max_length, codes taken in the order of
// all_linear_codes.
std::optional<Counterexample> search_counterexample(Modulus modulus, WeightKind kind,
                                                    std::uint64_t multiplier,
                                                    std::size_t max_length);

// The testable pieces of the Lee identity for multiplier m, reported
// separately so a failure can be attributed.
struct LeeIdentityConditions {
  // The canonical Gray map Z_ell -> GF(m)^w extends to a bijection.
  bool bijective_gray;
  // (1/|C|) Lee_C(x + (m-1) y, x - y) has nonnegative integer coefficients
  // and leading coefficient 1, as any code's enumerator must.
  bool transform_is_enumerator;
  // That transform equals Lee_{C^perp}.
  bool dual_match;

  friend bool operator==(const LeeIdentityConditions&, const LeeIdentityConditions&) = default;
};

LeeIdentityConditions lee_identity_conditions(std::uint32_t multiplier, const LinearCode& code);

}  // namespace mwl

#endif  // MWL_IDENTITY_HPP_
