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

#include "mwl/identity.hpp"

#include <algorithm>

#include "mwl/errors.hpp"
#include "mwl/gray.hpp"
#include "mwl/numeric.hpp"

namespace mwl {

IdentityQuery::IdentityQuery(LinearCode c, WeightKind k, std::uint64_t t)
    : code(std::move(c)), kind(k), multiplier(t) {
  if (kind == WeightKind::Hamming) {
    throw OutOfRange("identity queries are for Lee or Euclidean weight");
  }
  if (multiplier < 2) throw OutOfRange("identity multiplier must be at least 2");
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds:
      return "Holds";
    case VerdictStatus::Fails:
      return "Fails";
    case VerdictStatus::StructurallyImpossible:
      return "StructurallyImpossible";
    case VerdictStatus::NotWellFormed:
      return "NotWellFormed";
  }
  return "?";
}

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::MultiplierNotIntegral:
      return "MultiplierNotIntegral";
    case VerdictReason::NoBijectiveGrayMap:
      return "NoBijectiveGrayMap";
    case VerdictReason::TransformNotEnumerator:
      return "TransformNotEnumerator";
    case VerdictReason::Verified:
      return "Verified";
  }
  return "?";
}

std::string format_verdict(const IdentityVerdict& verdict) {
  std::string out = "verdict=";
  out += to_string(verdict.status);
  out += " reason=";
  out += to_string(verdict.reason);
  out += " discrepancy=";
  out += verdict.discrepancy ? format_poly(*verdict.discrepancy) : "none";
  return out;
}

int verdict_exit_code(const IdentityVerdict& verdict) {
  switch (verdict.status) {
    case VerdictStatus::Holds:
      return 0;
    case VerdictStatus::Fails:
      return 1;
    default:
      return 2;
  }
}

namespace {

std::uint64_t exponent_for(Modulus modulus, WeightKind kind) {
  if (kind == WeightKind::Hamming) throw OutOfRange("Lee or Euclidean weight required");
  return weight_scale(kind, modulus);
}

bool looks_like_enumerator(const HomoPoly& p) {
  return is_nonneg_integer_poly(p) && p[0] == 1;
}

}  // namespace

std::optional<std::uint64_t> existence_condition(Modulus modulus, WeightKind kind) {
  const std::uint64_t ell = modulus.value();
  const auto t = exact_root(ell, exponent_for(modulus, kind));
  if (!t || *t < 2 || ell % *t != 0 || !as_prime_power(*t)) return std::nullopt;
  return t;
}

IdentityVerdict check_identity(const IdentityQuery& query) {
  const LinearCode& code = query.code;
  const HomoPoly dual_enum = weight_enumerator(dual_code(code), query.kind);
  const HomoPoly transformed = substitute_transform(weight_enumerator(code, query.kind),
                                                    query.multiplier, cardinality(code));
  IdentityVerdict verdict{VerdictStatus::Holds, VerdictReason::Verified, std::nullopt, dual_enum,
                          transformed};
  if (transformed != dual_enum) {
    verdict.status = VerdictStatus::Fails;
    verdict.discrepancy = transformed - dual_enum;
    if (!looks_like_enumerator(transformed)) verdict.reason = VerdictReason::TransformNotEnumerator;
  }
  return verdict;
}

std::optional<std::uint64_t> root_multiplier(Modulus modulus, WeightKind kind) {
  return exact_root(modulus.value(), exponent_for(modulus, kind));
}

IdentityVerdict check_shiromoto_form(const LinearCode& code, WeightKind kind) {
  const auto t = root_multiplier(code.modulus(), kind);
  if (!t) {
    return IdentityVerdict{VerdictStatus::NotWellFormed, VerdictReason::MultiplierNotIntegral,
                           std::nullopt, std::nullopt, std::nullopt};
  }
  return check_identity(IdentityQuery(code, kind, *t));
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> scan_existence(WeightKind kind,
                                                                    std::uint32_t max_ell) {
  if (max_ell < 2) throw OutOfRange("scan needs max_ell >= 2");
  std::vector<std::pair<std::uint32_t, std::uint64_t>> hits;
  for (std::uint32_t ell = 2; ell <= max_ell; ++ell) {
    if (const auto t = existence_condition(Modulus(ell), kind)) hits.emplace_back(ell, *t);
    if (ell == UINT32_MAX) break;
  }
  return hits;
}

std::optional<Counterexample> search_counterexample(Modulus modulus, WeightKind kind,
                                                    std::uint64_t multiplier,
                                                    std::size_t max_length) {
  if (max_length == 0) return std::nullopt;
  space_size(modulus, max_length, std::min(kExhaustiveSpaceLimit, enumeration_budget()));
  for (std::size_t n = 1; n <= max_length; ++n) {
    for (const auto& code : all_linear_codes(modulus, n)) {
      auto verdict = check_identity(IdentityQuery(code, kind, multiplier));
      if (verdict.status == VerdictStatus::Fails) {
        return Counterexample{code, std::move(*verdict.discrepancy)};
      }
    }
  }
  return std::nullopt;
}

LeeIdentityConditions lee_identity_conditions(std::uint32_t multiplier, const LinearCode& code) {
  const GrayMap map = canonical_gray_map(code.modulus(), make_field(multiplier));
  const HomoPoly transformed = substitute_transform(weight_enumerator(code, WeightKind::Lee),
                                                    multiplier, cardinality(code));
  const HomoPoly dual_enum = weight_enumerator(dual_code(code), WeightKind::Lee);
  return LeeIdentityConditions{is_bijective_extension(map), looks_like_enumerator(transformed),
                               transformed == dual_enum};
}

}  // namespace mwl
