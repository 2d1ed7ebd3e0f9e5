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

#include "mwl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "mwl/errors.hpp"
#include "mwl/gray.hpp"
#include "mwl/homopoly.hpp"
#include "mwl/identity.hpp"
#include "mwl/krawtchouk.hpp"
#include "mwl/weight_enum.hpp"
#include "mwl/zmod_codes.hpp"

namespace mwl::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WeightKind weight_arg(const std::string& name) {
  const auto kind = parse_weight_kind(name);
  if (!kind) throw UsageError("--weight must be hamming, lee or euclidean, got '" + name + "'");
  return *kind;
}

WeightKind identity_weight_arg(const std::string& name) {
  const auto kind = weight_arg(name);
  if (kind == WeightKind::Hamming) throw UsageError("--weight must be lee or euclidean here");
  return kind;
}

Modulus modulus_arg(std::uint64_t ell) {
  if (ell < 2 || ell > UINT32_MAX) throw UsageError("--modulus must be in 2..4294967295");
  return Modulus(static_cast<std::uint32_t>(ell));
}

std::uint64_t env_budget() {
  const char* raw = std::getenv("MWL_BUDGET");
  if (raw == nullptr) return kDefaultEnumerationBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) throw UsageError("MWL_BUDGET must be a positive integer");
  return v;
}

std::string codeword_text(const RingVector& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight enumerators and MacWilliams-type identities for codes over Z_ell", "mwl"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> budget;
  app.add_option("--budget", budget, "enumeration budget (overrides MWL_BUDGET)")
      ->check(CLI::PositiveNumber);

  std::string code_path;
  std::string weight;
  std::uint64_t ell = 0;
  std::size_t length = 0;
  std::uint64_t multiplier = 0;
  std::uint64_t max_value = 0;
  std::size_t max_length = 0;
  std::uint64_t q = 0;
  std::uint32_t kraw_n = 0;
  bool flag_table = false;
  bool flag_check = false;
  bool flag_conditions = false;
  std::string table_path;
  std::string poly_text;
  std::string scale_text = "1";

  auto* enumerate = app.add_subcommand("enumerate", "list codewords of a code, or all codes");
  auto* enum_code = enumerate->add_option("--code", code_path, "code-spec file");
  auto* enum_mod = enumerate->add_option("--modulus", ell, "modulus ell");
  auto* enum_len = enumerate->add_option("--length", length, "code length n");
  enum_code->excludes(enum_mod)->excludes(enum_len);
  enum_mod->needs(enum_len);
  enum_len->needs(enum_mod);

  auto* dual = app.add_subcommand("dual", "print the dual code as a code spec");
  dual->add_option("--code", code_path, "code-spec file")->required();

  auto* wenum = app.add_subcommand("wenum", "weight enumerator of a code");
  wenum->add_option("--code", code_path, "code-spec file")->required();
  wenum->add_option("--weight", weight, "hamming|lee|euclidean")->required();

  auto* gray = app.add_subcommand("gray", "print the canonical Gray map or check a table");
  gray->add_option("--modulus", ell, "modulus ell");
  gray->add_option("--m", multiplier, "field order m")->required();
  gray->add_option("--table", table_path, "Gray-map table file to check");

  auto* kraw = app.add_subcommand("kraw", "Krawtchouk matrix K_k(j)");
  kraw->add_option("--q", q, "alphabet size")->required();
  kraw->add_option("--n", kraw_n, "length")->required();
  kraw->add_flag("--table", flag_table, "print the matrix (default)");
  kraw->add_flag("--check", flag_check, "print the orthogonality verdict instead");

  auto* transform = app.add_subcommand("transform", "MacWilliams substitution transform");
  auto* tr_poly = transform->add_option("--poly", poly_text, "polynomial text");
  auto* tr_code = transform->add_option("--code", code_path, "code-spec file");
  transform->add_option("--weight", weight, "weight of the code enumerator");
  transform->add_option("--m,--q", multiplier, "multiplier t")->required();
  auto* tr_scale = transform->add_option("--scale", scale_text, "positive integer divisor");
  tr_poly->excludes(tr_code);
  tr_code->excludes(tr_scale);

  auto* check = app.add_subcommand("check", "decide the identity for one code");
  check->add_option("--code", code_path, "code-spec file")->required();
  check->add_option("--weight", weight, "lee|euclidean")->required();
  check->add_option("--m,--q", multiplier, "multiplier (default: from the existence condition)");
  check->add_flag("--conditions", flag_conditions, "also report the Lee condition triple");

  auto* shiromoto = app.add_subcommand("shiromoto", "the identity with root multiplier");
  shiromoto->add_option("--code", code_path, "code-spec file")->required();
  shiromoto->add_option("--weight", weight, "lee|euclidean")->required();

  auto* scan = app.add_subcommand("scan", "moduli admitting an identity");
  scan->add_option("--weight", weight, "lee|euclidean")->required();
  scan->add_option("--max", max_value, "largest modulus")->required();

  auto* search = app.add_subcommand("search", "first code violating the identity");
  search->add_option("--modulus", ell, "modulus ell")->required();
  search->add_option("--weight", weight, "lee|euclidean")->required();
  search->add_option("--m,--q", multiplier, "multiplier t")->required();
  search->add_option("--max-length", max_length, "largest code length")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (const auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "mwl: " << msg << '\n';
    return kExitError;
  }

  const std::uint64_t saved_budget = enumeration_budget();
  struct Restore {
    std::uint64_t value;
    ~Restore() { set_enumeration_budget(value); }
  } restore{saved_budget};

  try {
    set_enumeration_budget(budget ? *budget : env_budget());

    if (enumerate->parsed()) {
      if (!code_path.empty()) {
        const auto code = parse_code_spec(read_file(code_path));
        for (const auto& c : enumerate_codewords(code)) out << codeword_text(c, ' ') << '\n';
        return 0;
      }
      if (ell == 0) throw UsageError("enumerate needs --code or --modulus with --length");
      if (length == 0) throw UsageError("--length must be at least 1");
      const auto codes = all_linear_codes(modulus_arg(ell), length);
      for (const auto& code : codes) {
        bool first = true;
        for (const auto& c : enumerate_codewords(code)) {
          if (!first) out << ' ';
          out << codeword_text(c, ',');
          first = false;
        }
        out << '\n';
      }
      out << "codes = " << codes.size() << '\n';
      return 0;
    }

    if (dual->parsed()) {
      out << format_code_spec(dual_code(parse_code_spec(read_file(code_path))));
      return 0;
    }

    if (wenum->parsed()) {
      const auto kind = weight_arg(weight);
      const auto code = parse_code_spec(read_file(code_path));
      out << format_poly(weight_enumerator(code, kind)) << '\n';
      out << "|C| = " << cardinality(code) << '\n';
      return 0;
    }

    if (gray->parsed()) {
      const FieldSpec field = make_field(static_cast<std::uint32_t>(
          multiplier > UINT32_MAX ? 0 : multiplier));
      if (!table_path.empty()) {
        const GrayMap map = parse_gray_table(read_file(table_path), field);
        if (ell != 0 && ell != map.modulus().value()) {
          throw UsageError("table has " + std::to_string(map.modulus().value()) +
                           " rows but --modulus is " + std::to_string(ell));
        }
        out << "weight_preserving=" << (is_weight_preserving(map) ? "true" : "false")
            << " bijective=" << (is_bijective_extension(map) ? "true" : "false") << '\n';
        return 0;
      }
      if (ell == 0) throw UsageError("gray needs --modulus or --table");
      out << format_gray_table(canonical_gray_map(modulus_arg(ell), field));
      return 0;
    }

    if (kraw->parsed()) {
      if (q > UINT32_MAX) throw UsageError("--q too large");
      const KrawtchoukParams params(kraw_n, q);
      if (flag_check) {
        out << "orthogonal=" << (orthogonality_check(params) ? "true" : "false") << '\n';
        return 0;
      }
      for (const auto& row : krawtchouk_matrix(params)) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << row[j].str();
        out << '\n';
      }
      return 0;
    }

    if (transform->parsed()) {
      if (multiplier < 1) throw UsageError("--m must be at least 1");
      if (!code_path.empty()) {
        const auto code = parse_code_spec(read_file(code_path));
        const auto kind = weight_arg(weight.empty() ? "hamming" : weight);
        out << format_poly(substitute_transform(weight_enumerator(code, kind), multiplier,
                                                cardinality(code)))
            << '\n';
        return 0;
      }
      if (poly_text.empty()) throw UsageError("transform needs --poly or --code");
      BigInt scale;
      try {
        scale = BigInt(scale_text);
      } catch (const std::exception&) {
        throw UsageError("--scale must be a positive integer");
      }
      if (scale <= 0) throw UsageError("--scale must be a positive integer");
      out << format_poly(substitute_transform(parse_poly(poly_text), multiplier, scale)) << '\n';
      return 0;
    }

    if (check->parsed()) {
      const auto kind = identity_weight_arg(weight);
      const auto code = parse_code_spec(read_file(code_path));
      std::uint64_t t = multiplier;
      if (t == 0) {
        const auto found = existence_condition(code.modulus(), kind);
        if (!found) {
          const IdentityVerdict verdict{VerdictStatus::StructurallyImpossible,
                                        VerdictReason::NoBijectiveGrayMap, std::nullopt,
                                        std::nullopt, std::nullopt};
          out << format_verdict(verdict) << '\n';
          return verdict_exit_code(verdict);
        }
        t = *found;
      }
      if (t < 2) throw UsageError("--m must be at least 2");
      const auto verdict = check_identity(IdentityQuery(code, kind, t));
      out << format_verdict(verdict) << '\n';
      if (flag_conditions) {
        if (kind != WeightKind::Lee) throw UsageError("--conditions applies to Lee weight only");
        if (t > UINT32_MAX) throw UsageError("--m too large");
        const auto c = lee_identity_conditions(static_cast<std::uint32_t>(t), code);
        out << "bijective_gray=" << (c.bijective_gray ? "true" : "false")
            << " transform_is_enumerator=" << (c.transform_is_enumerator ? "true" : "false")
            << " dual_match=" << (c.dual_match ? "true" : "false") << '\n';
      }
      return verdict_exit_code(verdict);
    }

    if (shiromoto->parsed()) {
      const auto kind = identity_weight_arg(weight);
      const auto verdict = check_shiromoto_form(parse_code_spec(read_file(code_path)), kind);
      out << format_verdict(verdict) << '\n';
      return verdict_exit_code(verdict);
    }

    if (scan->parsed()) {
      const auto kind = identity_weight_arg(weight);
      if (max_value < 2 || max_value > UINT32_MAX) throw UsageError("--max must be in 2..4294967295");
      for (const auto& [m, t] : scan_existence(kind, static_cast<std::uint32_t>(max_value))) {
        out << m << ' ' << t << '\n';
      }
      return 0;
    }

    if (search->parsed()) {
      const auto kind = identity_weight_arg(weight);
      if (multiplier < 2) throw UsageError("--m must be at least 2");
      const auto found = search_counterexample(modulus_arg(ell), kind, multiplier, max_length);
      if (!found) {
        out << "none\n";
        return 0;
      }
      out << format_code_spec(LinearCode(found->code.modulus(), found->code.length(),
                                         reduced_generators(found->code)));
      out << "discrepancy=" << format_poly(found->discrepancy) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "mwl: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace mwl::cli
