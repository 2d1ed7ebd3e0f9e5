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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mwl/errors.hpp"
#include "mwl/numeric.hpp"
#include "mwl/weight_enum.hpp"

namespace mwl {
namespace {

constexpr std::uint32_t kMaxPrimeField = 256;

// Monic reduction polynomials, low-to-high coefficients.
const std::map<std::uint32_t, std::vector<std::uint32_t>>& extension_polynomials() {
  static const std::map<std::uint32_t, std::vector<std::uint32_t>> polys = {
      {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},          {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}}, {64, {1, 1, 0, 0, 0, 0, 1}}, {9, {1, 0, 1}},
      {27, {1, 2, 0, 1}},      {81, {2, 0, 0, 2, 1}},      {25, {2, 4, 1}},
      {49, {3, 6, 1}},
  };
  return polys;
}

std::vector<std::uint32_t> to_digits(std::uint32_t label, std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = label % p;
    label /= p;
  }
  return d;
}

std::uint32_t from_digits(std::span<const std::uint32_t> d, std::uint32_t p) {
  std::uint32_t label = 0;
  for (std::size_t i = d.size(); i-- > 0;) label = label * p + d[i];
  return label;
}

}  // namespace

bool is_supported_field_order(std::uint32_t m) {
  const auto pp = as_prime_power(m);
  if (!pp) return false;
  if (pp->exponent == 1) return m < kMaxPrimeField;
  return extension_polynomials().contains(m);
}

std::vector<std::uint32_t> supported_field_orders() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 2; m < kMaxPrimeField; ++m) {
    if (is_supported_field_order(m)) out.push_back(m);
  }
  return out;
}

FieldSpec make_field(std::uint32_t m) {
  if (!is_supported_field_order(m)) {
    throw NotPrimePower("no built-in finite field of order " + std::to_string(m));
  }
  const auto pp = *as_prime_power(m);
  FieldSpec f;
  f.order_ = m;
  f.prime_ = static_cast<std::uint32_t>(pp.prime);
  f.degree_ = pp.exponent;
  f.poly_ = pp.exponent == 1 ? std::vector<std::uint32_t>{0, 1} : extension_polynomials().at(m);

  const std::uint32_t p = f.prime_;
  const unsigned k = f.degree_;
  auto tables = std::make_shared<FieldSpec::Tables>();
  tables->add.resize(std::size_t{m} * m);
  tables->mul.resize(std::size_t{m} * m);
  for (std::uint32_t a = 0; a < m; ++a) {
    const auto da = to_digits(a, p, k);
    for (std::uint32_t b = 0; b < m; ++b) {
      const auto db = to_digits(b, p, k);
      std::vector<std::uint32_t> sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      tables->add[a * m + b] = from_digits(sum, p);

      // schoolbook product, then reduce by the monic polynomial from the top
      std::vector<std::uint32_t> prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      for (std::size_t top = prod.size(); top-- > k;) {
        const std::uint32_t c = prod[top];
        if (c == 0) continue;
        for (unsigned i = 0; i <= k; ++i) {
          const std::size_t pos = top - k + i;
          prod[pos] = (prod[pos] + (p - c) * f.poly_[i]) % p;
        }
      }
      tables->mul[a * m + b] = from_digits(std::span(prod).first(k), p);
    }
  }
  f.tables_ = std::move(tables);
  return f;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order_; ++b) {
    if (add(a, b) == 0) return b;
  }
  return 0;
}

bool FieldSpec::satisfies_field_axioms() const {
  const std::uint32_t m = order_;
  for (std::uint32_t a = 0; a < m; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
    bool has_neg = false;
    bool has_inv = a == 0;
    for (std::uint32_t b = 0; b < m; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      has_neg |= add(a, b) == 0;
      has_inv |= mul(a, b) == 1;
      for (std::uint32_t c = 0; c < m; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
    if (!has_neg || !has_inv) return false;
  }
  return true;
}

GrayMap::GrayMap(Modulus modulus, FieldSpec field, std::vector<std::vector<std::uint32_t>> rows)
    : modulus_(modulus), field_(std::move(field)), rows_(std::move(rows)) {
  if (rows_.size() != modulus_.value()) {
    throw LengthMismatch("Gray map needs " + std::to_string(modulus_.value()) + " rows, got " +
                         std::to_string(rows_.size()));
  }
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (rows_[a].size() != width()) {
      throw LengthMismatch("Gray map row " + std::to_string(a) + " must have " +
                           std::to_string(width()) + " entries");
    }
    for (auto e : rows_[a]) {
      if (e >= field_.order()) {
        throw OutOfRange("Gray map entry " + std::to_string(e) + " is not a label of GF(" +
                         std::to_string(field_.order()) + ")");
      }
    }
  }
  if (std::any_of(rows_[0].begin(), rows_[0].end(), [](auto e) { return e != 0; })) {
    throw OutOfRange("Gray map must send 0 to the zero tuple");
  }
}

GrayMap canonical_gray_map(Modulus modulus, const FieldSpec& field) {
  const std::uint32_t w = modulus.half();
  const std::uint32_t minus_label = field.order() - 1;
  std::vector<std::vector<std::uint32_t>> rows(modulus.value(), std::vector<std::uint32_t>(w, 0));
  for (std::uint32_t a = 1; a < modulus.value(); ++a) {
    const std::uint32_t i = lee_weight(a, modulus);
    auto& row = rows[a];
    if (a < w) {
      std::fill(row.end() - i, row.end(), 1);
    } else if (a == w) {
      std::fill(row.begin(), row.end(), 1);
    } else {
      std::fill(row.begin(), row.begin() + i, minus_label);
    }
  }
  return GrayMap(modulus, field, std::move(rows));
}

std::vector<std::uint32_t> apply_gray(const GrayMap& map, const RingVector& v) {
  if (v.modulus() != map.modulus()) throw OutOfRange("vector modulus does not match Gray map");
  std::vector<std::uint32_t> out;
  out.reserve(v.size() * map.width());
  for (auto e : v.entries()) {
    const auto row = map.row(e);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

bool is_weight_preserving(const GrayMap& map) {
  for (std::uint32_t a = 0; a < map.modulus().value(); ++a) {
    const auto row = map.row(a);
    const auto nonzero = std::count_if(row.begin(), row.end(), [](auto e) { return e != 0; });
    if (static_cast<std::uint32_t>(nonzero) != lee_weight(a, map.modulus())) return false;
  }
  return true;
}

bool is_bijective_extension(const GrayMap& map) {
  const auto power = checked_pow(map.field().order(), map.width(), map.modulus().value());
  if (!power || *power != map.modulus().value()) return false;
  const std::set<std::vector<std::uint32_t>> distinct(map.rows().begin(), map.rows().end());
  return distinct.size() == map.rows().size();
}

bool image_is_linear(const GrayMap& map, const LinearCode& code) {
  const auto codewords = enumerate_codewords(code);
  const std::uint64_t size = codewords.size();
  if (size > 0 && size > enumeration_budget() / size) {
    throw BudgetExceeded("pairwise closure check over " + std::to_string(size) +
                         " codewords exceeds the enumeration budget");
  }
  const FieldSpec& f = map.field();
  std::set<std::vector<std::uint32_t>> image;
  for (const auto& c : codewords) image.insert(apply_gray(map, c));

  std::vector<std::uint32_t> buf;
  for (const auto& u : image) {
    for (std::uint32_t s = 2; s < f.order(); ++s) {
      buf.resize(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) buf[i] = f.mul(s, u[i]);
      if (!image.contains(buf)) return false;
    }
    for (const auto& v : image) {
      buf.resize(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) buf[i] = f.add(u[i], v[i]);
      if (!image.contains(buf)) return false;
    }
  }
  return true;
}

std::string format_gray_table(const GrayMap& map) {
  std::string out;
  for (std::uint32_t a = 0; a < map.modulus().value(); ++a) {
    out += std::to_string(a) + " :";
    for (auto e : map.row(a)) out += ' ' + std::to_string(e);
    out += '\n';
  }
  return out;
}

GrayMap parse_gray_table(std::string_view text, const FieldSpec& field) {
  std::map<long long, std::vector<std::uint32_t>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    auto fail = [&](const std::string& what) {
      return ParseError("Gray table line " + std::to_string(line_no) + ": " + what);
    };
    if (colon == std::string::npos) throw fail("expected 'a : e1 ... ew'");
    std::istringstream lhs(line.substr(0, colon));
    long long a = -1;
    std::string extra;
    if (!(lhs >> a) || (lhs >> extra) || a < 0) throw fail("bad residue before ':'");
    std::istringstream rhs(line.substr(colon + 1));
    std::vector<std::uint32_t> row;
    long long e = 0;
    while (rhs >> e) {
      if (e < 0 || e >= field.order()) throw fail("field label out of range");
      row.push_back(static_cast<std::uint32_t>(e));
    }
    if (!rhs.eof()) throw fail("non-numeric field label");
    if (!rows.emplace(a, std::move(row)).second) throw fail("duplicate residue");
  }
  const auto ell = static_cast<long long>(rows.size());
  if (ell < 2 || rows.rbegin()->first != ell - 1) {
    throw ParseError("Gray table must list every residue 0 .. ell-1 exactly once (ell >= 2)");
  }
  std::vector<std::vector<std::uint32_t>> ordered;
  for (auto& [a, row] : rows) ordered.push_back(std::move(row));
  return GrayMap(Modulus(static_cast<std::uint32_t>(ell)), field, std::move(ordered));
}

}  // namespace mwl
