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

#include "mwl/homopoly.hpp"

#include <algorithm>
#include <sstream>

#include "mwl/errors.hpp"

namespace mwl {

HomoPoly::HomoPoly(std::size_t degree) : coeffs_(degree + 1) {}

HomoPoly::HomoPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw OutOfRange("a homogeneous polynomial needs at least one coefficient");
}

HomoPoly HomoPoly::from_integers(std::span<const std::int64_t> coeffs) {
  return HomoPoly(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

HomoPoly HomoPoly::from_integers(std::span<const BigInt> coeffs) {
  return HomoPoly(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

HomoPoly HomoPoly::from_integers(std::initializer_list<std::int64_t> coeffs) {
  return HomoPoly(std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

bool HomoPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational HomoPoly::evaluate(const Rational& x, const Rational& y) const {
  // Horner in y/x would divide by x; accumulate powers instead.
  const std::size_t d = degree();
  std::vector<Rational> xp(d + 1, Rational(1)), yp(d + 1, Rational(1));
  for (std::size_t i = 1; i <= d; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  Rational acc = 0;
  for (std::size_t i = 0; i <= d; ++i) acc += coeffs_[i] * xp[d - i] * yp[i];
  return acc;
}

HomoPoly HomoPoly::operator+(const HomoPoly& other) const {
  if (other.degree() != degree()) {
    throw DegreeMismatch("cannot add polynomials of degree " + std::to_string(degree()) + " and " +
                         std::to_string(other.degree()));
  }
  HomoPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

HomoPoly HomoPoly::operator-(const HomoPoly& other) const {
  if (other.degree() != degree()) {
    throw DegreeMismatch("cannot subtract polynomials of degree " + std::to_string(degree()) +
                         " and " + std::to_string(other.degree()));
  }
  HomoPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  return out;
}

HomoPoly HomoPoly::operator*(const Rational& factor) const {
  HomoPoly out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

namespace {

// Coefficients of (a x + b y)^k in powers of y.
std::vector<BigInt> binomial_power(const BigInt& a, const BigInt& b, std::size_t k) {
  std::vector<BigInt> out(k + 1);
  std::vector<BigInt> apow(k + 1, BigInt(1)), bpow(k + 1, BigInt(1));
  for (std::size_t i = 1; i <= k; ++i) {
    apow[i] = apow[i - 1] * a;
    bpow[i] = bpow[i - 1] * b;
  }
  for (std::size_t j = 0; j <= k; ++j) {
    out[j] = binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j)) * apow[k - j] *
             bpow[j];
  }
  return out;
}

}  // namespace

HomoPoly substitute_transform(const HomoPoly& p, std::uint64_t multiplier, const BigInt& scale) {
  if (multiplier < 1) throw OutOfRange("transform multiplier must be at least 1");
  if (scale <= 0) throw OutOfRange("transform scale must be positive");
  const std::size_t d = p.degree();
  const BigInt t_minus_one = BigInt(multiplier) - 1;
  std::vector<Rational> out(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    if (p[i] == 0) continue;
    // x^(d-i) y^i  ->  (x + (t-1) y)^(d-i) (x - y)^i
    const auto left = binomial_power(1, t_minus_one, d - i);
    const auto right = binomial_power(1, -1, i);
    for (std::size_t a = 0; a < left.size(); ++a) {
      for (std::size_t b = 0; b < right.size(); ++b) {
        out[a + b] += p[i] * Rational(left[a] * right[b]);
      }
    }
  }
  const Rational inv_scale(BigInt(1), scale);
  for (auto& c : out) c *= inv_scale;
  return HomoPoly(std::move(out));
}

bool is_nonneg_integer_poly(const HomoPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& c) { return c >= 0 && is_integer(c); });
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string out = num.str();
  if (den != 1) out += '/' + den.str();
  return out;
}

std::string format_poly(const HomoPoly& p) {
  std::string out = "deg " + std::to_string(p.degree()) + ";";
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    if (p[i] == 0) continue;
    out += ' ' + std::to_string(i) + ':' + format_rational(p[i]);
  }
  return out;
}

namespace {

BigInt parse_bigint(const std::string& s) {
  std::size_t pos = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (pos == s.size()) throw ParseError("empty integer in polynomial text");
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + s + "' in polynomial text");
  }
  BigInt v(s.substr(pos));
  return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

HomoPoly parse_poly(std::string_view text) {
  std::string s(text);
  const auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("polynomial text must contain ';'");
  std::istringstream head(s.substr(0, semi));
  std::string kw;
  long long degree = -1;
  std::string extra;
  if (!(head >> kw) || kw != "deg" || !(head >> degree) || degree < 0 || (head >> extra)) {
    throw ParseError("polynomial text must start with 'deg D;'");
  }
  HomoPoly p(static_cast<std::size_t>(degree));
  std::vector<Rational> coeffs(p.coeffs().begin(), p.coeffs().end());
  std::vector<bool> assigned(coeffs.size(), false);
  std::istringstream body(s.substr(semi + 1));
  std::string term;
  while (body >> term) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw ParseError("term '" + term + "' lacks ':'");
    const BigInt idx = parse_bigint(term.substr(0, colon));
    if (idx < 0 || idx > degree) throw ParseError("term index out of range in '" + term + "'");
    const auto i = static_cast<std::size_t>(idx);
    if (assigned[i]) throw ParseError("duplicate term index in '" + term + "'");
    assigned[i] = true;
    const std::string value = term.substr(colon + 1);
    const auto slash = value.find('/');
    if (slash == std::string::npos) {
      coeffs[i] = Rational(parse_bigint(value));
    } else {
      const BigInt den = parse_bigint(value.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + term + "'");
      coeffs[i] = Rational(parse_bigint(value.substr(0, slash)), den);
    }
  }
  return HomoPoly(std::move(coeffs));
}

}  // namespace mwl
