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

// Brute-force reference computations for tests. Nothing here calls into the
// library's enumeration, dual, enumerator, transform or Krawtchouk code.

#ifndef MWL_TESTS_ORACLES_HPP_
#define MWL_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<std::uint32_t>;
using VecSet = std::set<Vec>;

inline std::vector<Vec> all_vectors(std::uint32_t ell, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < ell) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

// {sum lambda_i g_i} by running over every coefficient tuple.
inline VecSet span(std::uint32_t ell, std::size_t n, const std::vector<Vec>& gens) {
  VecSet out;
  for (const auto& lambda : all_vectors(ell, gens.size())) {
    Vec v(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + lambda[g] * gens[g][i]) % ell;
    }
    out.insert(v);
  }
  if (gens.empty()) out.insert(Vec(n, 0));
  return out;
}

// Orthogonal complement tested against every codeword.
inline VecSet dual(std::uint32_t ell, std::size_t n, const VecSet& code) {
  VecSet out;
  for (const auto& x : all_vectors(ell, n)) {
    bool ok = true;
    for (const auto& y : code) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += std::uint64_t{x[i]} * y[i];
      if (s % ell) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

enum class Weight { Hamming, Lee, Euclidean };

inline std::uint64_t weight(std::uint32_t a, std::uint32_t ell, Weight w) {
  const std::uint64_t lee = a <= ell - a ? a : ell - a;
  switch (w) {
    case Weight::Hamming:
      return a != 0;
    case Weight::Lee:
      return lee;
    case Weight::Euclidean:
      return lee * lee;
  }
  return 0;
}

// Coefficients (index = weight) of sum_c x^(D - wt c) y^(wt c).
inline std::vector<Int> enumerator(std::uint32_t ell, std::size_t n, const VecSet& code, Weight w) {
  std::uint64_t per = 0;
  for (std::uint32_t a = 0; a < ell; ++a) per = std::max(per, weight(a, ell, w));
  std::vector<Int> out(per * n + 1, 0);
  for (const auto& c : code) {
    std::uint64_t total = 0;
    for (auto e : c) total += weight(e, ell, w);
    out[total] += 1;
  }
  return out;
}

// Evaluates sum_i coeffs[i] x^(D-i) y^i.
template <typename C>
Rat evaluate(const std::vector<C>& coeffs, const Rat& x, const Rat& y) {
  const std::size_t d = coeffs.size() - 1;
  Rat acc = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    Rat term = Rat(coeffs[i]);
    for (std::size_t k = 0; k < d - i; ++k) term *= x;
    for (std::size_t k = 0; k < i; ++k) term *= y;
    acc += term;
  }
  return acc;
}

// Coefficients of (1/s) p(x + (t-1) y, x - y), recovered by solving the
// Vandermonde system from values at x = 1, y = 0 .. D.
inline std::vector<Rat> transform_by_interpolation(const std::vector<Rat>& p, std::uint64_t t,
                                                   const Int& s) {
  const std::size_t d = p.size() - 1;
  std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(d + 2));
  for (std::size_t r = 0; r <= d; ++r) {
    const Rat y = static_cast<long>(r);
    const Rat value = evaluate(p, Rat(1) + Rat(Int(t) - 1) * y, Rat(1) - y) / Rat(s);
    Rat pw = 1;
    for (std::size_t c = 0; c <= d; ++c) {
      a[r][c] = pw;
      pw *= y;
    }
    a[r][d + 1] = value;
  }
  for (std::size_t c = 0; c <= d; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r <= d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= d + 1; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rat> out(d + 1);
  for (std::size_t c = 0; c <= d; ++c) out[c] = a[c][d + 1] / a[c][c];
  return out;
}

// K_k(x) by the three-term recurrence
// (k+1) K_{k+1} = (k + (q-1)(n-k) - q x) K_k - (q-1)(n-k+1) K_{k-1}.
inline std::vector<std::vector<Int>> krawtchouk_by_recurrence(std::uint32_t n, std::uint64_t q) {
  std::vector<std::vector<Int>> k_of(n + 1, std::vector<Int>(n + 1));
  const Int qq = q;
  for (std::uint32_t x = 0; x <= n; ++x) {
    k_of[0][x] = 1;
    if (n >= 1) k_of[1][x] = (qq - 1) * (n - x) - x;
    for (std::uint32_t k = 1; k + 1 <= n; ++k) {
      const Int lhs = (Int(k) + (qq - 1) * (n - k) - qq * x) * k_of[k][x] -
                      (qq - 1) * (n - k + 1) * k_of[k - 1][x];
      k_of[k + 1][x] = lhs / (k + 1);
    }
  }
  return k_of;
}

// Every subgroup of Z_ell^n as the span of at most n vectors.
inline std::set<VecSet> subgroups_by_generator_subsets(std::uint32_t ell, std::size_t n) {
  const auto vectors = all_vectors(ell, n);
  std::set<VecSet> out;
  std::vector<Vec> gens;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    out.insert(span(ell, n, gens));
    if (gens.size() == n) return;
    for (std::size_t i = start; i < vectors.size(); ++i) {
      gens.push_back(vectors[i]);
      self(self, i);
      gens.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline Vec random_vector(std::mt19937_64& rng, std::uint32_t ell, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, ell - 1);
  Vec v(n);
  for (auto& e : v) e = d(rng);
  return v;
}

}  // namespace oracle

#endif  // MWL_TESTS_ORACLES_HPP_
