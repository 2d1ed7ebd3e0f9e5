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

#include "mwl/zmod_codes.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

#include "mwl/errors.hpp"
#include "mwl/numeric.hpp"

namespace mwl {

Modulus::Modulus(std::uint32_t ell) : ell_(ell) {
  if (ell < 2) throw OutOfRange("modulus must be at least 2, got " + std::to_string(ell));
}

std::uint32_t Modulus::reduce(std::int64_t a) const {
  const std::int64_t r = a % static_cast<std::int64_t>(ell_);
  return static_cast<std::uint32_t>(r < 0 ? r + ell_ : r);
}

RingVector::RingVector(Modulus modulus, std::vector<std::uint32_t> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e >= modulus_.value()) {
      throw OutOfRange("residue " + std::to_string(e) + " not below modulus " +
                       std::to_string(modulus_.value()));
    }
  }
}

RingVector RingVector::zero(Modulus modulus, std::size_t length) {
  return RingVector(modulus, std::vector<std::uint32_t>(length, 0));
}

RingVector RingVector::reduced(Modulus modulus, std::span<const std::int64_t> values) {
  std::vector<std::uint32_t> entries;
  entries.reserve(values.size());
  for (auto v : values) entries.push_back(modulus.reduce(v));
  return RingVector(modulus, std::move(entries));
}

bool RingVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

RingVector RingVector::operator+(const RingVector& other) const {
  if (other.modulus_ != modulus_ || other.size() != size()) {
    throw LengthMismatch("cannot add vectors of different shape");
  }
  std::vector<std::uint32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = (entries_[i] + other.entries_[i]) % modulus_.value();
  }
  return RingVector(modulus_, std::move(out));
}

RingVector RingVector::operator-() const {
  std::vector<std::uint32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = entries_[i] == 0 ? 0 : modulus_.value() - entries_[i];
  }
  return RingVector(modulus_, std::move(out));
}

RingVector RingVector::scaled(std::uint32_t lambda) const {
  std::vector<std::uint32_t> out(size());
  const std::uint64_t ell = modulus_.value();
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = static_cast<std::uint32_t>((std::uint64_t{entries_[i]} * lambda) % ell);
  }
  return RingVector(modulus_, std::move(out));
}

std::uint32_t RingVector::dot(const RingVector& other) const {
  if (other.modulus_ != modulus_ || other.size() != size()) {
    throw LengthMismatch("cannot take inner product of vectors of different shape");
  }
  const std::uint64_t ell = modulus_.value();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    acc = (acc + std::uint64_t{entries_[i]} * other.entries_[i]) % ell;
  }
  return static_cast<std::uint32_t>(acc);
}

std::string to_string(const RingVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ')';
}

namespace {
std::atomic<std::uint64_t> g_budget{kDefaultEnumerationBudget};
}  // namespace

std::uint64_t enumeration_budget() { return g_budget.load(); }
void set_enumeration_budget(std::uint64_t budget) { g_budget.store(budget); }

std::uint64_t space_size(Modulus modulus, std::size_t length, std::uint64_t limit) {
  const auto size = checked_pow(modulus.value(), length, limit);
  if (!size) {
    throw BudgetExceeded(std::to_string(modulus.value()) + "^" + std::to_string(length) +
                         " vectors exceeds the limit of " + std::to_string(limit));
  }
  return *size;
}

std::uint64_t space_size(Modulus modulus, std::size_t length) {
  return space_size(modulus, length, enumeration_budget());
}

PackedSpace::PackedSpace(Modulus modulus, std::size_t length)
    : modulus_(modulus), length_(length), size_(space_size(modulus, length)) {}

std::uint64_t PackedSpace::pack(const RingVector& v) const {
  std::uint64_t index = 0;
  for (auto e : v.entries()) index = index * modulus_.value() + e;
  return index;
}

void PackedSpace::unpack_into(std::uint64_t index, std::span<std::uint32_t> digits) const {
  const std::uint64_t ell = modulus_.value();
  for (std::size_t i = length_; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(index % ell);
    index /= ell;
  }
}

RingVector PackedSpace::unpack(std::uint64_t index) const {
  std::vector<std::uint32_t> digits(length_);
  unpack_into(index, digits);
  return RingVector(modulus_, std::move(digits));
}

std::uint64_t PackedSpace::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t ell = modulus_.value();
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t i = 0; i < length_; ++i) {
    const std::uint64_t s = (a % ell + b % ell) % ell;
    out += s * place;
    place *= ell;
    a /= ell;
    b /= ell;
  }
  return out;
}

namespace {

// Running span of a growing generator list inside a packed space.
class SpanBuilder {
 public:
  explicit SpanBuilder(const PackedSpace& space) : space_(space), member_(space.size(), 0) {
    member_[0] = 1;
    elements_.push_back(0);
  }

  SpanBuilder(const PackedSpace& space, const CodewordIndices& start)
      : space_(space), member_(space.size(), 0), elements_(start) {
    for (auto e : elements_) member_[e] = 1;
  }

  bool contains(std::uint64_t v) const { return member_[v] != 0; }

  // Replaces the span H by H + <g>. Returns false when g was already in H.
  bool extend(std::uint64_t g) {
    if (member_[g]) return false;
    const std::size_t base = elements_.size();
    for (std::uint64_t shift = g; !member_[shift]; shift = space_.add(shift, g)) {
      for (std::size_t i = 0; i < base; ++i) {
        const std::uint64_t e = space_.add(elements_[i], shift);
        if (!member_[e]) {
          member_[e] = 1;
          elements_.push_back(e);
        }
      }
    }
    return true;
  }

  CodewordIndices sorted() const {
    CodewordIndices out = elements_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const PackedSpace& space_;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint64_t> elements_;
};

void check_generators(Modulus modulus, std::size_t length, std::span<const RingVector> gens) {
  for (const auto& g : gens) {
    if (g.modulus() != modulus || g.size() != length) {
      throw LengthMismatch("generator " + to_string(g) + " does not live in Z_" +
                           std::to_string(modulus.value()) + "^" + std::to_string(length));
    }
  }
}

}  // namespace

struct LinearCode::SpanCache {
  std::mutex mutex;
  std::optional<CodewordIndices> codewords;
};

LinearCode::LinearCode(Modulus modulus, std::size_t length, std::vector<RingVector> generators)
    : modulus_(modulus),
      length_(length),
      generators_(std::move(generators)),
      cache_(std::make_shared<SpanCache>()) {
  if (length == 0) throw OutOfRange("code length must be at least 1");
  check_generators(modulus_, length_, generators_);
}

LinearCode::LinearCode(Modulus modulus, std::size_t length, std::vector<RingVector> generators,
                       CodewordIndices codewords)
    : LinearCode(modulus, length, std::move(generators)) {
  cache_->codewords = std::move(codewords);
}

LinearCode LinearCode::zero(Modulus modulus, std::size_t length) {
  return LinearCode(modulus, length, {});
}

LinearCode LinearCode::full(Modulus modulus, std::size_t length) {
  std::vector<RingVector> gens;
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::uint32_t> e(length, 0);
    e[i] = 1;
    gens.emplace_back(modulus, std::move(e));
  }
  return LinearCode(modulus, length, std::move(gens));
}

const CodewordIndices& LinearCode::codeword_indices() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->codewords) {
    const PackedSpace space(modulus_, length_);
    SpanBuilder span(space);
    for (const auto& g : generators_) span.extend(space.pack(g));
    cache_->codewords = span.sorted();
  }
  return *cache_->codewords;
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.modulus_ == b.modulus_ && a.length_ == b.length_ &&
         a.codeword_indices() == b.codeword_indices();
}

std::vector<RingVector> enumerate_codewords(const LinearCode& code) {
  const PackedSpace space(code.modulus(), code.length());
  std::vector<RingVector> out;
  const auto& indices = code.codeword_indices();
  out.reserve(indices.size());
  for (auto idx : indices) out.push_back(space.unpack(idx));
  return out;
}

std::uint64_t cardinality(const LinearCode& code) { return code.codeword_indices().size(); }

std::vector<RingVector> reduced_generators(const LinearCode& code) {
  const PackedSpace space(code.modulus(), code.length());
  SpanBuilder span(space);
  std::vector<RingVector> gens;
  for (auto idx : code.codeword_indices()) {
    if (span.extend(idx)) gens.push_back(space.unpack(idx));
  }
  return gens;
}

LinearCode dual_code(const LinearCode& code) {
  const PackedSpace space(code.modulus(), code.length());
  const std::uint64_t ell = code.modulus().value();
  const std::size_t n = code.length();
  const auto gens = reduced_generators(code);

  CodewordIndices members;
  std::vector<std::uint32_t> digits(n, 0);
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    bool orthogonal = true;
    for (const auto& g : gens) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += std::uint64_t{digits[i]} * g[i];
      if (acc % ell != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) members.push_back(idx);
    // odometer, last coordinate fastest
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < ell) break;
      digits[i] = 0;
    }
  }

  std::vector<RingVector> all;
  all.reserve(members.size());
  for (auto idx : members) all.push_back(space.unpack(idx));
  return LinearCode(code.modulus(), n, std::move(all), std::move(members));
}

namespace {

// Digit-table arithmetic for spaces small enough to enumerate.
class SmallSpace {
 public:
  explicit SmallSpace(const PackedSpace& space)
      : ell_(space.modulus().value()), length_(space.length()), size_(space.size()),
        digits_(size_ * length_), place_(length_) {
    std::uint64_t place = 1;
    for (std::size_t i = length_; i-- > 0;) {
      place_[i] = place;
      place *= ell_;
    }
    for (std::uint64_t v = 0; v < size_; ++v) {
      space.unpack_into(v, std::span(digits_).subspan(v * length_, length_));
    }
  }

  std::uint64_t size() const { return size_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint32_t* da = &digits_[a * length_];
    const std::uint32_t* db = &digits_[b * length_];
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < length_; ++i) {
      std::uint32_t s = da[i] + db[i];
      if (s >= ell_) s -= ell_;
      out += s * place_[i];
    }
    return out;
  }

  std::uint64_t scale(std::uint64_t a, std::uint32_t k) const {
    const std::uint32_t* da = &digits_[a * length_];
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < length_; ++i) {
      out += (static_cast<std::uint64_t>(da[i]) * k % ell_) * place_[i];
    }
    return out;
  }

 private:
  std::uint32_t ell_;
  std::size_t length_;
  std::uint64_t size_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint64_t> place_;
};

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

struct Subgroup {
  CodewordIndices members;  // sorted
  std::uint64_t fingerprint = 0;
  std::vector<std::uint64_t> generators;
};

}  // namespace

std::vector<LinearCode> all_linear_codes(Modulus modulus, std::size_t length) {
  space_size(modulus, length, std::min(kExhaustiveSpaceLimit, enumeration_budget()));
  const PackedSpace space(modulus, length);
  const SmallSpace small(space);
  const std::uint64_t size = small.size();

  // A nonzero finite abelian group always has a subgroup of prime index, so
  // every subgroup is reached from {0} by steps H -> H + <v> with p*v in H.
  const auto primes = prime_divisors(modulus.value());
  std::vector<std::vector<std::uint64_t>> times_prime;
  for (auto p : primes) {
    std::vector<std::uint64_t> table(size);
    for (std::uint64_t v = 0; v < size; ++v) table[v] = small.scale(v, p);
    times_prime.push_back(std::move(table));
  }

  // Zobrist fingerprints; a match is confirmed exactly before it is trusted.
  std::mt19937_64 rng(0x6d776c5f636f6465ULL);
  std::vector<std::uint64_t> keys(size);
  for (auto& k : keys) k = rng();

  std::deque<Subgroup> groups;
  std::unordered_multimap<std::uint64_t, std::size_t> by_fingerprint;
  groups.push_back({CodewordIndices{0}, keys[0], {}});
  by_fingerprint.emplace(keys[0], 0);

  auto is_member = [](const CodewordIndices& members, std::uint64_t x) {
    return std::binary_search(members.begin(), members.end(), x);
  };

  std::vector<std::uint8_t> in_subgroup(size);
  std::vector<std::uint8_t> covered(size);
  CodewordIndices grown;
  for (std::size_t current = 0; current < groups.size(); ++current) {
    const Subgroup& parent = groups[current];
    std::fill(in_subgroup.begin(), in_subgroup.end(), 0);
    for (auto h : parent.members) in_subgroup[h] = 1;
    covered = in_subgroup;

    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      const auto& times = times_prime[pi];
      for (std::uint64_t v = 0; v < size; ++v) {
        if (covered[v] || !in_subgroup[times[v]]) continue;
        // The cosets H + kv, 0 < k < p, all generate the same extension.
        grown = parent.members;
        std::uint64_t fingerprint = parent.fingerprint;
        std::uint64_t shift = v;
        for (std::uint32_t k = 1; k < primes[pi]; ++k, shift = small.add(shift, v)) {
          for (auto h : parent.members) {
            const auto w = small.add(h, shift);
            grown.push_back(w);
            covered[w] = 1;
            fingerprint ^= keys[w];
          }
        }

        bool known = false;
        auto [lo, hi] = by_fingerprint.equal_range(fingerprint);
        for (auto it = lo; it != hi && !known; ++it) {
          const auto& other = groups[it->second].members;
          if (other.size() != grown.size() || !is_member(other, v)) continue;
          known = std::all_of(parent.members.begin(), parent.members.end(),
                              [&](std::uint64_t h) { return is_member(other, h); });
        }
        if (known) continue;

        std::sort(grown.begin(), grown.end());
        auto gens = parent.generators;
        gens.push_back(v);
        by_fingerprint.emplace(fingerprint, groups.size());
        groups.push_back({grown, fingerprint, std::move(gens)});
      }
    }
  }

  std::vector<std::size_t> order(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return groups[a].members < groups[b].members;
  });

  std::vector<LinearCode> codes;
  codes.reserve(groups.size());
  for (auto i : order) {
    std::vector<RingVector> generators;
    for (auto g : groups[i].generators) generators.push_back(space.unpack(g));
    codes.push_back(
        LinearCode(modulus, length, std::move(generators), std::move(groups[i].members)));
  }
  return codes;
}

LinearCode parse_code_spec(std::string_view text) {
  std::optional<std::uint32_t> ell;
  std::optional<std::size_t> length;
  std::vector<std::vector<std::int64_t>> raw_gens;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::string key;
    words >> key;
    auto fail = [&](const std::string& what) {
      return ParseError("code spec line " + std::to_string(line_no) + ": " + what);
    };
    if (key == "modulus" || key == "length") {
      long long value = 0;
      std::string extra;
      if (!(words >> value) || (words >> extra)) throw fail("expected one integer after " + key);
      if (value < (key == "modulus" ? 2 : 1)) throw fail(key + " out of range");
      if (key == "modulus") {
        if (ell) throw fail("duplicate modulus");
        if (value > UINT32_MAX) throw fail("modulus too large");
        ell = static_cast<std::uint32_t>(value);
      } else {
        if (length) throw fail("duplicate length");
        length = static_cast<std::size_t>(value);
      }
    } else if (key == "gen") {
      std::vector<std::int64_t> values;
      std::string token;
      while (words >> token) {
        try {
          std::size_t used = 0;
          values.push_back(std::stoll(token, &used));
          if (used != token.size()) throw fail("bad residue '" + token + "'");
        } catch (const std::logic_error&) {
          throw fail("bad residue '" + token + "'");
        }
      }
      raw_gens.push_back(std::move(values));
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
  }
  if (!ell) throw ParseError("code spec: missing 'modulus' line");
  if (!length) throw ParseError("code spec: missing 'length' line");

  const Modulus modulus(*ell);
  std::vector<RingVector> gens;
  for (const auto& raw : raw_gens) {
    if (raw.size() != *length) {
      throw ParseError("code spec: generator has " + std::to_string(raw.size()) +
                       " entries, expected " + std::to_string(*length));
    }
    gens.push_back(RingVector::reduced(modulus, raw));
  }
  return LinearCode(modulus, *length, std::move(gens));
}

std::string format_code_spec(const LinearCode& code) {
  std::string out = "modulus " + std::to_string(code.modulus().value()) + "\nlength " +
                    std::to_string(code.length()) + "\n";
  for (const auto& g : code.generators()) {
    out += "gen";
    for (auto e : g.entries()) out += ' ' + std::to_string(e);
    out += '\n';
  }
  return out;
}

}  // namespace mwl
