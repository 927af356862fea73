// Copyright 2026 The forbid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Words over [q]^n, codes, k-set families, permutation families and
// coordinate partitions, with the distance and agreement primitives the
// rest of the library is built on.
//
// Coordinates and symbols are 0-based in memory. The text formats in io.hpp
// print coordinates (set elements) 1-based.

#ifndef FORBID_HAMMING_HPP
#define FORBID_HAMMING_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forbid/errors.hpp"

namespace forbid {

using Symbol = std::uint8_t;
inline constexpr unsigned kMaxAlphabet = 256;

/// A word of [q]^n. Immutable once built; binary words also keep a packed
/// copy so that distances reduce to popcounts.
class Word {
 public:
  Word() = default;

  Word(std::vector<Symbol> symbols, unsigned q) : symbols_(std::move(symbols)), q_(q) {
    if (q < 2 || q > kMaxAlphabet)
      throw DomainError("alphabet size must lie in [2, 256], got " + std::to_string(q));
    for (Symbol s : symbols_)
      if (s >= q)
        throw DomainError("symbol " + std::to_string(s) + " outside [0, " +
                          std::to_string(q - 1) + "]");
    if (q_ == 2) pack();
  }

  Word(std::initializer_list<int> symbols, unsigned q)
      : Word(std::vector<Symbol>(symbols.begin(), symbols.end()), q) {}

  static Word zeros(std::size_t n, unsigned q) { return Word(std::vector<Symbol>(n, 0), q); }

  /// Inverse of `index()`: the base-q digits of `index`, most significant first.
  static Word from_index(std::uint64_t index, std::size_t n, unsigned q) {
    std::vector<Symbol> s(n, 0);
    for (std::size_t i = n; i-- > 0;) {
      s[i] = static_cast<Symbol>(index % q);
      index /= q;
    }
    return Word(std::move(s), q);
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  unsigned alphabet() const noexcept { return q_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::span<const std::uint64_t> packed() const noexcept { return bits_; }

  /// Rank in lexicographic order of [q]^n. Requires q^n < 2^64.
  std::uint64_t index() const noexcept {
    std::uint64_t v = 0;
    for (Symbol s : symbols_) v = v * q_ + s;
    return v;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (q_ > 10 && i != 0) out.push_back(' ');
      out += std::to_string(symbols_[i]);
    }
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.q_ == b.q_ && a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  void pack() {
    bits_.assign((symbols_.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] != 0) bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::vector<Symbol> symbols_;
  unsigned q_ = 2;
  std::vector<std::uint64_t> bits_;
};

namespace detail {
inline void require_same_shape(const Word& x, const Word& y) {
  if (x.size() != y.size() || x.alphabet() != y.alphabet())
    throw DimensionError("word shapes differ: (n=" + std::to_string(x.size()) +
                         ", q=" + std::to_string(x.alphabet()) + ") vs (n=" +
                         std::to_string(y.size()) + ", q=" + std::to_string(y.alphabet()) +
                         ")");
}
}  // namespace detail

inline std::size_t hamming_distance(const Word& x, const Word& y) {
  detail::require_same_shape(x, y);
  if (x.alphabet() == 2) {
    std::size_t d = 0;
    auto a = x.packed();
    auto b = y.packed();
    for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
    return d;
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

/// Coordinates (0-based, increasing) on which x and y agree.
inline std::vector<std::size_t> agree_set(const Word& x, const Word& y) {
  detail::require_same_shape(x, y);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == y[i]) out.push_back(i);
  return out;
}

/// Agreement set as a bit mask; n must not exceed 64.
inline std::uint64_t agree_mask(const Word& x, const Word& y) {
  detail::require_same_shape(x, y);
  if (x.size() > 64) throw DomainError("agree_mask needs n <= 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == y[i]) m |= std::uint64_t{1} << i;
  return m;
}

/// Distances realized by distinct pairs, kept sorted.
class DistanceSet {
 public:
  DistanceSet() = default;
  explicit DistanceSet(std::vector<std::size_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  bool contains(std::size_t d) const {
    return std::binary_search(values_.begin(), values_.end(), d);
  }
  bool empty() const noexcept { return values_.empty(); }
  std::size_t size() const noexcept { return values_.size(); }
  /// Largest realized distance (the diameter); 0 when empty.
  std::size_t max() const noexcept { return values_.empty() ? 0 : values_.back(); }
  const std::vector<std::size_t>& values() const& noexcept { return values_; }
  std::vector<std::size_t> values() && noexcept { return std::move(values_); }

  friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

 private:
  std::vector<std::size_t> values_;
};

/// A deduplicated set of words sharing (n, q), stored in lexicographic order.
class Code {
 public:
  Code(std::size_t n, unsigned q) : n_(n), q_(q) {
    if (q < 2 || q > kMaxAlphabet) throw DomainError("alphabet size must lie in [2, 256]");
  }

  Code(std::size_t n, unsigned q, std::vector<Word> words) : Code(n, q) {
    for (const Word& w : words)
      if (w.size() != n || w.alphabet() != q)
        throw DimensionError("word " + w.str() + " does not lie in [" + std::to_string(q) +
                             "]^" + std::to_string(n));
    std::sort(words.begin(), words.end());
    const std::size_t before = words.size();
    words.erase(std::unique(words.begin(), words.end()), words.end());
    duplicates_ = before - words.size();
    words_ = std::move(words);
  }

  std::size_t length() const noexcept { return n_; }
  unsigned alphabet() const noexcept { return q_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const& noexcept { return words_; }
  std::vector<Word> words() && noexcept { return std::move(words_); }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  bool contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  /// Position of `w` in the sorted word list, or size() when absent.
  std::size_t position(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    return (it != words_.end() && *it == w) ? static_cast<std::size_t>(it - words_.begin())
                                            : words_.size();
  }

  /// Number of duplicate words dropped at construction.
  std::size_t duplicates_removed() const noexcept { return duplicates_; }

  friend bool operator==(const Code& a, const Code& b) noexcept {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.words_ == b.words_;
  }

 private:
  std::size_t n_;
  unsigned q_;
  std::vector<Word> words_;
  std::size_t duplicates_ = 0;
};

/// All of [q]^n. Guarded at 2^24 words.
inline Code full_cube(std::size_t n, unsigned q) {
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  if (total > double(1 << 24)) throw GuardError("full cube too large to materialize");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(total); ++i)
    words.push_back(Word::from_index(i, n, q));
  return Code(n, q, std::move(words));
}

/// Codes above this size need `allow_quadratic` for a full pair scan.
inline constexpr std::size_t kQuadraticScanLimit = std::size_t{1} << 16;

inline DistanceSet distance_set(const Code& code, bool allow_quadratic = false) {
  if (code.size() > kQuadraticScanLimit && !allow_quadratic)
    throw GuardError("distance_set on " + std::to_string(code.size()) +
                     " words is a quadratic scan; pass allow_quadratic to proceed");
  std::vector<bool> seen(code.length() + 1, false);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) seen[hamming_distance(code[i], code[j])] = true;
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d < seen.size(); ++d)
    if (seen[d]) out.push_back(d);
  return DistanceSet(std::move(out));
}

/// Family of subsets of a ground set of at most 64 elements, as bit masks
/// (bit i is element i + 1). Sets may have mixed sizes.
class SetFamily {
 public:
  explicit SetFamily(std::size_t ground_size, std::vector<std::uint64_t> sets = {})
      : n_(ground_size) {
    if (ground_size > 64) throw DomainError("ground set larger than 64");
    const std::uint64_t universe = ground_size == 64 ? ~std::uint64_t{0}
                                                     : (std::uint64_t{1} << ground_size) - 1;
    for (std::uint64_t s : sets)
      if ((s & ~universe) != 0) throw DomainError("set element outside the ground set");
    std::sort(sets.begin(), sets.end());
    const std::size_t before = sets.size();
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    duplicates_ = before - sets.size();
    sets_ = std::move(sets);
  }

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<std::uint64_t>& sets() const& noexcept { return sets_; }
  std::vector<std::uint64_t> sets() && noexcept { return std::move(sets_); }
  std::size_t duplicates_removed() const noexcept { return duplicates_; }

  friend bool operator==(const SetFamily& a, const SetFamily& b) noexcept {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> sets_;
  std::size_t duplicates_ = 0;
};

/// A k-uniform SetFamily.
class KSetFamily : public SetFamily {
 public:
  KSetFamily(std::size_t ground_size, std::size_t k, std::vector<std::uint64_t> sets = {})
      : SetFamily(ground_size, std::move(sets)), k_(k) {
    if (k > ground_size) throw DomainError("k exceeds the ground set");
    for (std::uint64_t s : this->sets())
      if (static_cast<std::size_t>(std::popcount(s)) != k)
        throw DomainError("set of size " + std::to_string(std::popcount(s)) +
                          " in a " + std::to_string(k) + "-uniform family");
  }

  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

/// Mask from 1-based elements.
inline std::uint64_t set_mask(std::initializer_list<int> elements) {
  std::uint64_t m = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw DomainError("set element outside [1, 64]");
    m |= std::uint64_t{1} << (e - 1);
  }
  return m;
}

/// True iff no two distinct members meet in exactly l elements.
inline bool is_l_avoiding(const SetFamily& family, std::size_t l) {
  const auto& s = family.sets();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (static_cast<std::size_t>(std::popcount(s[i] & s[j])) == l) return false;
  return true;
}

inline bool is_l_avoiding(const KSetFamily& family, std::size_t l) {
  if (l > family.k()) throw DomainError("l exceeds k");
  return is_l_avoiding(static_cast<const SetFamily&>(family), l);
}

inline bool is_permutation(const Word& w) {
  if (w.alphabet() != w.size()) return false;
  std::vector<bool> seen(w.size(), false);
  for (Symbol s : w.symbols()) {
    if (seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

/// Permutations of [n] as words of [n]^n (position i holds the image of i).
class PermFamily {
 public:
  explicit PermFamily(std::size_t degree, std::vector<Word> perms = {}) : degree_(degree) {
    if (degree < 2 || degree > kMaxAlphabet) throw DomainError("degree must lie in [2, 256]");
    for (const Word& p : perms)
      if (p.size() != degree || !is_permutation(p))
        throw DomainError("word " + p.str() + " is not a permutation of degree " +
                          std::to_string(degree));
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    perms_ = std::move(perms);
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return perms_.size(); }
  const std::vector<Word>& perms() const& noexcept { return perms_; }
  std::vector<Word> perms() && noexcept { return std::move(perms_); }
  const Word& operator[](std::size_t i) const { return perms_[i]; }

  Code as_code() const { return Code(degree_, static_cast<unsigned>(degree_), perms_); }

 private:
  std::size_t degree_;
  std::vector<Word> perms_;
};

inline Word identity_perm(std::size_t n) {
  std::vector<Symbol> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Symbol>(i);
  return Word(std::move(s), static_cast<unsigned>(n));
}

/// All of S_n in lexicographic order.
inline std::vector<Word> all_permutations(std::size_t n) {
  std::vector<Symbol> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Symbol>(i);
  std::vector<Word> out;
  do {
    out.emplace_back(s, static_cast<unsigned>(n));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

inline DistanceSet perm_distance_set(const PermFamily& family) {
  if (family.size() < 2) return {};
  return distance_set(family.as_code());
}

/// Ordered disjoint blocks V_1..V_k covering {0..n-1}.
class CoordinatePartition {
 public:
  explicit CoordinatePartition(std::vector<std::vector<std::size_t>> blocks)
      : blocks_(std::move(blocks)) {
    std::size_t n = 0;
    for (const auto& b : blocks_) {
      if (b.empty()) throw DimensionError("partition block is empty");
      n += b.size();
    }
    std::vector<bool> seen(n, false);
    for (const auto& b : blocks_)
      for (std::size_t i : b) {
        if (i >= n || seen[i]) throw DimensionError("blocks are not a partition of [n]");
        seen[i] = true;
      }
    n_ = n;
  }

  /// Consecutive blocks of the given sizes: [0, s_1), [s_1, s_1 + s_2), ...
  static CoordinatePartition contiguous(std::span<const std::size_t> sizes) {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t next = 0;
    for (std::size_t s : sizes) {
      std::vector<std::size_t> b(s);
      for (auto& i : b) i = next++;
      blocks.push_back(std::move(b));
    }
    return CoordinatePartition(std::move(blocks));
  }
  static CoordinatePartition contiguous(std::initializer_list<std::size_t> sizes) {
    return contiguous(std::span<const std::size_t>(sizes.begin(), sizes.size()));
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t l) const { return blocks_[l]; }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t n_ = 0;
};

/// x restricted to the coordinates of block `l`, in block order.
inline Word restrict_to(const Word& x, const CoordinatePartition& p, std::size_t l) {
  if (x.size() != p.length()) throw DimensionError("word length differs from partition");
  const auto& b = p.block(l);
  std::vector<Symbol> s(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) s[i] = x[b[i]];
  return Word(std::move(s), x.alphabet());
}

/// x_1 ∘ ... ∘ x_k: coordinate i of the result is taken from the part whose
/// block contains i.
inline Word concat(std::span<const Word> parts, const CoordinatePartition& p) {
  if (parts.size() != p.block_count())
    throw DimensionError("expected " + std::to_string(p.block_count()) + " parts, got " +
                         std::to_string(parts.size()));
  if (parts.empty()) throw DimensionError("empty concatenation");
  const unsigned q = parts.front().alphabet();
  std::vector<Symbol> s(p.length(), 0);
  for (std::size_t l = 0; l < parts.size(); ++l) {
    const auto& b = p.block(l);
    if (parts[l].size() != b.size() || parts[l].alphabet() != q)
      throw DimensionError("part " + std::to_string(l + 1) + " does not match its block");
    for (std::size_t i = 0; i < b.size(); ++i) s[b[i]] = parts[l][i];
  }
  return Word(std::move(s), q);
}

inline Word concat(std::initializer_list<Word> parts, const CoordinatePartition& p) {
  return concat(std::span<const Word>(parts.begin(), parts.size()), p);
}

}  // namespace forbid

#endif  // FORBID_HAMMING_HPP
