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

#ifndef FORBID_CONSTRUCTIONS_HPP
#define FORBID_CONSTRUCTIONS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "forbid/errors.hpp"
#include "forbid/hamming.hpp"
#include "forbid/numeric.hpp"

namespace forbid {

/// Binary words of even weight.
inline Code parity_code(std::size_t n) {
  if (n < 1) throw DomainError("parity_code needs n >= 1");
  if (n > 24) throw GuardError("parity_code is materialized only for n <= 24");
  std::vector<Word> words;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
    if (std::popcount(i) % 2 == 0) words.push_back(Word::from_index(i, n, 2));
  return Code(n, 2, std::move(words));
}

/// Words with at least t + r copies of the distinguished symbol among the
/// first t + 2r coordinates. The distinguished symbol is 0.
inline Code ak_anticode(std::size_t n, unsigned q, std::size_t t, std::size_t r) {
  if (q < 2) throw DomainError("ak_anticode needs q >= 2");
  if (t + 2 * r > n) throw DomainError("ak_anticode needs t + 2r <= n");
  const Code cube = full_cube(n, q);
  std::vector<Word> words;
  for (const Word& w : cube) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < t + 2 * r; ++i) hits += w[i] == 0;
    if (hits >= t + r) words.push_back(w);
  }
  return Code(n, q, std::move(words));
}

/// Smallest size counted as large: ceil((n + l + 1) / 2). Two such sets meet
/// in at least 2s - n > l elements.
inline std::size_t large_threshold(std::size_t n, std::size_t l) { return (n + l + 2) / 2; }

/// All subsets of [n] of size < l or >= large_threshold(n, l). With
/// `augment`, also the sets of size (n + l - 1)/2 containing element 1 when
/// n + l is odd.
inline SetFamily large_small_family(std::size_t n, std::size_t l, bool augment = false) {
  if (!(l >= 1 && l < n)) throw DomainError("large_small_family needs 1 <= l < n");
  if (n > 24) throw GuardError("large_small_family is materialized only for n <= 24");
  const std::size_t large = large_threshold(n, l);
  const bool odd = (n + l) % 2 == 1;
  std::vector<std::uint64_t> sets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto s = static_cast<std::size_t>(std::popcount(m));
    if (s < l || s >= large || (augment && odd && 2 * s == n + l - 1 && (m & 1U)))
      sets.push_back(m);
  }
  return SetFamily(n, std::move(sets));
}

/// A1: permutations mapping [n/2] onto itself; A2: permutations mapping
/// [n/2] onto [n/2+1, n]. Every cross pair is at distance n.
inline std::pair<PermFamily, PermFamily> perm_block_families(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw DomainError("perm_block_families needs a positive even n");
  if (n > 10) throw GuardError("perm_block_families is materialized only for n <= 10");
  const std::size_t h = n / 2;
  std::vector<Word> a1, a2;
  for (const Word& p : all_permutations(n)) {
    bool low = true, high = true;
    for (std::size_t i = 0; i < h; ++i) {
      low = low && p[i] < h;
      high = high && p[i] >= h;
    }
    if (low) a1.push_back(p);
    if (high) a2.push_back(p);
  }
  return {PermFamily(n, std::move(a1)), PermFamily(n, std::move(a2))};
}

/// Permutations of [n] fixing every point outside [d-1]; all distances are
/// at most d-1, so d is avoided. Size (d-1)!.
inline PermFamily perm_avoiding_construction(std::size_t n, std::size_t d) {
  if (!(d >= 2 && d <= n)) throw DomainError("perm_avoiding_construction needs 2 <= d <= n");
  if (d > 11) throw GuardError("perm_avoiding_construction is materialized only for d <= 11");
  std::vector<Symbol> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Symbol>(i);
  std::vector<Word> out;
  do {
    out.emplace_back(s, static_cast<unsigned>(n));
  } while (std::next_permutation(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d - 1)));
  return PermFamily(n, std::move(out));
}

}  // namespace forbid

#endif  // FORBID_CONSTRUCTIONS_HPP
