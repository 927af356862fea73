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


// Shared generators and brute-force oracles for the test suites. Everything
// here is deliberately naive so that it can be trusted independently of the
// library code under test.

#ifndef FORBID_TESTS_ORACLES_HPP
#define FORBID_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "forbid/forbid.hpp"

namespace forbid::testing {

inline std::uint64_t cube_size(std::size_t n, unsigned q) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= q;
  return v;
}

inline Word random_word(std::size_t n, unsigned q, SplitMix64& rng) {
  std::vector<Symbol> s(n);
  for (auto& c : s) c = static_cast<Symbol>(rng.below(q));
  return Word(std::move(s), q);
}

/// `size` distinct words drawn uniformly without replacement.
inline Code random_code(std::size_t n, unsigned q, std::size_t size, SplitMix64& rng) {
  const std::uint64_t total = cube_size(n, q);
  size = static_cast<std::size_t>(std::min<std::uint64_t>(size, total));
  std::vector<std::uint64_t> pick;
  while (pick.size() < size) {
    const std::uint64_t i = rng.below(total);
    if (std::find(pick.begin(), pick.end(), i) == pick.end()) pick.push_back(i);
  }
  std::vector<Word> words;
  for (std::uint64_t i : pick) words.push_back(Word::from_index(i, n, q));
  return Code(n, q, std::move(words));
}

inline std::size_t naive_distance(const Word& x, const Word& y) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

/// Largest subset of `items` (up to 20) in which every pair passes `ok`,
/// by exhaustive subset enumeration.
template <typename T>
std::size_t brute_max_subset(const std::vector<T>& items,
                             const std::function<bool(const T&, const T&)>& ok) {
  const std::size_t m = items.size();
  std::vector<std::uint32_t> bad(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && !ok(items[i], items[j])) bad[i] |= std::uint32_t{1} << j;
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool fine = true;
    for (std::size_t i = 0; i < m && fine; ++i)
      if ((s >> i & 1U) && (bad[i] & s)) fine = false;
    if (fine) best = size;
  }
  return best;
}

/// Number of unordered pairs at distance exactly d.
inline std::uint64_t naive_pairs(const Code& c, std::size_t d) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) n += naive_distance(c[i], c[j]) == d;
  return n;
}

}  // namespace forbid::testing

#endif  // FORBID_TESTS_ORACLES_HPP
