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

// Exact oracles: extremal families by independent-set search, pair counting
// and sunflower detection.

#ifndef FORBID_SEARCH_HPP
#define FORBID_SEARCH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "forbid/clique.hpp"
#include "forbid/errors.hpp"
#include "forbid/hamming.hpp"
#include "forbid/numeric.hpp"

namespace forbid {

enum class ProofStatus { optimal, timeout_lower_bound };

inline std::string to_string(ProofStatus s) {
  return s == ProofStatus::optimal ? "optimal" : "timeout_lower_bound";
}

template <class Witness>
struct SearchResult {
  std::size_t optimum = 0;
  Witness witness;
  std::uint64_t nodes = 0;
  ProofStatus status = ProofStatus::optimal;
};

struct SearchOptions {
  SearchBudget budget;
  unsigned threads = 1;
  /// Pin the first object (all-zeros word, identity, {1..k}) into the
  /// solution. Sound only because every instance below is vertex-transitive.
  bool symmetry = false;
};

namespace detail {

inline IndependentSetOptions to_mis_options(const SearchOptions& opt) {
  IndependentSetOptions o;
  o.budget = opt.budget;
  o.threads = opt.threads;
  if (opt.symmetry) o.fixed_vertex = 0;
  return o;
}

inline void check_vertex_budget(const BigInt& count, const SearchBudget& b) {
  if (count > b.max_vertices)
    throw GuardError("instance has " + count.str() + " objects, above the vertex budget of " +
                     std::to_string(b.max_vertices));
}

template <class T, class Pred>
std::pair<std::vector<std::size_t>, IndependentSetResult> solve(const std::vector<T>& objects,
                                                               Pred conflict,
                                                               const SearchOptions& opt) {
  const ConflictGraph g = ConflictGraph::build(objects, conflict);
  IndependentSetResult r = max_independent_set(g, to_mis_options(opt));
  if (!g.is_independent(r.vertices)) throw Error("internal: search returned a dependent set");
  return {r.vertices, r};
}

inline std::vector<std::uint64_t> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    out.push_back(s);
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2U) / c) | r;
    if (limit != 0 && s >= limit) break;
  }
  return out;
}

inline std::vector<Word> cube_words(std::size_t n, unsigned q) { return full_cube(n, q).words(); }

template <class W>
ProofStatus status_of(const IndependentSetResult& r) {
  return r.optimal ? ProofStatus::optimal : ProofStatus::timeout_lower_bound;
}

}  // namespace detail

/// Largest l-avoiding family of k-subsets of [n].
inline SearchResult<KSetFamily> max_avoiding_family(std::size_t n, std::size_t k, std::size_t l,
                                                    const SearchOptions& opt = {}) {
  if (!(l <= k && k <= n)) throw DomainError("max_avoiding_family needs l <= k <= n");
  if (n > 64) throw DomainError("ground set larger than 64");
  detail::check_vertex_budget(binomial(n, k), opt.budget);
  const auto sets = detail::k_subsets(n, k);
  auto [chosen, r] = detail::solve(
      sets, [l](std::uint64_t a, std::uint64_t b) { return static_cast<std::size_t>(std::popcount(a & b)) == l; },
      opt);
  std::vector<std::uint64_t> w;
  for (std::size_t i : chosen) w.push_back(sets[i]);
  SearchResult<KSetFamily> out{chosen.size(), KSetFamily(n, k, std::move(w)), r.nodes,
                               detail::status_of<KSetFamily>(r)};
  if (!is_l_avoiding(out.witness, l)) throw Error("internal: witness is not l-avoiding");
  return out;
}

/// Largest code in [q]^n realizing none of the `forbidden` distances.
inline SearchResult<Code> max_code_avoiding(std::size_t n, unsigned q,
                                            const std::set<std::size_t>& forbidden,
                                            const SearchOptions& opt = {}) {
  detail::check_vertex_budget(ipow(q, n), opt.budget);
  const auto words = detail::cube_words(n, q);
  auto [chosen, r] = detail::solve(
      words, [&](const Word& a, const Word& b) { return forbidden.count(hamming_distance(a, b)) != 0; },
      opt);
  std::vector<Word> w;
  for (std::size_t i : chosen) w.push_back(words[i]);
  SearchResult<Code> out{chosen.size(), Code(n, q, std::move(w)), r.nodes, detail::status_of<Code>(r)};
  const DistanceSet ds = distance_set(out.witness);
  for (std::size_t d : ds.values())
    if (forbidden.count(d)) throw Error("internal: witness realizes a forbidden distance");
  return out;
}

/// Largest S in S_n with d not in d(S).
inline SearchResult<PermFamily> max_perm_family_avoiding(std::size_t n, std::size_t d,
                                                         const SearchOptions& opt = {}) {
  if (n < 2) throw DomainError("permutation degree must be at least 2");
  detail::check_vertex_budget(factorial(n), opt.budget);
  const auto perms = all_permutations(n);
  auto [chosen, r] = detail::solve(
      perms, [d](const Word& a, const Word& b) { return hamming_distance(a, b) == d; }, opt);
  std::vector<Word> w;
  for (std::size_t i : chosen) w.push_back(perms[i]);
  SearchResult<PermFamily> out{chosen.size(), PermFamily(n, std::move(w)), r.nodes,
                               detail::status_of<PermFamily>(r)};
  if (perm_distance_set(out.witness).contains(d)) throw Error("internal: witness realizes d");
  return out;
}

/// Largest code in [q]^n of diameter at most n - t.
inline SearchResult<Code> max_code_with_diameter(std::size_t n, unsigned q, std::size_t t,
                                                 const SearchOptions& opt = {}) {
  if (t > n) throw DomainError("max_code_with_diameter needs t <= n");
  detail::check_vertex_budget(ipow(q, n), opt.budget);
  const auto words = detail::cube_words(n, q);
  const std::size_t diameter = n - t;
  auto [chosen, r] = detail::solve(
      words, [diameter](const Word& a, const Word& b) { return hamming_distance(a, b) > diameter; }, opt);
  std::vector<Word> w;
  for (std::size_t i : chosen) w.push_back(words[i]);
  SearchResult<Code> out{chosen.size(), Code(n, q, std::move(w)), r.nodes, detail::status_of<Code>(r)};
  if (distance_set(out.witness).max() > diameter) throw Error("internal: witness exceeds the diameter");
  return out;
}

/// Unordered pairs {x, y} of the code at Hamming distance exactly d.
inline std::uint64_t count_pairs_at_distance(const Code& code, std::size_t d) {
  if (d > code.length()) return 0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) count += hamming_distance(code[i], code[j]) == d;
  return count;
}

/// First pair (in lexicographic pair order) at distance d.
inline std::optional<std::pair<Word, Word>> find_pair_at_distance(const Code& code, std::size_t d) {
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (hamming_distance(code[i], code[j]) == d) return std::make_pair(code[i], code[j]);
  return std::nullopt;
}

enum class SunflowerKind { weak, strong };

struct SunflowerWitness {
  std::vector<Word> petals;
  SunflowerKind kind = SunflowerKind::weak;
  std::size_t agreement = 0;                 // D, the common |Agree|
  std::vector<std::size_t> agreement_set;    // S (strong only), 0-based
};

/// |Agree(v_i, v_j)| = D for all distinct i, j.
inline bool is_weak_sunflower(const std::vector<Word>& petals, std::size_t D) {
  for (std::size_t i = 0; i < petals.size(); ++i)
    for (std::size_t j = i + 1; j < petals.size(); ++j) {
      if (petals[i] == petals[j]) return false;
      if (agree_set(petals[i], petals[j]).size() != D) return false;
    }
  return true;
}

/// Agree(v_i, v_j) = S for all distinct i, j.
inline bool is_strong_sunflower(const std::vector<Word>& petals, const std::vector<std::size_t>& S) {
  for (std::size_t i = 0; i < petals.size(); ++i)
    for (std::size_t j = i + 1; j < petals.size(); ++j) {
      if (petals[i] == petals[j]) return false;
      if (agree_set(petals[i], petals[j]) != S) return false;
    }
  return true;
}

inline bool verify(const SunflowerWitness& w) {
  return w.kind == SunflowerKind::weak ? is_weak_sunflower(w.petals, w.agreement)
                                       : is_strong_sunflower(w.petals, w.agreement_set);
}

namespace detail {

// k-clique in the graph on `code` whose edges are the pairs accepted by
// `edge`, restricted to vertices of degree >= k-1.
template <class Edge>
std::optional<std::vector<Word>> find_k_clique(const Code& code, std::size_t k, Edge edge) {
  std::vector<std::size_t> deg(code.size(), 0);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (edge(code[i], code[j])) {
        ++deg[i];
        ++deg[j];
      }
  std::vector<Word> candidates;
  for (std::size_t i = 0; i < code.size(); ++i)
    if (deg[i] + 1 >= k) candidates.push_back(code[i]);
  if (candidates.size() < k) return std::nullopt;
  const ConflictGraph g =
      ConflictGraph::build(candidates, [&](const Word& a, const Word& b) { return !edge(a, b); });
  IndependentSetOptions opt;
  opt.target = k;
  const IndependentSetResult r = max_independent_set(g, opt);
  if (r.vertices.size() < k) return std::nullopt;
  std::vector<Word> petals;
  for (std::size_t i = 0; i < k; ++i) petals.push_back(candidates[r.vertices[i]]);
  return petals;
}

}  // namespace detail

/// First weak k-sunflower, scanning the agreement value D upwards.
inline std::optional<SunflowerWitness> find_weak_sunflower(const Code& code, std::size_t k) {
  if (k < 2) throw DomainError("a sunflower needs at least 2 petals");
  for (std::size_t D = 0; D < code.length(); ++D) {
    auto petals = detail::find_k_clique(
        code, k, [D](const Word& a, const Word& b) { return a.size() - hamming_distance(a, b) == D; });
    if (petals) {
      SunflowerWitness w{std::move(*petals), SunflowerKind::weak, D, {}};
      if (!verify(w)) throw Error("internal: weak sunflower failed verification");
      return w;
    }
  }
  return std::nullopt;
}

/// First strong k-sunflower, scanning the kernel S in increasing mask order.
inline std::optional<SunflowerWitness> find_strong_sunflower(const Code& code, std::size_t k) {
  if (k < 2) throw DomainError("a sunflower needs at least 2 petals");
  if (code.length() > 64) throw DomainError("find_strong_sunflower needs n <= 64");
  std::set<std::uint64_t> kernels;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) kernels.insert(agree_mask(code[i], code[j]));
  for (std::uint64_t S : kernels) {
    auto petals = detail::find_k_clique(
        code, k, [S](const Word& a, const Word& b) { return agree_mask(a, b) == S; });
    if (petals) {
      std::vector<std::size_t> set;
      for (std::size_t i = 0; i < code.length(); ++i)
        if ((S >> i) & 1U) set.push_back(i);
      SunflowerWitness w{std::move(*petals), SunflowerKind::strong, set.size(), std::move(set)};
      if (!verify(w)) throw Error("internal: strong sunflower failed verification");
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace forbid

#endif  // FORBID_SEARCH_HPP
