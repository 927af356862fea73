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

// Dependent random choice on the bipartite view of a code.
//
// A code C in [q]^n and a two-block partition V1 | V2 give the bipartite
// graph with left side [q]^V1, right side [q]^V2 and an edge xy whenever
// x o y lies in C. Vertices are identified with their lexicographic rank.

#ifndef FORBID_DRC_HPP
#define FORBID_DRC_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "forbid/errors.hpp"
#include "forbid/hamming.hpp"
#include "forbid/numeric.hpp"
#include "forbid/rng.hpp"

namespace forbid {

class BipartiteCodeGraph {
 public:
  BipartiteCodeGraph(CoordinatePartition partition, unsigned q)
      : partition_(std::move(partition)), q_(q) {
    if (partition_.block_count() != 2) throw DimensionError("bipartite view needs exactly 2 blocks");
    const BigInt m = ipow(q, partition_.block(0).size());
    const BigInt n = ipow(q, partition_.block(1).size());
    if (m > kMaxSide || n > kMaxSide) throw GuardError("bipartite side larger than 2^24 vertices");
    M_ = m.convert_to<std::uint64_t>();
    N_ = n.convert_to<std::uint64_t>();
    adj_.assign(M_, {});
  }

  static constexpr std::uint64_t kMaxSide = std::uint64_t{1} << 24;

  const CoordinatePartition& partition() const noexcept { return partition_; }
  unsigned alphabet() const noexcept { return q_; }
  std::uint64_t left_size() const noexcept { return M_; }
  std::uint64_t right_size() const noexcept { return N_; }
  std::uint64_t edge_count() const noexcept { return edges_; }

  /// |E| / (M N).
  Rational alpha() const { return Rational(BigInt(edges_), BigInt(M_) * N_); }

  Word left_word(std::uint64_t x) const { return Word::from_index(x, partition_.block(0).size(), q_); }
  Word right_word(std::uint64_t y) const { return Word::from_index(y, partition_.block(1).size(), q_); }

  /// Sorted right neighbours of left vertex x.
  const std::vector<std::uint64_t>& neighbors(std::uint64_t x) const {
    check_left(x);
    return adj_[x];
  }

  std::uint64_t degree(std::uint64_t x) const { return neighbors(x).size(); }

  bool has_edge(std::uint64_t x, std::uint64_t y) const {
    const auto& a = neighbors(x);
    return std::binary_search(a.begin(), a.end(), y);
  }

  /// The codeword x o y.
  Word join(std::uint64_t x, std::uint64_t y) const {
    return concat({left_word(x), right_word(y)}, partition_);
  }

  void add_edge(std::uint64_t x, std::uint64_t y) {
    check_left(x);
    if (y >= N_) throw DomainError("right vertex out of range");
    auto& a = adj_[x];
    auto it = std::lower_bound(a.begin(), a.end(), y);
    if (it != a.end() && *it == y) return;
    a.insert(it, y);
    ++edges_;
  }

  void check_left(std::uint64_t x) const {
    if (x >= M_) throw DomainError("left vertex out of range");
  }

 private:
  CoordinatePartition partition_;
  unsigned q_;
  std::uint64_t M_ = 0;
  std::uint64_t N_ = 0;
  std::uint64_t edges_ = 0;
  std::vector<std::vector<std::uint64_t>> adj_;
};

inline BipartiteCodeGraph build_bipartite(const Code& code, const CoordinatePartition& partition) {
  if (partition.length() != code.length())
    throw DimensionError("partition covers " + std::to_string(partition.length()) +
                         " coordinates, code has length " + std::to_string(code.length()));
  BipartiteCodeGraph g(partition, code.alphabet());
  for (const Word& w : code) g.add_edge(restrict_to(w, partition, 0).index(), restrict_to(w, partition, 1).index());
  return g;
}

/// N(x1) ∩ N(x2), sorted.
inline std::vector<std::uint64_t> common_neighbors(const BipartiteCodeGraph& g, std::uint64_t x1,
                                                   std::uint64_t x2) {
  const auto& a = g.neighbors(x1);
  const auto& b = g.neighbors(x2);
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::uint64_t codegree(const BipartiteCodeGraph& g, std::uint64_t x1, std::uint64_t x2) {
  const auto& a = g.neighbors(x1);
  const auto& b = g.neighbors(x2);
  std::uint64_t c = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

/// A pair is bad when its codegree is below alpha M^(-1/t) N, tested
/// exactly as codeg^t M < alpha^t N^t.
class BadPairTest {
 public:
  BadPairTest(const BipartiteCodeGraph& g, unsigned t)
      : g_(&g), t_(t), rhs_(rpow(g.alpha(), t) * Rational(ipow(g.right_size(), t))) {}

  bool operator()(std::uint64_t x1, std::uint64_t x2) const {
    return Rational(ipow(BigInt(codegree(*g_, x1, x2)), t_) * g_->left_size()) < rhs_;
  }

 private:
  const BipartiteCodeGraph* g_;
  unsigned t_;
  Rational rhs_;
};

inline bool is_bad_pair(const BipartiteCodeGraph& g, std::uint64_t x1, std::uint64_t x2, unsigned t) {
  return BadPairTest(g, t)(x1, x2);
}

struct DrcOutcome {
  std::vector<std::uint64_t> selected;  // X', ascending left vertices
  std::vector<std::uint64_t> sample;    // T in draw order, with repeats
  unsigned t = 1;
  Rational size_guarantee;              // alpha^t M / 2
  Real codegree_guarantee;              // alpha M^(-1/t) N
  std::uint64_t retries_used = 0;       // attempts made, >= 1
  bool success = false;
};

/// |X'| >= ceil(alpha^t M / 2) and every pair of X' has codegree at least
/// alpha M^(-1/t) N, both checked exactly.
inline bool satisfies_guarantees(const BipartiteCodeGraph& g, const DrcOutcome& out) {
  if (BigInt(out.selected.size()) < ceil_of(out.size_guarantee)) return false;
  const BadPairTest bad(g, out.t);
  for (std::size_t i = 0; i < out.selected.size(); ++i)
    for (std::size_t j = i + 1; j < out.selected.size(); ++j)
      if (bad(out.selected[i], out.selected[j])) return false;
  return true;
}

namespace detail {

inline bool contains_all(const std::vector<std::uint64_t>& sorted, const std::vector<std::uint64_t>& t) {
  return std::all_of(t.begin(), t.end(),
                     [&](std::uint64_t y) { return std::binary_search(sorted.begin(), sorted.end(), y); });
}

// X' from S: pairs in lexicographic order, the larger endpoint of each bad
// pair is removed while both endpoints survive.
inline std::vector<std::uint64_t> prune_bad_pairs(const BipartiteCodeGraph& g,
                                                  const std::vector<std::uint64_t>& S, unsigned t) {
  const BadPairTest bad(g, t);
  std::vector<bool> alive(S.size(), true);
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (alive[i] && alive[j] && bad(S[i], S[j])) alive[j] = false;
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (alive[i]) out.push_back(S[i]);
  return out;
}

}  // namespace detail

/// Draws T (t right vertices with replacement), forms S = {x : T ⊆ N(x)},
/// deletes one endpoint of every bad pair and repeats until
/// |X'| >= ceil(alpha^t M / 2) or `max_retries` attempts are spent. On
/// failure the largest attempt is returned with success = false.
inline DrcOutcome drc_sample(const BipartiteCodeGraph& g, unsigned t, std::uint64_t seed,
                             std::uint64_t max_retries = 100) {
  if (t < 1) throw DomainError("drc_sample needs t >= 1");
  if (g.right_size() == 0) throw DomainError("drc_sample needs a nonempty right side");
  const Rational alpha = g.alpha();
  DrcOutcome best;
  best.t = t;
  best.size_guarantee = rpow(alpha, t) * g.left_size() / 2;
  best.codegree_guarantee = to_real(alpha) *
                            boost::multiprecision::pow(Real(g.left_size()), Real(-1) / Real(t)) *
                            Real(g.right_size());
  const BigInt need = ceil_of(best.size_guarantee);
  SplitMix64 rng(seed);
  const std::uint64_t attempts = std::max<std::uint64_t>(max_retries, 1);
  bool have = false;
  for (std::uint64_t a = 1; a <= attempts; ++a) {
    std::vector<std::uint64_t> T(t);
    for (auto& y : T) y = rng.below(g.right_size());
    std::vector<std::uint64_t> S;
    for (std::uint64_t x = 0; x < g.left_size(); ++x)
      if (g.degree(x) != 0 && detail::contains_all(g.neighbors(x), T)) S.push_back(x);
    std::vector<std::uint64_t> X = detail::prune_bad_pairs(g, S, t);
    const bool ok = BigInt(X.size()) >= need;
    if (!have || X.size() > best.selected.size() || ok) {
      best.selected = std::move(X);
      best.sample = std::move(T);
      have = true;
    }
    best.retries_used = a;
    if (ok) {
      best.success = true;
      break;
    }
  }
  return best;
}

inline constexpr std::uint64_t kDrcEnumerationLimit = 10'000'000;

struct DrcExpectation {
  Rational expected_S;            // E[|S|]
  Rational expected_S_minus_Z;    // E[|S| - Z]
};

/// Exact E[|S|] and E[|S| - Z] by enumerating all N^t ordered samples.
/// Each worker sums integer counts over a contiguous range of sample
/// indices, so the result does not depend on `threads`.
inline DrcExpectation drc_expectation_exact(const BipartiteCodeGraph& g, unsigned t, unsigned threads = 1) {
  if (t < 1) throw DomainError("drc_expectation_exact needs t >= 1");
  const BigInt total = ipow(g.right_size(), t);
  if (total > kDrcEnumerationLimit) throw GuardError("N^t exceeds the enumeration guard of 10^7");
  if (total == 0) throw DomainError("drc_expectation_exact needs a nonempty right side");
  const std::uint64_t count = total.convert_to<std::uint64_t>();
  const std::uint64_t M = g.left_size();
  const std::uint64_t N = g.right_size();

  std::vector<std::vector<bool>> adj(M, std::vector<bool>(N, false));
  for (std::uint64_t x = 0; x < M; ++x)
    for (std::uint64_t y : g.neighbors(x)) adj[x][y] = true;
  const BadPairTest is_bad(g, t);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> bad;
  for (std::uint64_t a = 0; a < M; ++a)
    for (std::uint64_t b = a + 1; b < M; ++b)
      if (is_bad(a, b)) bad.emplace_back(a, b);

  auto range_sum = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& sum_s, std::uint64_t& sum_z) {
    std::vector<std::uint64_t> T(t);
    std::vector<bool> in_s(M);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t v = idx;
      for (unsigned i = 0; i < t; ++i) {
        T[i] = v % N;
        v /= N;
      }
      std::uint64_t s = 0;
      for (std::uint64_t x = 0; x < M; ++x) {
        bool all = true;
        for (std::uint64_t y : T) all = all && adj[x][y];
        in_s[x] = all;
        s += all;
      }
      std::uint64_t z = 0;
      for (auto [a, b] : bad) z += in_s[a] && in_s[b];
      sum_s += s;
      sum_z += z;
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(count, 64))));
  std::vector<std::uint64_t> s(workers, 0), z(workers, 0);
  if (workers == 1) {
    range_sum(0, count, s[0], z[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(range_sum, count * w / workers, count * (w + 1) / workers, std::ref(s[w]), std::ref(z[w]));
    for (auto& th : pool) th.join();
  }
  BigInt sum_s = 0, sum_z = 0;
  for (unsigned w = 0; w < workers; ++w) {
    sum_s += s[w];
    sum_z += z[w];
  }
  return {Rational(sum_s, total), Rational(sum_s - sum_z, total)};
}

}  // namespace forbid

#endif  // FORBID_DRC_HPP
