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


#include <gtest/gtest.h>

#include "oracles.hpp"

namespace forbid {
namespace {

// Small random bipartite code graphs with M, N <= 5.
struct Instance {
  Code code;
  CoordinatePartition partition;
};

Instance random_instance(SplitMix64& rng) {
  if (rng.below(3) == 0) {
    const Code c = testing::random_code(3, 2, rng.below(9), rng);
    const bool left_big = rng.below(2) == 0;
    return {c, CoordinatePartition::contiguous({left_big ? 2U : 1U, left_big ? 1U : 2U})};
  }
  const unsigned q = 2 + static_cast<unsigned>(rng.below(4));
  const Code c = testing::random_code(2, q, rng.below(q * q + 1), rng);
  return {c, CoordinatePartition::contiguous({1, 1})};
}

// Independent oracle: adjacency matrix from the raw code, enumeration of all
// ordered samples, and the bad-pair rule evaluated from the matrix.
std::pair<Rational, Rational> oracle_expectation(const Code& code, const CoordinatePartition& p, unsigned t) {
  const unsigned q = code.alphabet();
  const std::uint64_t M = testing::cube_size(p.block(0).size(), q);
  const std::uint64_t N = testing::cube_size(p.block(1).size(), q);
  std::vector<std::vector<int>> adj(M, std::vector<int>(N, 0));
  for (const Word& w : code) {
    std::uint64_t x = 0, y = 0;
    for (std::size_t i : p.block(0)) x = x * q + w[i];
    for (std::size_t i : p.block(1)) y = y * q + w[i];
    adj[x][y] = 1;
  }
  const Rational alpha(BigInt(code.size()), BigInt(M * N));
  auto bad = [&](std::uint64_t a, std::uint64_t b) {
    BigInt cod = 0;
    for (std::uint64_t y = 0; y < N; ++y) cod += adj[a][y] * adj[b][y];
    // codeg < alpha M^(-1/t) N  <=>  codeg^t M < alpha^t N^t
    BigInt lhs = 1;
    for (unsigned i = 0; i < t; ++i) lhs *= cod;
    Rational rhs = 1;
    for (unsigned i = 0; i < t; ++i) rhs *= alpha * N;
    return Rational(lhs * M) < rhs;
  };
  std::uint64_t total = 1;
  for (unsigned i = 0; i < t; ++i) total *= N;
  BigInt sum_s = 0, sum_z = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> T;
    for (std::uint64_t v = idx, i = 0; i < t; ++i, v /= N) T.push_back(v % N);
    std::vector<bool> in(M, true);
    for (std::uint64_t x = 0; x < M; ++x)
      for (std::uint64_t y : T) in[x] = in[x] && adj[x][y];
    for (std::uint64_t x = 0; x < M; ++x) sum_s += in[x] ? 1 : 0;
    for (std::uint64_t a = 0; a < M; ++a)
      for (std::uint64_t b = a + 1; b < M; ++b) sum_z += (in[a] && in[b] && bad(a, b)) ? 1 : 0;
  }
  return {Rational(sum_s, BigInt(total)), Rational(sum_s - sum_z, BigInt(total))};
}

TEST(Bipartite, Examples) {
  const auto split = CoordinatePartition::contiguous({1, 1});
  const auto full = build_bipartite(full_cube(2, 2), split);
  EXPECT_EQ(full.alpha(), 1);
  EXPECT_EQ(full.edge_count(), 4U);
  const auto match = build_bipartite(parity_code(2), split);
  EXPECT_EQ(match.alpha(), Rational(1, 2));
  EXPECT_TRUE(match.has_edge(0, 0));
  EXPECT_FALSE(match.has_edge(0, 1));
  const auto empty = build_bipartite(Code(2, 2), split);
  EXPECT_EQ(empty.alpha(), 0);
  EXPECT_THROW(build_bipartite(full_cube(3, 2), split), DimensionError);
}

TEST(Bipartite, EdgesAreCodeMembers) {
  SplitMix64 rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    const Instance in = random_instance(rng);
    const auto g = build_bipartite(in.code, in.partition);
    EXPECT_EQ(g.edge_count(), in.code.size());
    for (std::uint64_t x = 0; x < g.left_size(); ++x)
      for (std::uint64_t y = 0; y < g.right_size(); ++y)
        EXPECT_EQ(g.has_edge(x, y), in.code.contains(g.join(x, y)));
  }
}

TEST(CommonNeighbors, Examples) {
  const auto split = CoordinatePartition::contiguous({1, 1});
  const auto full = build_bipartite(full_cube(2, 3), split);
  EXPECT_EQ(common_neighbors(full, 0, 2), (std::vector<std::uint64_t>{0, 1, 2}));
  const auto match = build_bipartite(parity_code(2), split);
  EXPECT_TRUE(common_neighbors(match, 0, 1).empty());
  EXPECT_EQ(common_neighbors(match, 1, 1), match.neighbors(1));
  EXPECT_EQ(codegree(full, 1, 2), 3U);
  EXPECT_THROW(common_neighbors(match, 0, 2), DomainError);
}

TEST(DrcSample, Examples) {
  const auto split = CoordinatePartition::contiguous({1, 1});
  const auto full = build_bipartite(full_cube(2, 3), split);
  for (unsigned t = 1; t <= 3; ++t) {
    const auto out = drc_sample(full, t, 42);
    EXPECT_TRUE(out.success);
    EXPECT_EQ(out.selected, (std::vector<std::uint64_t>{0, 1, 2}));
    EXPECT_EQ(out.retries_used, 1U);
    EXPECT_EQ(out.sample.size(), t);
  }
  const auto empty = drc_sample(build_bipartite(Code(2, 2), split), 1, 3);
  EXPECT_TRUE(empty.success);
  EXPECT_TRUE(empty.selected.empty());
  EXPECT_EQ(empty.size_guarantee, 0);
  const auto match = build_bipartite(parity_code(2), split);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto out = drc_sample(match, 1, seed);
    EXPECT_TRUE(out.success);
    EXPECT_EQ(out.selected.size(), 1U);
    EXPECT_EQ(out.size_guarantee, Rational(1, 2));
  }
  EXPECT_THROW(drc_sample(match, 0, 1), DomainError);
}

TEST(DrcSample, OutcomesRespectGuaranteesAndAreDeterministic) {
  SplitMix64 rng(2);
  for (int rep = 0; rep < 300; ++rep) {
    const Instance in = random_instance(rng);
    const auto g = build_bipartite(in.code, in.partition);
    const unsigned t = 1 + static_cast<unsigned>(rng.below(3));
    const std::uint64_t seed = rng();
    const auto a = drc_sample(g, t, seed, 50);
    const auto b = drc_sample(g, t, seed, 50);
    EXPECT_EQ(a.selected, b.selected);
    EXPECT_EQ(a.sample, b.sample);
    EXPECT_EQ(a.retries_used, b.retries_used);
    EXPECT_EQ(a.size_guarantee, rpow(g.alpha(), t) * g.left_size() / 2);
    const BadPairTest bad(g, t);
    for (std::size_t i = 0; i < a.selected.size(); ++i)
      for (std::size_t j = i + 1; j < a.selected.size(); ++j) {
        EXPECT_FALSE(bad(a.selected[i], a.selected[j]));
        // The real-valued threshold agrees with the exact test.
        EXPECT_GE(Real(codegree(g, a.selected[i], a.selected[j])) + kFloatMargin, a.codegree_guarantee);
      }
    for (std::uint64_t x : a.selected)
      for (std::uint64_t y : a.sample) EXPECT_TRUE(g.has_edge(x, y));
    EXPECT_EQ(a.success, satisfies_guarantees(g, a));
  }
}

TEST(DrcExpectation, Examples) {
  const auto split = CoordinatePartition::contiguous({1, 1});
  const auto full = build_bipartite(full_cube(2, 4), split);
  for (unsigned t = 1; t <= 3; ++t) {
    const auto e = drc_expectation_exact(full, t);
    EXPECT_EQ(e.expected_S, 4);
    EXPECT_EQ(e.expected_S_minus_Z, 4);
  }
  const auto match = build_bipartite(parity_code(2), split);
  EXPECT_EQ(drc_expectation_exact(match, 1).expected_S, 1);
  // Left vertex 2 is isolated.
  const Code iso(2, 3, {Word({0, 0}, 3), Word({0, 1}, 3), Word({1, 2}, 3)});
  const auto g = build_bipartite(iso, split);
  EXPECT_EQ(g.degree(2), 0U);
  EXPECT_EQ(drc_expectation_exact(g, 2).expected_S, Rational(4, 9) + Rational(1, 9));
}

TEST(DrcExpectation, MatchesOracleAndClosedForm) {
  SplitMix64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const Instance in = random_instance(rng);
    const auto g = build_bipartite(in.code, in.partition);
    const unsigned t = 1 + static_cast<unsigned>(rng.below(3));
    const auto e = drc_expectation_exact(g, t, 1 + static_cast<unsigned>(rng.below(3)));
    const auto [s, sz] = oracle_expectation(in.code, in.partition, t);
    EXPECT_EQ(e.expected_S, s);
    EXPECT_EQ(e.expected_S_minus_Z, sz);
    Rational closed = 0;
    for (std::uint64_t x = 0; x < g.left_size(); ++x)
      closed += rpow(Rational(BigInt(g.degree(x)), BigInt(g.right_size())), t);
    EXPECT_EQ(e.expected_S, closed);
    const Rational at = rpow(g.alpha(), t) * g.left_size();
    EXPECT_GE(e.expected_S, at);
    EXPECT_GE(e.expected_S_minus_Z, at / 2);
  }
}

TEST(DrcExpectation, Guard) {
  const auto g = build_bipartite(full_cube(8, 2), CoordinatePartition::contiguous({1, 7}));
  EXPECT_THROW(drc_expectation_exact(g, 4), GuardError);
  EXPECT_NO_THROW(drc_expectation_exact(g, 3));
}

}  // namespace
}  // namespace forbid
