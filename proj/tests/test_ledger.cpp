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

#include <cmath>

#include "oracles.hpp"

namespace forbid {
namespace {

constexpr LedgerContext kAll[] = {LedgerContext::fr_sets,   LedgerContext::code_case1,
                                  LedgerContext::code_case2, LedgerContext::sunflower,
                                  LedgerContext::cross,      LedgerContext::supersat};

TEST(Ledger, BaseDeltasAreExact) {
  const auto L = constant_ledger(Rational(1, 4), LedgerContext::code_case1);
  EXPECT_EQ(L.rational("delta1"), Rational(1, 500));
  EXPECT_EQ(L.rational("delta2"), Rational(1, 500));
  for (int i = 1; i < 50; ++i) {
    const Rational eps(i, 100);
    const auto M = constant_ledger(eps, LedgerContext::code_case1);
    EXPECT_EQ(M.rational("delta1"), eps / 125);
    EXPECT_EQ(M.rational("delta2"), eps / 125);
  }
}

// Hand evaluation at eps = 1/4: delta_1(1/8) = 1/1000, t_1 = 4000,
// t_2 = 4 * 4000 * 1000 = 16e6, delta_3 = (1/1000) / (4 t_2).
TEST(Ledger, SmallDistanceChainByHand) {
  const auto L = constant_ledger(Rational(1, 4), LedgerContext::code_case1);
  EXPECT_EQ(L.rational("delta1_half"), Rational(1, 1000));
  EXPECT_EQ(L.integer("t1"), 4000);
  EXPECT_EQ(L.integer("t2"), 16000000);
  EXPECT_EQ(L.rational("delta3"), Rational(1, 1000) / Rational(4 * 16000000));
}

TEST(Ledger, LargeDistanceChainByHand) {
  const Rational eps(1, 4);
  const auto L = constant_ledger(eps, LedgerContext::code_case2);
  const Rational d3q(1, 64000000000LL);
  EXPECT_EQ(L.rational("delta3_quarter"), d3q);
  const BigInt t = ceil_of(Rational(2) / (eps * d3q));
  EXPECT_EQ(t, BigInt(512000000000LL));
  EXPECT_EQ(L.integer("t_case2"), t);
  EXPECT_EQ(L.rational("delta4"), (eps / 4 / 125) / Rational(8 * t));
  EXPECT_EQ(L.rational("delta"), std::min(L.rational("delta3"), L.rational("delta4")));
}

TEST(Ledger, DeltaPositiveOnGrid) {
  for (int i = 1; i < 100; ++i) {
    const Rational eps(i, 200);
    const auto L = constant_ledger(eps, LedgerContext::code_case2);
    EXPECT_GT(L.rational("delta"), 0);
    EXPECT_EQ(L.rational("delta"), std::min(L.rational("delta3"), L.rational("delta4")));
  }
}

TEST(Ledger, EveryEvaluatedEntryIsPositiveAndAnchored) {
  LedgerOptions opt;
  opt.petals = 4;
  opt.n = 1000;
  for (LedgerContext ctx : kAll)
    for (const Rational& eps : {Rational(1, 10), Rational(1, 4), Rational(49, 100)}) {
      const auto L = constant_ledger(eps, ctx, opt);
      for (const auto& e : L.entries()) {
        EXPECT_FALSE(e.anchor.empty()) << e.name;
        if (std::holds_alternative<std::monostate>(e.value)) continue;
        EXPECT_GT(L.real(e.name), 0) << to_string(ctx) << " " << e.name;
      }
      EXPECT_TRUE(std::holds_alternative<std::monostate>(L.at("n0").value));
    }
}

TEST(Ledger, RejectsOutOfRangeEps) {
  EXPECT_THROW(constant_ledger(Rational(0), LedgerContext::code_case1), DomainError);
  EXPECT_THROW(constant_ledger(Rational(1, 2), LedgerContext::code_case1), DomainError);
  LedgerOptions bad;
  bad.eta = Rational(1, 2);
  EXPECT_THROW(constant_ledger(Rational(1, 4), LedgerContext::supersat, bad), DomainError);
  EXPECT_THROW(constant_ledger(Rational(1, 4), LedgerContext::code_case1).at("gamma"), DomainError);
}

TEST(Ledger, SunflowerChainShrinks) {
  LedgerOptions opt;
  opt.petals = 4;
  const auto L = constant_ledger(Rational(1, 4), LedgerContext::sunflower, opt);
  const Rational d = L.rational("delta");
  EXPECT_EQ(L.rational("delta_sun[1]"), d);
  Rational prev = d;
  for (unsigned k = 2; k <= 4; ++k) {
    const std::string key = "[" + std::to_string(k) + "]";
    const BigInt t = ceil_of(Rational(2) / (Rational(k - 1) * prev));
    EXPECT_EQ(L.integer("t_sun" + key), t);
    const Rational dk = L.rational("delta_sun" + key);
    EXPECT_EQ(dk, d / Rational(2 * k * t));
    EXPECT_LT(dk, prev);
    prev = dk;
  }
}

TEST(Ledger, CrossGammaIsTheMinimum) {
  const Rational eps(1, 4);
  const auto L = constant_ledger(eps, LedgerContext::cross);
  const Rational dh = constant_ledger(eps / 2, LedgerContext::code_case2).rational("delta");
  EXPECT_EQ(L.rational("delta_half"), dh);
  EXPECT_EQ(L.rational("delta_cross"), dh / 2);
  const double d = to_double(dh);
  const double g = std::min(0.125, d / (16 * std::log2(1 / d)));
  EXPECT_NEAR(L.real("gamma").convert_to<double>() / g, 1.0, 1e-12);
}

TEST(Ledger, SupersatConstants) {
  LedgerOptions opt;
  opt.eta = Rational(1, 4);
  opt.q = 3;
  opt.n = 10000;
  const auto L = constant_ledger(Rational(1, 4), LedgerContext::supersat, opt);
  const double alpha = 0.25 / (16 * std::log2(16 / 0.25));
  EXPECT_NEAR(L.real("alpha_ss").convert_to<double>(), alpha, 1e-15);
  EXPECT_EQ(L.integer("r"), 2);  // floor(3^(1/16)) = 1, clamped to 2
  EXPECT_EQ(L.integer("m"), BigInt(static_cast<long>(std::floor(alpha * 10000))));
  opt.q = 43046721;  // 3^16, so q^(1/16) = 3
  const auto big = constant_ledger(Rational(1, 4), LedgerContext::supersat, opt);
  EXPECT_EQ(big.integer("r"), 3);
}

TEST(Ledger, FrSetsRates) {
  const Rational eps(1, 4);
  const auto L = constant_ledger(eps, LedgerContext::fr_sets);
  const double c1 = std::pow(1.0 / (1.0 + 0.125), 0.125);
  EXPECT_NEAR(L.real("c1").convert_to<double>(), c1, 1e-14);
  const double rate = std::log2(1 / c1);
  const auto t1 = static_cast<long>(std::ceil(2 / rate));
  EXPECT_EQ(L.integer("t1"), t1);
  EXPECT_EQ(L.integer("t2"), static_cast<long>(std::ceil(4 * t1 / rate)));
  EXPECT_LT(L.real("c2_bound"), 1);
}

}  // namespace
}  // namespace forbid
