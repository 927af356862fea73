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

// The density arguments run as procedures on concrete codes:
//
//   * prime-split block decompositions for forbidden intersections and
//     forbidden distances,
//   * pair extraction through repeated dependent random choice,
//   * weak-sunflower extraction block by block,
//   * the cross-pair pigeonhole between two codes,
//   * the random capture experiment behind supersaturation.
//
// Where the asymptotic argument only asserts that a large set contains a
// pair at some distance, the procedures search the realized set exactly.

#ifndef FORBID_PIPELINES_HPP
#define FORBID_PIPELINES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "forbid/bounds.hpp"
#include "forbid/drc.hpp"
#include "forbid/errors.hpp"
#include "forbid/hamming.hpp"
#include "forbid/numeric.hpp"
#include "forbid/primes.hpp"
#include "forbid/rng.hpp"
#include "forbid/search.hpp"

namespace forbid {

// ---------------------------------------------------------------------------
// Decomposition plans

enum class PlanContext { fr_sets_odd, fr_sets_even, code_case1, code_case2 };

inline std::string to_string(PlanContext c) {
  switch (c) {
    case PlanContext::fr_sets_odd: return "FR_sets_odd";
    case PlanContext::fr_sets_even: return "FR_sets_even";
    case PlanContext::code_case1: return "code_case1";
    case PlanContext::code_case2: return "code_case2";
  }
  return "?";
}

/// One block of a plan. For set plans `value` is k_i and `l` is l_i; for
/// distance plans `value` is d_i (absent in the large-distance case, where
/// the split d = d' + (d - d') is found at run time).
struct PlanBlock {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> value;
  std::optional<std::uint64_t> l;
};

struct DecompositionPlan {
  PlanContext context = PlanContext::code_case1;
  std::uint64_t n = 0;
  std::uint64_t k_or_d = 0;
  std::optional<std::uint64_t> l;
  Rational eps;
  std::vector<PlanBlock> blocks;
  std::vector<std::uint64_t> primes;     // a_i, aligned with blocks
  std::vector<Rational> deviations;      // |a_i - target/parts|
  Rational tolerance;                    // allowed deviation
  // Large-distance case only.
  std::optional<Rational> residual;      // |29/40 n1 + 11/40 n - d|
  std::optional<std::pair<Rational, Rational>> d_prime_range;  // [(1-eps/4) n1, n1]
  std::optional<std::pair<Rational, Rational>> remainder_range;  // [n2/4, 11 n2/20]
  std::string citation;
};

class DecompositionInfeasible : public Error {
 public:
  DecompositionInfeasible(const std::string& what, std::optional<DecompositionPlan> best)
      : Error(what), best_(std::move(best)) {}
  const std::optional<DecompositionPlan>& best_attempt() const noexcept { return best_; }

 private:
  std::optional<DecompositionPlan> best_;
};

namespace detail {

// Near-equal parts of `total`, larger parts first.
inline std::vector<std::uint64_t> even_parts(std::uint64_t total, std::uint64_t parts) {
  std::vector<std::uint64_t> out(parts, total / parts);
  for (std::uint64_t i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

inline Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? Rational(a - b) : Rational(b - a); }

}  // namespace detail

/// Re-derives every arithmetic claim of a plan from its fields. Returns the
/// violated conditions; empty means the plan is valid.
inline std::vector<std::string> verify_plan(const DecompositionPlan& p) {
  std::vector<std::string> bad;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  std::uint64_t sum_n = 0;
  for (const auto& b : p.blocks) sum_n += b.n;
  need(sum_n == p.n, "block sizes sum to n");
  const Rational eps = p.eps;
  const auto parts = static_cast<std::uint64_t>(p.blocks.size());

  if (p.context == PlanContext::fr_sets_odd || p.context == PlanContext::fr_sets_even) {
    need(parts == (p.context == PlanContext::fr_sets_odd ? 3U : 4U), "block count matches parity context");
    need(p.primes.size() == parts, "one prime per block");
    if (!p.l) {
      bad.push_back("set plan carries l");
      return bad;
    }
    std::uint64_t sum_k = 0, sum_l = 0;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      const auto& b = p.blocks[i];
      if (!b.value || !b.l) {
        bad.push_back("block " + std::to_string(i + 1) + " carries k_i and l_i");
        continue;
      }
      const std::uint64_t k = *b.value, l = *b.l;
      sum_k += k;
      sum_l += l;
      need(k >= l && is_prime(k - l), "k_i - l_i is prime for block " + std::to_string(i + 1));
      if (i < p.primes.size()) need(k - l == p.primes[i], "k_i - l_i = a_i for block " + std::to_string(i + 1));
      need(detail::abs_diff(Rational(b.n), Rational(p.n, parts)) < 1, "|n_i - n/parts| < 1");
      need(detail::abs_diff(Rational(k), Rational(p.k_or_d, parts)) < 1, "|k_i - k/parts| < 1");
      if (i > 0) need(p.blocks[i - 1].n >= b.n, "n_1 >= n_2 >= ...");
      const Rational lo = Rational(std::max<std::int64_t>(0, 2 * std::int64_t(k) - std::int64_t(b.n))) + eps * b.n / 2;
      const Rational hi = Rational(k) - eps * b.n / 2;
      need(lo <= l && Rational(l) <= hi,
           "max(0, 2k_i - n_i) + eps n_i/2 <= l_i <= k_i - eps n_i/2 for block " + std::to_string(i + 1));
    }
    need(sum_k == p.k_or_d, "sum of k_i is k");
    need(sum_l == *p.l, "sum of l_i is l");
    for (std::size_t i = 0; i < p.primes.size(); ++i)
      need(detail::abs_diff(Rational(p.primes[i]), Rational(p.k_or_d - *p.l, parts)) <= p.tolerance,
           "|a_i - (k-l)/parts| <= eps n/8");
    need(p.tolerance == eps * p.n / 8, "tolerance is eps n/8");
  } else if (p.context == PlanContext::code_case1) {
    need(parts == 3, "three blocks");
    need(20 * p.k_or_d <= 11 * p.n, "d <= 11n/20");
    std::uint64_t sum_d = 0;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      const auto& b = p.blocks[i];
      if (!b.value) {
        bad.push_back("block " + std::to_string(i + 1) + " carries d_i");
        continue;
      }
      const std::uint64_t d = *b.value;
      sum_d += d;
      need(is_prime(d), "d_i is prime for block " + std::to_string(i + 1));
      need(detail::abs_diff(Rational(d), Rational(p.k_or_d, 3)) <= eps * p.n / 100, "|d_i - d/3| <= eps n/100");
      need(detail::abs_diff(Rational(b.n), Rational(p.n, 3)) <= 1, "|n_i - n/3| <= 1");
      if (i > 0) need(p.blocks[i - 1].n >= b.n, "n_1 >= n_2 >= n_3");
      need(eps * b.n / 2 <= d && Rational(d) <= Rational(3 * b.n, 5),
           "eps n_i/2 <= d_i <= 3n_i/5 for block " + std::to_string(i + 1));
    }
    need(sum_d == p.k_or_d, "sum of d_i is d");
    need(p.tolerance == eps * p.n / 100, "tolerance is eps n/100");
  } else {
    need(parts == 2, "two blocks");
    need(20 * p.k_or_d > 11 * p.n, "d > 11n/20");
    if (parts == 2) {
      const Rational n1(p.blocks[0].n), n2(p.blocks[1].n), n(p.n), d(p.k_or_d);
      const Rational res = detail::abs_diff(Rational(29, 40) * n1 + Rational(11, 40) * n, d);
      need(res <= 1, "|29/40 n1 + 11/40 n - d| <= 1");
      need(p.residual && *p.residual == res, "recorded residual");
      need(n / 4 <= n1 && n1 <= (1 - eps) * n, "n/4 <= n1 <= (1 - eps) n");
      const Rational dp_lo = (1 - eps / 4) * n1;
      // d - d' for d' in [(1-eps/4) n1, n1] stays inside [n2/4, 11 n2/20].
      need(d - n1 >= n2 / 4 && d - dp_lo <= Rational(11, 20) * n2, "d - d' lies in [n2/4, 11 n2/20]");
      need(p.d_prime_range && p.d_prime_range->first == dp_lo && p.d_prime_range->second == n1,
           "recorded range for d'");
      need(p.remainder_range && p.remainder_range->first == n2 / 4 &&
               p.remainder_range->second == Rational(11, 20) * n2,
           "recorded range for d - d'");
    }
  }
  return bad;
}

/// Block decomposition for l-avoiding k-sets: k - l as 3 primes (odd) or
/// 4 primes (even) of near-equal size, one per block.
inline DecompositionPlan fr_decompose(std::uint64_t n, std::uint64_t k, std::uint64_t l, const Rational& eps,
                                      std::optional<unsigned> parts_override = std::nullopt) {
  if (!(eps > 0 && eps < 1)) throw DomainError("fr_decompose needs 0 < eps < 1");
  if (!(l < k && k <= n)) throw DomainError("fr_decompose needs l < k <= n");
  const Rational lo = Rational(2 * k > n ? 2 * k - n : 0) + eps * n;
  if (!(lo <= l && Rational(l) <= Rational(k) - eps * n))
    throw DomainError("fr_decompose needs max(0, 2k-n) + eps n <= l <= k - eps n");
  const unsigned parts = parts_override.value_or((k - l) % 2 == 1 ? 3U : 4U);
  if (parts != 3 && parts != 4) throw DomainError("fr_decompose splits into 3 or 4 blocks");

  DecompositionPlan p;
  p.context = parts == 3 ? PlanContext::fr_sets_odd : PlanContext::fr_sets_even;
  p.n = n;
  p.k_or_d = k;
  p.l = l;
  p.eps = eps;
  p.tolerance = eps * n / 8;
  p.citation = "forbidden intersections: k - l = a_1 + ... + a_parts with every a_i prime";

  PrimeSplit split;
  try {
    split = split_into_primes(k - l, parts);
  } catch (const NoSplitError& e) {
    throw DecompositionInfeasible(std::string("no prime split: ") + e.what(), p);
  }
  const auto ns = detail::even_parts(n, parts);
  const auto ks = detail::even_parts(k, parts);
  std::vector<std::uint64_t> a(split.primes.rbegin(), split.primes.rend());  // largest first
  for (unsigned i = 0; i < parts; ++i) {
    p.blocks.push_back({ns[i], ks[i], ks[i] >= a[i] ? std::optional<std::uint64_t>(ks[i] - a[i]) : std::nullopt});
    p.primes.push_back(a[i]);
    p.deviations.push_back(detail::abs_diff(Rational(a[i]), Rational(k - l, parts)));
  }
  if (auto bad = verify_plan(p); !bad.empty())
    throw DecompositionInfeasible("plan violates: " + bad.front(), p);
  return p;
}

/// Block decomposition for a forbidden distance d. Small distances
/// (d <= 11n/20) split d into 3 near-equal primes; large distances pick n1
/// with |29/40 n1 + 11/40 n - d| <= 1 and split [n] = [n1] | [n1+1, n].
inline DecompositionPlan code_distance_decompose(std::uint64_t n, std::uint64_t d, const Rational& eps) {
  if (!(eps > 0 && eps < Rational(1, 2))) throw DomainError("code_distance_decompose needs 0 < eps < 1/2");
  if (!(eps * n < d && Rational(d) < (1 - eps) * n))
    throw DomainError("code_distance_decompose needs eps n < d < (1 - eps) n");
  DecompositionPlan p;
  p.n = n;
  p.k_or_d = d;
  p.eps = eps;
  if (20 * d <= 11 * n) {
    p.context = PlanContext::code_case1;
    p.tolerance = eps * n / 100;
    p.citation = "forbidden distance, small d: d = d_1 + d_2 + d_3 with every d_i prime";
    PrimeSplit split;
    try {
      split = split_into_primes(d, 3);
    } catch (const NoSplitError& e) {
      throw DecompositionInfeasible(std::string("no prime split: ") + e.what(), p);
    }
    const auto ns = detail::even_parts(n, 3);
    std::vector<std::uint64_t> a(split.primes.rbegin(), split.primes.rend());
    for (unsigned i = 0; i < 3; ++i) {
      p.blocks.push_back({ns[i], a[i], std::nullopt});
      p.primes.push_back(a[i]);
      p.deviations.push_back(detail::abs_diff(Rational(a[i]), Rational(d, 3)));
    }
  } else {
    p.context = PlanContext::code_case2;
    p.citation = "forbidden distance, large d: |29/40 n1 + 11/40 n - d| <= 1";
    std::uint64_t n1 = 1;
    Rational best = -1;
    for (std::uint64_t c = 1; c <= n; ++c) {
      const Rational r = detail::abs_diff(Rational(29, 40) * c + Rational(11, 40) * n, Rational(d));
      if (best < 0 || r < best) {
        best = r;
        n1 = c;
      }
    }
    const std::uint64_t n2 = n - n1;
    p.blocks.push_back({n1, std::nullopt, std::nullopt});
    p.blocks.push_back({n2, std::nullopt, std::nullopt});
    p.residual = best;
    p.d_prime_range = std::make_pair(Rational((1 - eps / 4) * n1), Rational(n1));
    p.remainder_range = std::make_pair(Rational(n2, 4), Rational(11 * n2, 20));
  }
  if (auto bad = verify_plan(p); !bad.empty())
    throw DecompositionInfeasible("plan violates: " + bad.front(), p);
  return p;
}

// ---------------------------------------------------------------------------
// Shared extraction machinery

struct DrcSummary {
  std::size_t level = 0;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  std::size_t selected = 0;
  unsigned t = 1;
  std::uint64_t retries = 0;
  bool success = false;
  Rational size_guarantee;
  Real codegree_guarantee;
};

struct ExtractOptions {
  unsigned t = 1;                        // DRC sample size
  std::uint64_t max_retries = 16;        // DRC attempts per level
  std::uint64_t max_pair_attempts = 200000;  // x, x' pairs tried over the whole run
  bool strict = false;                   // throw instead of falling back
  static constexpr std::size_t kMaxSummaries = 256;
};

namespace detail {

inline Word join_words(const Word& a, const Word& b) {
  std::vector<Symbol> s(a.symbols().begin(), a.symbols().end());
  s.insert(s.end(), b.symbols().begin(), b.symbols().end());
  return Word(std::move(s), a.alphabet());
}

struct Extractor {
  ExtractOptions opt;
  SplitMix64 rng;
  std::vector<DrcSummary> summaries;
  std::uint64_t pair_attempts = 0;
  std::uint64_t drc_calls = 0;

  bool exhausted() const { return pair_attempts >= opt.max_pair_attempts; }

  // Runs DRC on code = [lead] | [rest] and returns the words of X'.
  std::pair<BipartiteCodeGraph, std::vector<std::uint64_t>> select(const Code& code, std::size_t lead,
                                                                   std::size_t level) {
    const std::size_t rest = code.length() - lead;
    BipartiteCodeGraph g = build_bipartite(code, CoordinatePartition::contiguous({lead, rest}));
    const DrcOutcome o = drc_sample(g, opt.t, rng(), opt.max_retries);
    ++drc_calls;
    if (summaries.size() < ExtractOptions::kMaxSummaries)
      summaries.push_back({level, g.left_size(), g.right_size(), o.selected.size(), o.t, o.retries_used, o.success,
                           o.size_guarantee, o.codegree_guarantee});
    return {std::move(g), o.selected};
  }

  static Code right_code(const BipartiteCodeGraph& g, const std::vector<std::uint64_t>& ys) {
    std::vector<Word> w;
    w.reserve(ys.size());
    for (std::uint64_t y : ys) w.push_back(g.right_word(y));
    return Code(g.partition().block(1).size(), g.alphabet(), std::move(w));
  }

  // Pair (u, v) of `code` with d(u, v) = remaining, where the first block of
  // length lens[0] contributes targets[0] (or any feasible amount when
  // targets[0] is absent).
  std::optional<std::pair<Word, Word>> pair(const Code& code, std::span<const std::size_t> lens,
                                            std::span<const std::optional<std::size_t>> targets,
                                            std::size_t remaining, std::size_t level) {
    if (code.empty()) return std::nullopt;
    if (lens.size() == 1) {
      if (remaining == 0) return std::make_pair(code[0], code[0]);
      return find_pair_at_distance(code, remaining);
    }
    std::size_t rest_len = 0;
    for (std::size_t i = 1; i < lens.size(); ++i) rest_len += lens[i];
    std::vector<std::size_t> choices;
    if (targets[0]) {
      choices.push_back(*targets[0]);
    } else {
      const std::size_t hi = std::min(remaining, lens[0]);
      const std::size_t lo = remaining > rest_len ? remaining - rest_len : 0;
      for (std::size_t c = hi + 1; c-- > lo;) choices.push_back(c);
    }
    auto [g, xs] = select(code, lens[0], level);
    std::vector<Word> words;
    for (std::uint64_t x : xs) words.push_back(g.left_word(x));
    for (std::size_t dp : choices) {
      if (dp > remaining) continue;
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j) {
          if ((i == j) != (dp == 0)) continue;
          if (hamming_distance(words[i], words[j]) != dp) continue;
          if (exhausted()) return std::nullopt;
          ++pair_attempts;
          const Code b = right_code(g, common_neighbors(g, xs[i], xs[j]));
          auto sub = pair(b, lens.subspan(1), targets.subspan(1), remaining - dp, level + 1);
          if (sub) return std::make_pair(join_words(words[i], sub->first), join_words(words[j], sub->second));
        }
    }
    return std::nullopt;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Pair extraction

struct PairExtraction {
  std::optional<std::pair<Word, Word>> pair;
  std::string route;  // case1 | case2 | fallback | direct
  std::optional<DecompositionPlan> plan;
  std::string fallback_reason;
  std::vector<DrcSummary> drc;
  std::uint64_t drc_calls = 0;
};

/// Finds x, y in C with d_H(x, y) = d by following the block plan for
/// (n, d, eps): fixed prime targets per block for small d, a flexible split
/// d = d' + (d - d') over two blocks for large d. When no plan exists at
/// this n, the same procedure runs on the two-block split
/// [ceil(n/2)] | [floor(n/2)] (route "fallback") unless `opt.strict`.
inline PairExtraction extract_distance_pair(const Code& code, std::size_t d, const Rational& eps, std::uint64_t seed,
                                            const ExtractOptions& opt = {}) {
  PairExtraction out;
  const std::size_t n = code.length();
  if (d < 1 || d > n) {
    out.route = "direct";
    return out;
  }
  detail::Extractor ex{opt, SplitMix64(seed), {}, 0, 0};
  std::vector<std::size_t> lens;
  std::vector<std::optional<std::size_t>> targets;
  if (n < 2) {
    out.route = "direct";
    out.pair = find_pair_at_distance(code, d);
  } else {
    try {
      DecompositionPlan plan = code_distance_decompose(n, d, eps);
      for (const auto& b : plan.blocks) {
        lens.push_back(b.n);
        targets.push_back(b.value ? std::optional<std::size_t>(*b.value) : std::nullopt);
      }
      if (plan.context == PlanContext::code_case2) targets.back() = std::nullopt;
      out.route = plan.context == PlanContext::code_case1 ? "case1" : "case2";
      out.plan = std::move(plan);
    } catch (const Error& e) {
      if (opt.strict) throw;
      out.route = "fallback";
      out.fallback_reason = e.what();
      lens = {(n + 1) / 2, n / 2};
      targets = {std::nullopt, std::nullopt};
    }
    out.pair = ex.pair(code, lens, targets, d, 0);
  }
  out.drc = std::move(ex.summaries);
  out.drc_calls = ex.drc_calls;
  if (out.pair) {
    if (hamming_distance(out.pair->first, out.pair->second) != d || !code.contains(out.pair->first) ||
        !code.contains(out.pair->second))
      throw Error("internal: extracted pair failed verification");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weak sunflowers

struct SunflowerExtraction {
  std::optional<SunflowerWitness> witness;
  std::vector<std::size_t> block_sizes;  // V_1 absorbs the n mod k leftover coordinates
  std::vector<std::pair<Word, Word>> block_pairs;  // (x_i, y_i)
  std::vector<DrcSummary> drc;
  std::uint64_t drc_calls = 0;
};

namespace detail {

struct SunflowerRun : Extractor {
  std::size_t d = 0;

  // (x_i, y_i) for the blocks `lens`, with every mixed concatenation in code.
  std::optional<std::vector<std::pair<Word, Word>>> blocks(const Code& code, std::span<const std::size_t> lens,
                                                           std::size_t level) {
    if (code.empty()) return std::nullopt;
    if (lens.size() == 1) {
      auto p = find_pair_at_distance(code, d);
      if (!p) return std::nullopt;
      return std::vector<std::pair<Word, Word>>{*p};
    }
    auto [g, xs] = select(code, lens[0], level);
    std::vector<Word> words;
    for (std::uint64_t x : xs) words.push_back(g.left_word(x));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (hamming_distance(words[i], words[j]) != d) continue;
        if (exhausted()) return std::nullopt;
        ++pair_attempts;
        const Code b = right_code(g, common_neighbors(g, xs[i], xs[j]));
        auto sub = blocks(b, lens.subspan(1), level + 1);
        if (sub) {
          sub->insert(sub->begin(), std::make_pair(words[i], words[j]));
          return sub;
        }
      }
    return std::nullopt;
  }
};

}  // namespace detail

/// Weak k-sunflower in C built from pairs x_i, y_i at distance d on each
/// block: v_i = x_1 o ... o y_i o ... o x_k. Distinct petals differ on
/// exactly two blocks, so every pairwise agreement equals n - 2d.
inline SunflowerExtraction sunflower_cube_extract(const Code& code, std::size_t k, std::size_t d,
                                                  std::uint64_t seed, const ExtractOptions& opt = {}) {
  if (k < 1) throw DomainError("sunflower_cube_extract needs k >= 1");
  const std::size_t n = code.length();
  SunflowerExtraction out;
  if (k == 1) {
    out.block_sizes = {n};
    if (!code.empty()) out.witness = SunflowerWitness{{code[0]}, SunflowerKind::weak, n, {}};
    return out;
  }
  if (n < k) throw DomainError("sunflower_cube_extract needs n >= k");
  if (d < 1) throw DomainError("sunflower_cube_extract needs d >= 1");
  out.block_sizes.assign(k, n / k);
  out.block_sizes[0] += n % k;
  if (d > n / k) return out;

  detail::SunflowerRun run{{opt, SplitMix64(seed), {}, 0, 0}, d};
  auto pairs = run.blocks(code, out.block_sizes, 0);
  out.drc = std::move(run.summaries);
  out.drc_calls = run.drc_calls;
  if (!pairs) return out;
  out.block_pairs = *pairs;
  SunflowerWitness w;
  w.kind = SunflowerKind::weak;
  w.agreement = n - 2 * d;
  for (std::size_t i = 0; i < k; ++i) {
    Word v = i == 0 ? (*pairs)[0].second : (*pairs)[0].first;
    for (std::size_t j = 1; j < k; ++j) v = detail::join_words(v, i == j ? (*pairs)[j].second : (*pairs)[j].first);
    if (!code.contains(v)) throw Error("internal: sunflower petal is not a codeword");
    w.petals.push_back(std::move(v));
  }
  if (!verify(w)) throw Error("internal: extracted sunflower failed verification");
  out.witness = std::move(w);
  return out;
}

// ---------------------------------------------------------------------------
// Cross pairs

struct CrossPairReport {
  std::optional<std::pair<Word, Word>> pair;  // (element of C, element of D)
  std::size_t dropped = 0;                    // x with no y within gamma n
  std::size_t buckets = 0;
  std::size_t bucket_used = 0;                // 1-based rank of the successful bucket
};

/// Assigns each x in C its nearest y_x in D (ties to the smaller word), keys
/// x by (T, x|_T, y_x|_T) with T the disagreement support, and inside each
/// bucket (largest first) looks for x, x' with d(x, x') = d - |T|. Then
/// d(x', y_x) = |T| + d(x', x) = d.
inline CrossPairReport cross_pair_finder(const Code& C, const Code& D, std::size_t d, const Rational& gamma) {
  if (C.length() != D.length() || C.alphabet() != D.alphabet())
    throw DimensionError("cross_pair_finder needs codes of the same shape");
  if (gamma < 0 || gamma > 1) throw DomainError("cross_pair_finder needs 0 <= gamma <= 1");
  const std::size_t n = C.length();
  CrossPairReport out;
  using Key = std::tuple<std::vector<std::size_t>, std::vector<Symbol>, std::vector<Symbol>>;
  std::map<Key, std::vector<std::pair<std::size_t, std::size_t>>> buckets;  // (index in C, index in D)
  for (std::size_t i = 0; i < C.size(); ++i) {
    std::optional<std::size_t> best;
    std::size_t best_d = 0;
    for (std::size_t j = 0; j < D.size(); ++j) {
      const std::size_t dist = hamming_distance(C[i], D[j]);
      if (!best || dist < best_d) {
        best = j;
        best_d = dist;
      }
    }
    if (!best || Rational(best_d) > gamma * n) {
      ++out.dropped;
      continue;
    }
    Key key;
    for (std::size_t c = 0; c < n; ++c)
      if (C[i][c] != D[*best][c]) {
        std::get<0>(key).push_back(c);
        std::get<1>(key).push_back(C[i][c]);
        std::get<2>(key).push_back(D[*best][c]);
      }
    buckets[key].emplace_back(i, *best);
  }
  std::vector<const std::pair<const Key, std::vector<std::pair<std::size_t, std::size_t>>>*> order;
  for (const auto& b : buckets) order.push_back(&b);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->second.size() > b->second.size(); });
  out.buckets = order.size();
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t t = std::get<0>(order[rank]->first).size();
    if (t > d) continue;
    const auto& members = order[rank]->second;
    const std::size_t want = d - t;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a; b < members.size(); ++b) {
        if ((a == b) != (want == 0)) continue;
        // x' = C[members[a]], x = C[members[b]], partner y_x.
        const Word& xp = C[members[a].first];
        const Word& x = C[members[b].first];
        if (hamming_distance(xp, x) != want) continue;
        const Word& y = D[members[b].second];
        if (hamming_distance(xp, y) != d) throw Error("internal: cross pair failed verification");
        out.pair = std::make_pair(xp, y);
        out.bucket_used = rank + 1;
        return out;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Capture experiment

struct CaptureExperiment {
  std::size_t n = 0;
  unsigned q = 0;
  std::size_t code_size = 0;
  std::size_t d = 0;
  Rational eta;
  Real alpha;          // eta / (16 log2(16/eta))
  std::size_t m = 0;   // floor(alpha n)
  std::size_t r = 0;   // max(floor(q^(eta/4)), 2)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t pair_count = 0;     // pairs of C at distance d
  Rational observed_X_mean;
  Rational observed_Y_mean;
  Rational observed_X_variance;
  Rational expected_X;              // r^(d+m) |C| / q^n
  Rational pair_probability;        // C(d+m,m)/C(n,d) (r(r-1)/(q(q-1)))^d (r/q)^m q^-(n-d-m)
  Rational pair_probability_direct; // C(n-d,m)/C(n,d+m) (same symbol factors)
  Rational expected_Y;              // pair_probability * pair_count
};

/// Probability that a fixed pair at distance d is captured, with the
/// coordinate factor written as C(d+m, m)/C(n, d).
inline Rational capture_pair_probability(std::size_t n, unsigned q, std::size_t d, std::size_t m, std::size_t r) {
  return Rational(binomial(d + m, m), binomial(n, d)) * rpow(Rational(r * (r - 1), q * (q - 1)), d) *
         rpow(Rational(r, q), m) / Rational(ipow(q, n - d - m));
}

/// The same probability with the coordinate factor read as
/// P(disagreement set ⊆ V1) = C(n-d, m)/C(n, d+m).
inline Rational capture_pair_probability_direct(std::size_t n, unsigned q, std::size_t d, std::size_t m,
                                                std::size_t r) {
  Rational p(binomial(n - d, m), binomial(n, d + m));
  for (std::size_t i = 0; i < d; ++i) p *= Rational(r * (r - 1), q * (q - 1));
  for (std::size_t i = 0; i < m; ++i) p *= Rational(r, q);
  for (std::size_t i = 0; i < n - d - m; ++i) p /= q;
  return p;
}

struct CaptureParameters {
  Real alpha;
  std::size_t m = 0;
  std::size_t r = 0;
};

inline CaptureParameters capture_parameters(std::size_t n, unsigned q, const Rational& eta) {
  if (!(eta > 0 && eta <= 1)) throw DomainError("capture experiment needs 0 < eta <= 1");
  const Real e = to_real(eta);
  CaptureParameters p;
  p.alpha = e / (16 * (boost::multiprecision::log(16 / e) / boost::multiprecision::log(Real(2))));
  p.m = floor_of(Real(p.alpha * n)).convert_to<std::size_t>();
  const BigInt r = floor_power(q, eta / 4);
  p.r = r < 2 ? 2 : r.convert_to<std::size_t>();
  return p;
}

/// One trial: random V1 of size d + m, random r-sets Q_i on V1 and symbols
/// q_j on V2. Returns (X, Y): captured words and captured pairs at distance d.
inline std::pair<std::uint64_t, std::uint64_t> capture_trial(const Code& code, std::size_t d, std::size_t m,
                                                             std::size_t r, SplitMix64& rng) {
  const std::size_t n = code.length();
  const unsigned q = code.alphabet();
  std::vector<std::size_t> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = i;
  for (std::size_t i = 0; i < d + m; ++i) std::swap(coords[i], coords[i + rng.below(n - i)]);
  // allowed[c][s]: symbol s is allowed at coordinate c.
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(q, false));
  std::vector<unsigned> symbols(q);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = coords[i];
    if (i < d + m) {
      for (unsigned s = 0; s < q; ++s) symbols[s] = s;
      for (std::size_t j = 0; j < r; ++j) std::swap(symbols[j], symbols[j + rng.below(q - j)]);
      for (std::size_t j = 0; j < r; ++j) allowed[c][symbols[j]] = true;
    } else {
      allowed[c][rng.below(q)] = true;
    }
  }
  std::vector<const Word*> captured;
  for (const Word& w : code) {
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) ok = allowed[c][w[c]];
    if (ok) captured.push_back(&w);
  }
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < captured.size(); ++i)
    for (std::size_t j = i + 1; j < captured.size(); ++j) y += hamming_distance(*captured[i], *captured[j]) == d;
  return {captured.size(), y};
}

/// Trial i draws from SplitMix64(seed).split(i), so the result does not
/// depend on the number of threads.
inline CaptureExperiment supersat_experiment(const Code& code, std::size_t d, const Rational& eta,
                                             std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
  const std::size_t n = code.length();
  const unsigned q = code.alphabet();
  const CaptureParameters cp = capture_parameters(n, q, eta);
  if (cp.r > q) throw DomainError("capture experiment needs r <= q");
  if (d + cp.m > n) throw DomainError("capture experiment needs d + m <= n");
  if (trials == 0) throw DomainError("capture experiment needs at least one trial");

  CaptureExperiment e;
  e.n = n;
  e.q = q;
  e.code_size = code.size();
  e.d = d;
  e.eta = eta;
  e.alpha = cp.alpha;
  e.m = cp.m;
  e.r = cp.r;
  e.trials = trials;
  e.seed = seed;
  e.pair_count = count_pairs_at_distance(code, d);
  e.expected_X = Rational(ipow(cp.r, d + cp.m) * code.size(), ipow(q, n));
  e.pair_probability = capture_pair_probability(n, q, d, cp.m, cp.r);
  e.pair_probability_direct = capture_pair_probability_direct(n, q, d, cp.m, cp.r);
  e.expected_Y = e.pair_probability * e.pair_count;

  const SplitMix64 root(seed);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(trials, 256))));
  std::vector<BigInt> sx(workers), sxx(workers), sy(workers);
  auto work = [&](unsigned w) {
    BigInt x_sum = 0, xx_sum = 0, y_sum = 0;
    for (std::uint64_t i = trials * w / workers; i < trials * (w + 1) / workers; ++i) {
      SplitMix64 rng = root.split(i);
      const auto [x, y] = capture_trial(code, d, cp.m, cp.r, rng);
      x_sum += x;
      xx_sum += BigInt(x) * x;
      y_sum += y;
    }
    sx[w] = x_sum;
    sxx[w] = xx_sum;
    sy[w] = y_sum;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  BigInt tx = 0, txx = 0, ty = 0;
  for (unsigned w = 0; w < workers; ++w) {
    tx += sx[w];
    txx += sxx[w];
    ty += sy[w];
  }
  e.observed_X_mean = Rational(tx, trials);
  e.observed_Y_mean = Rational(ty, trials);
  e.observed_X_variance = Rational(txx, trials) - e.observed_X_mean * e.observed_X_mean;
  return e;
}

}  // namespace forbid

#endif  // FORBID_PIPELINES_HPP
