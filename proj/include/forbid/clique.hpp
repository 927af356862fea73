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

// Conflict graphs and an exact maximum-independent-set solver.
//
// Independent sets of the conflict graph are cliques of its complement, the
// compatibility graph. The solver is a bitset branch and bound in the style
// of Tomita's MCQ/MCS and San Segundo's BBMC: candidates are greedily
// colored into independent classes of the compatibility graph, and a branch
// is cut once |clique| + colors left cannot beat the incumbent.

#ifndef FORBID_CLIQUE_HPP
#define FORBID_CLIQUE_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "forbid/errors.hpp"

namespace forbid {

/// Symmetric, irreflexive adjacency stored as packed rows. i ~ j means the
/// pair may not appear together in a family.
class ConflictGraph {
 public:
  explicit ConflictGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  /// Graph on `objects` with i ~ j iff conflict(objects[i], objects[j]).
  template <class T, class Pred>
  static ConflictGraph build(const std::vector<T>& objects, Pred conflict) {
    ConflictGraph g(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i)
      for (std::size_t j = i + 1; j < objects.size(); ++j)
        if (conflict(objects[i], objects[j])) g.add_edge(i, j);
    return g;
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw DomainError("conflict graph is irreflexive");
    set(i, j);
    set(j, i);
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[i * words_ + w]);
    return d;
  }

  const std::uint64_t* row(std::size_t i) const noexcept { return bits_.data() + i * words_; }

  /// True iff no two listed vertices are adjacent.
  bool is_independent(const std::vector<std::size_t>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (vs[a] == vs[b] || adjacent(vs[a], vs[b])) return false;
    return true;
  }

 private:
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<double> max_seconds;
  std::size_t max_vertices = 100'000;
};

struct IndependentSetOptions {
  SearchBudget budget;
  unsigned threads = 1;
  /// Force this vertex into the solution (symmetry reduction on
  /// vertex-transitive graphs).
  std::optional<std::size_t> fixed_vertex;
  /// Stop as soon as a solution of this size is found.
  std::optional<std::size_t> target;
};

struct IndependentSetResult {
  std::vector<std::size_t> vertices;  // ascending
  bool optimal = false;               // false when a budget ran out
  std::uint64_t nodes = 0;
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const ConflictGraph& g, const IndependentSetOptions& opt)
      : opt_(opt), n_(g.size()), words_((g.size() + 63) / 64) {
    // Compatibility graph, vertices relabelled by descending degree (ties by
    // original index).
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = n_ - 1 - g.degree(v);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> label(n_);
    for (std::size_t i = 0; i < n_; ++i) label[order_[i]] = i;
    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t v = order_[i];
      for (std::size_t j = 0; j < n_; ++j)
        if (j != i && !g.adjacent(v, order_[j])) adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    if (opt.fixed_vertex) {
      if (*opt.fixed_vertex >= n_) throw DomainError("fixed vertex out of range");
      fixed_ = label[*opt.fixed_vertex];
    }
    start_ = std::chrono::steady_clock::now();
  }

  IndependentSetResult run() {
    IndependentSetResult res;
    if (n_ == 0) {
      res.optimal = true;
      return res;
    }
    std::vector<std::uint64_t> root(words_, 0);
    std::vector<std::size_t> base;
    if (fixed_) {
      base.push_back(*fixed_);
      const std::uint64_t* r = row(*fixed_);
      std::copy(r, r + words_, root.begin());
    } else {
      for (std::size_t i = 0; i < n_; ++i) root[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    best_size_ = base.size();
    best_ = base;

    // Top level: colour once, then hand out the branches.
    std::vector<std::size_t> verts, colors;
    {
      Frame scratch(words_);
      color(root.data(), base.size(), verts, colors, scratch);
    }
    if (verts.empty()) {
      finish(res);
      return res;
    }
    std::atomic<std::size_t> next{verts.size()};
    auto worker = [&] {
      Frame f(words_);
      std::vector<std::size_t> clique = base;
      std::vector<std::uint64_t> p(words_);
      while (true) {
        std::size_t i = next.fetch_sub(1);
        if (i == 0 || i > verts.size()) break;
        --i;
        if (stopped()) break;
        if (base.size() + colors[i] <= best_size_.load()) break;  // later branches have smaller colours
        // Branch i sees only the vertices coloured before it.
        std::fill(p.begin(), p.end(), 0);
        for (std::size_t j = 0; j < i; ++j) p[verts[j] / 64] |= std::uint64_t{1} << (verts[j] % 64);
        const std::uint64_t* nv = row(verts[i]);
        for (std::size_t w = 0; w < words_; ++w) p[w] &= nv[w] & root[w];
        clique.push_back(verts[i]);
        expand(p.data(), clique, f);
        clique.pop_back();
      }
    };
    const unsigned threads = std::max(1U, opt_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    finish(res);
    return res;
  }

 private:
  struct Level {
    std::vector<std::uint64_t> bits;
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
  };

  // Per-thread scratch; a deque keeps references stable as depth grows.
  struct Frame {
    explicit Frame(std::size_t words) : words(words), u(words), q(words) {}
    std::size_t words;
    std::deque<Level> levels;
    std::vector<std::uint64_t> u;
    std::vector<std::uint64_t> q;
    Level& level(std::size_t depth) {
      while (levels.size() <= depth) levels.push_back(Level{std::vector<std::uint64_t>(words, 0), {}, {}});
      return levels[depth];
    }
  };

  const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * words_; }

  bool stopped() const { return abort_.load(std::memory_order_relaxed) || done_.load(std::memory_order_relaxed); }

  // Greedy sequential colouring of the candidate set; vertices come out in
  // non-decreasing colour order. Only vertices whose colour could still
  // improve the incumbent are emitted.
  void color(const std::uint64_t* p, std::size_t clique_size, std::vector<std::size_t>& verts,
             std::vector<std::size_t>& colors, Frame& f) const {
    verts.clear();
    colors.clear();
    std::vector<std::uint64_t>& u = f.u;
    std::vector<std::uint64_t>& q = f.q;
    std::copy(p, p + words_, u.begin());
    const std::size_t best = best_size_.load(std::memory_order_relaxed);
    const std::size_t kmin = best + 1 > clique_size ? best + 1 - clique_size : 1;
    std::size_t k = 0;
    bool any = std::any_of(u.begin(), u.end(), [](std::uint64_t x) { return x != 0; });
    while (any) {
      ++k;
      q = u;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t b = std::countr_zero(q[w]);
          const std::size_t v = w * 64 + b;
          q[w] &= q[w] - 1;
          u[w] &= ~(std::uint64_t{1} << b);
          const std::uint64_t* nv = row(v);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~nv[x];
          if (k >= kmin) {
            verts.push_back(v);
            colors.push_back(k);
          }
        }
      }
      any = std::any_of(u.begin(), u.end(), [](std::uint64_t x) { return x != 0; });
    }
  }

  void expand(std::uint64_t* p, std::vector<std::size_t>& clique, Frame& f) {
    if (!tick()) return;
    bool empty = true;
    for (std::size_t w = 0; w < words_; ++w)
      if (p[w] != 0) {
        empty = false;
        break;
      }
    if (empty) {
      offer(clique);
      return;
    }
    Level& lv = f.level(clique.size());
    std::vector<std::size_t>& verts = lv.verts;
    std::vector<std::size_t>& colors = lv.colors;
    color(p, clique.size(), verts, colors, f);
    std::vector<std::uint64_t>& next = lv.bits;
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (stopped()) return;
      if (clique.size() + colors[i] <= best_size_.load(std::memory_order_relaxed)) return;
      const std::size_t v = verts[i];
      const std::uint64_t* nv = row(v);
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & nv[w];
        nonempty |= next[w] != 0;
      }
      clique.push_back(v);
      if (nonempty) {
        expand(next.data(), clique, f);
      } else {
        offer(clique);
      }
      clique.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  void offer(const std::vector<std::size_t>& clique) {
    if (clique.size() <= best_size_.load()) return;
    std::lock_guard<std::mutex> lock(mu_);
    if (clique.size() <= best_size_.load()) return;
    best_ = clique;
    best_size_.store(clique.size());
    if (opt_.target && clique.size() >= *opt_.target) done_.store(true);
  }

  bool tick() {
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > opt_.budget.max_nodes) {
      abort_.store(true);
      return false;
    }
    if (opt_.budget.max_seconds && (n & 1023U) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > *opt_.budget.max_seconds) {
        abort_.store(true);
        return false;
      }
    }
    return !stopped();
  }

  void finish(IndependentSetResult& res) {
    res.vertices.clear();
    for (std::size_t v : best_) res.vertices.push_back(order_[v]);
    std::sort(res.vertices.begin(), res.vertices.end());
    res.optimal = !abort_.load();
    res.nodes = nodes_.load();
  }

  IndependentSetOptions opt_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> adj_;
  std::optional<std::size_t> fixed_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::size_t> best_size_{0};
  std::vector<std::size_t> best_;
  std::mutex mu_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> abort_{false};
  std::atomic<bool> done_{false};
};

}  // namespace detail

/// Exact maximum independent set. With a `target`, returns as soon as an
/// independent set of that size is found (`optimal` then means "the search
/// was not cut short by a budget").
inline IndependentSetResult max_independent_set(const ConflictGraph& g,
                                                const IndependentSetOptions& opt = {}) {
  if (g.size() > opt.budget.max_vertices)
    throw GuardError("conflict graph has " + std::to_string(g.size()) +
                     " vertices, above the vertex budget");
  detail::CliqueSearch search(g, opt);
  return search.run();
}

}  // namespace forbid

#endif  // FORBID_CLIQUE_HPP
