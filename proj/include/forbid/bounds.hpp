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

// Closed-form extremal bounds. Combinatorial quantities are exact big
// integers; exponents and entropies are evaluated in floating point and are
// compared against bounds with kFloatMargin of slack.

#ifndef FORBID_BOUNDS_HPP
#define FORBID_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forbid/errors.hpp"
#include "forbid/hamming.hpp"
#include "forbid/numeric.hpp"
#include "forbid/primes.hpp"

namespace forbid {

struct Hypothesis {
  std::string name;
  bool ok = false;
};

/// A bound together with the hypotheses it rests on. `value` is set only
/// when every hypothesis holds.
struct BoundReport {
  std::optional<BigInt> value;
  std::vector<Hypothesis> hypotheses;
  std::string citation;

  bool holds() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.ok; });
  }
};

/// Frankl–Wilson: an l-avoiding family of k-subsets of [n] has at most
/// C(n, k-l-1) members when k-l is a prime power and 2l+1 <= k.
inline BoundReport frankl_wilson_bound(std::uint64_t n, std::uint64_t k, std::uint64_t l) {
  if (!(l < k && k <= n)) throw DomainError("frankl_wilson_bound needs l < k <= n");
  BoundReport r;
  r.citation = "Frankl-Wilson: |A| <= C(n, k-l-1)";
  r.hypotheses.push_back({"k-l is a prime power", is_prime_power(k - l)});
  r.hypotheses.push_back({"2l+1 <= k", 2 * l + 1 <= k});
  if (r.holds()) r.value = binomial(n, k - l - 1);
  return r;
}

/// c(eps) = (1 / (1 + eps))^eps, the per-coordinate density rate for
/// l-avoiding families with k - l prime.
inline Real compact_fw_rate(const Rational& eps) {
  if (!(eps > 0 && eps < 1)) throw DomainError("compact_fw_rate needs 0 < eps < 1");
  const Real e = to_real(eps);
  return boost::multiprecision::exp(-e * boost::multiprecision::log1p(e));
}

/// f_q(alpha) = alpha log_q((q-1)/alpha) + (1-alpha) log_q(1/(1-alpha)),
/// with f_q(0) = 0.
inline double chernoff_exponent(unsigned q, double alpha) {
  if (q < 3) throw DomainError("chernoff_exponent needs q >= 3");
  const double top = double(q - 1) / double(q);
  if (!(alpha >= 0.0 && alpha <= top + 1e-15))
    throw DomainError("chernoff_exponent needs 0 <= alpha <= (q-1)/q");
  if (alpha == 0.0) return 0.0;
  const long double a = alpha;
  const long double lq = std::log(static_cast<long double>(q));
  long double f = a * std::log((q - 1) / a) / lq;
  if (a < 1) f += (1 - a) * std::log(1 / (1 - a)) / lq;
  return static_cast<double>(f);
}

inline double chernoff_exponent(unsigned q, const Rational& alpha) {
  if (alpha < 0 || alpha > Rational(q - 1, q))
    throw DomainError("chernoff_exponent needs 0 <= alpha <= (q-1)/q");
  if (alpha == Rational(q - 1, q)) return 1.0;
  return chernoff_exponent(q, to_double(alpha));
}

/// S_q(alpha, n) = sum_{i=0}^{floor(alpha n)} C(n, i) (q-1)^i.
inline BigInt tail_sum(unsigned q, const Rational& alpha, std::uint64_t n) {
  if (q < 2) throw DomainError("tail_sum needs q >= 2");
  if (alpha < 0 || alpha > 1) throw DomainError("tail_sum needs 0 <= alpha <= 1");
  const auto top = floor_of(alpha * n).convert_to<std::uint64_t>();
  BigInt sum = 0;
  BigInt power = 1;
  for (std::uint64_t i = 0; i <= top; ++i) {
    sum += binomial(n, i) * power;
    power *= q - 1;
  }
  return sum;
}

/// Frankl's bound for a D (mod p)-code with |D| = l.
inline BigInt modp_code_bound(std::uint64_t n, unsigned q, std::uint64_t l) {
  BigInt sum = 0;
  BigInt power = 1;
  for (std::uint64_t i = 0; i <= std::min(l, n); ++i) {
    sum += binomial(n, i) * power;
    power *= q - 1;
  }
  return sum;
}

/// True iff every realized distance is congruent mod p to a member of D.
inline bool check_modp_code(const Code& code, std::uint64_t p, const std::set<std::uint64_t>& residues) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  for (std::uint64_t r : residues)
    if (r == 0 || r >= p) throw DomainError("residue set must lie in {1..p-1}");
  const DistanceSet ds = distance_set(code);
  for (std::size_t d : ds.values())
    if (!residues.count(d % p)) return false;
  return true;
}

/// Largest r >= 0 with t + 2r < min(n + 1, t + 2(t-1)/(q-2)), the right
/// term read as +infinity for q = 2.
///
/// For t = 1 and q >= 3 no r satisfies the strict inequality; 0 is returned,
/// which selects K_0 (a fixed first coordinate, q^(n-1) words).
inline std::uint64_t ak_r_star(std::uint64_t n, unsigned q, std::uint64_t t) {
  if (q < 2) throw DomainError("ak_r_star needs q >= 2");
  if (t < 1 || t > n) throw DomainError("ak_r_star needs 1 <= t <= n");
  // t + 2r < n + 1  <=>  r <= (n - t) / 2
  std::uint64_t r = (n - t) / 2;
  if (q > 2) {
    // t + 2r < t + 2(t-1)/(q-2)  <=>  r (q-2) < t - 1
    if (t == 1) return 0;
    r = std::min<std::uint64_t>(r, (t - 2) / (q - 2));
  }
  return r;
}

/// |K_r| = (sum_{i<=r} (q-1)^i C(t+2r, i)) q^(n-t-2r).
inline BigInt ak_anticode_size(std::uint64_t n, unsigned q, std::uint64_t t, std::uint64_t r) {
  if (t + 2 * r > n) throw DomainError("ak_anticode_size needs t + 2r <= n");
  BigInt sum = 0;
  BigInt power = 1;
  for (std::uint64_t i = 0; i <= r; ++i) {
    sum += power * binomial(t + 2 * r, i);
    power *= q - 1;
  }
  return sum * ipow(q, n - t - 2 * r);
}

class NoSplitError : public Error {
 public:
  using Error::Error;
};

struct PrimeSplit {
  std::vector<std::uint64_t> primes;  // ascending
  Rational deviation;                 // max_i |a_i - s/parts|
  bool within_baker_harman = false;   // deviation <= s^(4/7)
};

namespace detail {

struct SplitSearch {
  std::uint64_t s;
  std::uint64_t parts;
  const std::vector<std::uint64_t>* window;
  const PrimeSieve* sieve;
  std::uint64_t hi;
  std::vector<std::uint64_t> current;
  std::vector<std::uint64_t> best;
  std::uint64_t best_dev = UINT64_MAX;  // in units of 1/parts

  // Chooses non-decreasing primes for all but the last part; the last part
  // is forced by the sum.
  void run(std::size_t from, std::uint64_t remaining) {
    const std::uint64_t left = parts - current.size();
    if (left == 1) {
      const std::uint64_t last = remaining;
      if (!current.empty() && last < current.back()) return;
      if (last > hi || !sieve->is_prime(last)) return;
      const std::uint64_t first = current.empty() ? last : current.front();
      const std::uint64_t lo_dev = s > parts * first ? s - parts * first : 0;
      const std::uint64_t hi_dev = parts * last > s ? parts * last - s : 0;
      const std::uint64_t dev = std::max(lo_dev, hi_dev);
      if (dev < best_dev) {
        best_dev = dev;
        best = current;
        best.push_back(last);
      }
      return;
    }
    for (std::size_t i = from; i < window->size(); ++i) {
      const std::uint64_t p = (*window)[i];
      if (p * left > remaining) break;  // later parts are at least p
      current.push_back(p);
      run(i, remaining - p);
      current.pop_back();
    }
  }
};

}  // namespace detail

/// Writes s as a sum of `parts` primes minimizing the largest deviation from
/// s/parts. Among optimal splits the lexicographically smallest ascending
/// tuple is returned. `sieve` must cover [0, s].
inline PrimeSplit split_into_primes(std::uint64_t s, unsigned parts, const PrimeSieve& sieve) {
  if (parts < 2) throw DomainError("split_into_primes needs at least 2 parts");
  if (sieve.limit() < s) throw DomainError("prime sieve does not cover the target");
  const Rational centre(s, parts);
  for (std::uint64_t width = 4;; width *= 2) {
    const BigInt lo_b = ceil_of(centre - width);
    const std::uint64_t lo = lo_b < 2 ? 2 : lo_b.convert_to<std::uint64_t>();
    const std::uint64_t hi = std::min<std::uint64_t>(s, floor_of(centre + width).convert_to<std::uint64_t>());
    std::vector<std::uint64_t> window;
    for (std::uint64_t p = lo; p <= hi; ++p)
      if (sieve.is_prime(p)) window.push_back(p);
    detail::SplitSearch search{s, parts, &window, &sieve, hi, {}, {}};
    search.run(0, s);
    const bool covers_all = lo == 2 && hi == s;
    if (search.best_dev <= parts * width || (covers_all && !search.best.empty())) {
      PrimeSplit out;
      out.primes = search.best;
      out.deviation = Rational(search.best_dev, parts);
      const double allowed = std::pow(static_cast<double>(s), 4.0 / 7.0);
      out.within_baker_harman = to_double(out.deviation) <= allowed + kFloatMargin;
      return out;
    }
    if (covers_all)
      throw NoSplitError(std::to_string(s) + " is not a sum of " + std::to_string(parts) +
                         " primes");
  }
}

inline PrimeSplit split_into_primes(std::uint64_t s, unsigned parts) {
  return split_into_primes(s, parts, PrimeSieve(std::max<std::uint64_t>(s, 2)));
}

/// H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary_entropy needs 0 <= x <= 1");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

inline double binary_entropy(const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("binary_entropy needs 0 <= x <= 1");
  return binary_entropy(to_double(x));
}

}  // namespace forbid

#endif  // FORBID_BOUNDS_HPP
