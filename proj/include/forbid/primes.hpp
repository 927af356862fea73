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

#ifndef FORBID_PRIMES_HPP
#define FORBID_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace forbid {

/// Sieve of Eratosthenes over [0, limit].
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit) : composite_(limit + 1, false), limit_(limit) {
    composite_[0] = true;
    if (limit >= 1) composite_[1] = true;
    for (std::uint64_t p = 2; p * p <= limit; ++p)
      if (!composite_[p])
        for (std::uint64_t m = p * p; m <= limit; m += p) composite_[m] = true;
  }

  std::uint64_t limit() const noexcept { return limit_; }
  bool is_prime(std::uint64_t n) const { return n <= limit_ && !composite_[n]; }

 private:
  std::vector<bool> composite_;
  std::uint64_t limit_;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// p^a with p prime and a >= 1, by trial factorization.
inline bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace forbid

#endif  // FORBID_PRIMES_HPP
