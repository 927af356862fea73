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

#ifndef FORBID_RNG_HPP
#define FORBID_RNG_HPP

#include <cstdint>
#include <limits>

namespace forbid {

/// SplitMix64 (Steele, Lea, Flood 2014). Every randomized routine in the
/// library draws from this generator so that outcomes are reproducible from
/// the seed alone, independent of the standard library in use.
///
/// Bounded draws use rejection sampling on the top of the 64-bit range;
/// child streams are derived with `split`, which hashes (state, index)
/// through one mixing round.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  /// Independent stream number `index`, leaving this generator untouched.
  SplitMix64 split(std::uint64_t index) const noexcept {
    return SplitMix64(mix(state_ ^ mix(index + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t state() const noexcept { return state_; }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
  }

  std::uint64_t state_;
};

}  // namespace forbid

#endif  // FORBID_RNG_HPP
