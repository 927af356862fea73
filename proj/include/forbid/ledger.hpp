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

// The explicit constant chain behind the density bounds: delta_1 .. delta_4,
// the amplification exponents t_1, t_2, t, and the constants of the
// sunflower, cross-distance and supersaturation arguments.
//
// Everything that is a rational function of eps is kept exact. Constants that
// go through a logarithm (c_1, gamma, alpha) are 50-digit reals. All
// logarithms without an explicit base are taken base 2.

#ifndef FORBID_LEDGER_HPP
#define FORBID_LEDGER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forbid/bounds.hpp"
#include "forbid/errors.hpp"
#include "forbid/numeric.hpp"

namespace forbid {

enum class LedgerContext { fr_sets, code_case1, code_case2, sunflower, cross, supersat };

inline std::string to_string(LedgerContext c) {
  switch (c) {
    case LedgerContext::fr_sets: return "FR_sets";
    case LedgerContext::code_case1: return "code_case1";
    case LedgerContext::code_case2: return "code_case2";
    case LedgerContext::sunflower: return "sunflower";
    case LedgerContext::cross: return "cross";
    case LedgerContext::supersat: return "supersat";
  }
  return "?";
}

/// Value slot of a ledger entry; monostate marks a quantity that is named
/// but deliberately not evaluated.
using LedgerValue = std::variant<std::monostate, BigInt, Rational, Real>;

struct LedgerEntry {
  std::string name;
  LedgerValue value;
  std::string anchor;
};

class ConstantLedger {
 public:
  ConstantLedger(Rational eps, LedgerContext context) : eps_(std::move(eps)), context_(context) {}

  const Rational& epsilon() const noexcept { return eps_; }
  LedgerContext context() const noexcept { return context_; }
  const std::vector<LedgerEntry>& entries() const noexcept { return entries_; }

  void add(std::string name, LedgerValue value, std::string anchor) {
    entries_.push_back({std::move(name), std::move(value), std::move(anchor)});
  }

  const LedgerEntry* find(const std::string& name) const {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const LedgerEntry& e) { return e.name == name; });
    return it == entries_.end() ? nullptr : &*it;
  }

  const LedgerEntry& at(const std::string& name) const {
    const LedgerEntry* e = find(name);
    if (e == nullptr) throw DomainError("ledger has no entry '" + name + "'");
    return *e;
  }

  Rational rational(const std::string& name) const {
    const LedgerValue& v = at(name).value;
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    if (auto* i = std::get_if<BigInt>(&v)) return Rational(*i);
    throw DomainError("ledger entry '" + name + "' is not exact");
  }

  BigInt integer(const std::string& name) const {
    if (auto* i = std::get_if<BigInt>(&at(name).value)) return *i;
    throw DomainError("ledger entry '" + name + "' is not an integer");
  }

  Real real(const std::string& name) const {
    const LedgerValue& v = at(name).value;
    if (auto* x = std::get_if<Real>(&v)) return *x;
    if (auto* r = std::get_if<Rational>(&v)) return to_real(*r);
    if (auto* i = std::get_if<BigInt>(&v)) return Real(*i);
    throw DomainError("ledger entry '" + name + "' is not evaluated");
  }

 private:
  Rational eps_;
  LedgerContext context_;
  std::vector<LedgerEntry> entries_;
};

struct LedgerOptions {
  unsigned petals = 3;               // sunflower: largest k evaluated
  Rational eta = Rational(1, 4);     // supersat
  unsigned q = 3;                    // supersat
  std::optional<std::uint64_t> n;    // supersat: evaluates m = floor(alpha n)
};

namespace ledger_detail {

inline Real log2_real(const Real& x) { return boost::multiprecision::log(x) / boost::multiprecision::log(Real(2)); }

template <class Num>
Num delta1(const Num& eps) { return eps / 125; }

template <class Num>
Num delta2(const Num& eps) { return eps / 125; }

template <class Num>
struct Case1Chain {
  Num delta1_half;  // delta_1(eps/2)
  BigInt t1;
  BigInt t2;
  Num delta3;
};

// t_1 = ceil(4/delta_1(eps/2)), t_2 = ceil(4 t_1/delta_1(eps/2)),
// delta_3(eps) = delta_1(eps/2) / (4 t_2).
template <class Num>
Case1Chain<Num> case1(const Num& eps) {
  Case1Chain<Num> c;
  c.delta1_half = delta1(Num(eps / 2));
  c.t1 = ceil_of(Num(Num(4) / c.delta1_half));
  c.t2 = ceil_of(Num(Num(4 * c.t1) / c.delta1_half));
  c.delta3 = c.delta1_half / Num(4 * c.t2);
  return c;
}

template <class Num>
struct Case2Chain {
  Rational delta3_quarter;  // delta_3(1/4)
  BigInt t;
  Num delta4;
  Num delta;
};

// t = ceil(2/(eps delta_3(1/4))), delta_4(eps) = delta_2(eps/4)/(8t),
// delta(eps) = min(delta_3(eps), delta_4(eps)).
template <class Num>
Case2Chain<Num> case2(const Num& eps) {
  Case2Chain<Num> c;
  c.delta3_quarter = case1(Rational(1, 4)).delta3;
  Num d3q;
  if constexpr (std::is_same_v<Num, Rational>)
    d3q = c.delta3_quarter;
  else
    d3q = to_real(c.delta3_quarter);
  c.t = ceil_of(Num(Num(2) / (eps * d3q)));
  c.delta4 = delta2(Num(eps / 4)) / Num(8 * c.t);
  const Num d3 = case1(eps).delta3;
  c.delta = d3 < c.delta4 ? d3 : c.delta4;
  return c;
}

template <class Num>
Num delta_of(const Num& eps) { return case2(eps).delta; }

}  // namespace ledger_detail

/// Evaluates the constant chain for `context` at `eps` in (0, 1/2).
inline ConstantLedger constant_ledger(const Rational& eps, LedgerContext context,
                                      const LedgerOptions& opt = {}) {
  using namespace ledger_detail;
  if (!(eps > 0 && eps < Rational(1, 2))) throw DomainError("constant_ledger needs eps in (0, 1/2)");
  ConstantLedger L(eps, context);
  L.add("epsilon", eps, "input");
  L.add("delta1", delta1(eps), "prime-distance density: delta_1(eps) = eps/125");
  L.add("delta2", delta2(eps), "diameter density: delta_2(eps) = eps/125");
  L.add("n0", std::monostate{}, "n >= n_0(eps): threshold never quantified, not evaluated");

  auto add_case1 = [&] {
    const auto c = case1(eps);
    L.add("delta1_half", c.delta1_half, "small-distance case: delta_1(eps/2)");
    L.add("t1", c.t1, "small-distance case: t_1 = ceil(4/delta_1(eps/2))");
    L.add("t2", c.t2, "small-distance case: t_2 = ceil(4 t_1/delta_1(eps/2))");
    L.add("delta3", c.delta3, "small-distance case: delta_3(eps) = delta_1(eps/2)/4t_2");
  };
  auto add_case2 = [&] {
    add_case1();
    const auto c = case2(eps);
    L.add("delta3_quarter", c.delta3_quarter, "large-distance case: delta_3(1/4)");
    L.add("t_case2", c.t, "large-distance case: t = ceil(2/eps delta_3(1/4))");
    L.add("delta4", c.delta4, "large-distance case: delta_4(eps) = delta_2(eps/4)/8t");
    L.add("delta", c.delta, "forbidden-distance density: delta(eps) = min(delta_3(eps), delta_4(eps))");
  };

  switch (context) {
    case LedgerContext::fr_sets: {
      const Real c1 = compact_fw_rate(eps / 2);
      const Real rate = log2_real(1 / c1);
      const BigInt t1 = ceil_of(Real(2 / rate));
      const BigInt t2 = ceil_of(Real(Real(4 * t1) / rate));
      L.add("c1", c1, "compact Frankl-Wilson rate: c_1 = c(eps/2) = (1/(1+eps/2))^(eps/2)");
      L.add("t1", t1, "forbidden-intersection amplification: t_1 = ceil(2/log2(1/c_1))");
      L.add("t2", t2, "forbidden-intersection amplification: t_2 = ceil(4 t_1/log2(1/c_1))");
      L.add("c2_bound", Real(boost::multiprecision::pow(c1, Real(1) / Real(4 * t2))),
            "forbidden-intersection amplification: c_2 <= c_1^(1/4t_2)");
      break;
    }
    case LedgerContext::code_case1:
      add_case1();
      break;
    case LedgerContext::code_case2:
      add_case2();
      break;
    case LedgerContext::sunflower: {
      add_case2();
      if (opt.petals < 1) throw DomainError("sunflower ledger needs at least one petal");
      const Rational d = delta_of(eps);
      Rational prev = d;
      L.add("delta_sun[1]", d, "sunflower induction: k = 1 is the forbidden-distance bound");
      for (unsigned k = 2; k <= opt.petals; ++k) {
        const BigInt t = ceil_of(Rational(Rational(2) / (Rational(k - 1) * prev)));
        const Rational dk = d / Rational(2 * k * t);
        L.add("t_sun[" + std::to_string(k) + "]", t, "sunflower induction: t = ceil(2/((k-1) delta'(eps,k-1)))");
        L.add("delta_sun[" + std::to_string(k) + "]", dk, "sunflower induction: delta'(eps,k) = delta(eps)/2kt");
        prev = dk;
      }
      break;
    }
    case LedgerContext::cross: {
      add_case2();
      const Rational dh = delta_of(Rational(eps / 2));
      L.add("delta_half", dh, "cross-distance pigeonhole: delta(eps/2)");
      L.add("delta_cross", Rational(dh / 2), "cross-distance pigeonhole: delta' = delta(eps/2)/2");
      const Real d = to_real(dh);
      const Real g = d / (16 * log2_real(1 / d));
      const Real half = to_real(Rational(eps / 2));
      L.add("gamma", g < half ? g : half,
            "cross-distance pigeonhole: gamma = min(eps/2, delta(eps/2)/(16 log(1/delta(eps/2))))");
      break;
    }
    case LedgerContext::supersat: {
      add_case2();
      const Rational& eta = opt.eta;
      if (!(eta > 0 && eta < Rational(1, 2))) throw DomainError("supersat ledger needs eta in (0, 1/2)");
      if (opt.q < 2) throw DomainError("supersat ledger needs q >= 2");
      const Real e = to_real(eta);
      const Real alpha = e / (16 * log2_real(16 / e));
      L.add("eta", eta, "input");
      L.add("alpha_ss", alpha, "supersaturation capture: alpha = eta/(16 log(16/eta))");
      const BigInt r_raw = floor_power(opt.q, eta / 4);
      L.add("r", r_raw < 2 ? BigInt(2) : r_raw, "supersaturation capture: r = max(floor(q^(eta/4)), 2)");
      if (opt.n) L.add("m", floor_of(Real(alpha * *opt.n)), "supersaturation capture: m = alpha n");
      const Real dss = e * to_real(eps) * delta_of(Real(alpha / 2)) / 8;
      L.add("delta_ss", dss, "supersaturation capture: delta' = eta eps delta(alpha/2)/8");
      break;
    }
  }
  return L;
}

}  // namespace forbid

#endif  // FORBID_LEDGER_HPP
