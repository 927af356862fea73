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

// Text formats and JSON reports.
//
// Code file:    first non-comment line "q n", then one word per line as n
//               symbols in [0, q-1].
// Family file:  first non-comment line "n k", then one set per line as k
//               1-based elements. "n *" declares a family with sets of any
//               size; "-" on a line is the empty set.
//
// '#' starts a comment anywhere on a line; blank lines are ignored.

#ifndef FORBID_IO_HPP
#define FORBID_IO_HPP

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "json.hpp"

#include "forbid/bounds.hpp"
#include "forbid/drc.hpp"
#include "forbid/errors.hpp"
#include "forbid/hamming.hpp"
#include "forbid/ledger.hpp"
#include "forbid/numeric.hpp"
#include "forbid/pipelines.hpp"
#include "forbid/search.hpp"

namespace forbid {

using Json = nlohmann::ordered_json;

struct CodeFile {
  Code code{0, 2};
  std::vector<std::string> warnings;
};

struct FamilyFile {
  SetFamily family{0};
  std::optional<std::size_t> k;  // absent for "n *" files
  std::vector<std::string> warnings;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline std::uint64_t parse_natural(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || tok.size() > 18 || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, std::string("expected a natural number for ") + what + ", got '" + tok + "'");
  return std::stoull(tok);
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace detail

inline CodeFile read_code(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(0, "missing header 'q n'");
  const auto& h = lines.front();
  if (h.tokens.size() != 2) throw ParseError(h.number, "header must be 'q n'");
  const auto q = detail::parse_natural(h.tokens[0], h.number, "q");
  const auto n = detail::parse_natural(h.tokens[1], h.number, "n");
  if (q < 2 || q > kMaxAlphabet) throw ParseError(h.number, "alphabet size must lie in [2, 256]");
  std::vector<Word> words;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != n)
      throw ParseError(l.number, "expected " + std::to_string(n) + " symbols, got " + std::to_string(l.tokens.size()));
    std::vector<Symbol> s;
    for (const auto& tok : l.tokens) {
      const auto v = detail::parse_natural(tok, l.number, "a symbol");
      if (v >= q) throw ParseError(l.number, "symbol " + tok + " outside [0, " + std::to_string(q - 1) + "]");
      s.push_back(static_cast<Symbol>(v));
    }
    words.emplace_back(std::move(s), static_cast<unsigned>(q));
  }
  CodeFile f{Code(n, static_cast<unsigned>(q), std::move(words)), {}};
  if (f.code.duplicates_removed() != 0)
    f.warnings.push_back(std::to_string(f.code.duplicates_removed()) + " duplicate word(s) removed");
  return f;
}

inline CodeFile read_code(const std::string& path) {
  auto in = detail::open_in(path);
  return read_code(in);
}

inline void write_code(const Code& code, std::ostream& out) {
  out << code.alphabet() << ' ' << code.length() << '\n';
  for (const Word& w : code) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << unsigned(w[i]);
    out << '\n';
  }
}

inline void write_code(const Code& code, const std::string& path) {
  auto out = detail::open_out(path);
  write_code(code, out);
}

inline FamilyFile read_family(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(0, "missing header 'n k'");
  const auto& h = lines.front();
  if (h.tokens.size() != 2) throw ParseError(h.number, "header must be 'n k' or 'n *'");
  const auto n = detail::parse_natural(h.tokens[0], h.number, "n");
  if (n > 64) throw ParseError(h.number, "ground set larger than 64");
  std::optional<std::size_t> k;
  if (h.tokens[1] != "*") k = detail::parse_natural(h.tokens[1], h.number, "k");
  if (k && *k > n) throw ParseError(h.number, "k exceeds n");
  std::vector<std::uint64_t> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    std::uint64_t mask = 0;
    if (!(l.tokens.size() == 1 && l.tokens[0] == "-")) {
      for (const auto& tok : l.tokens) {
        const auto e = detail::parse_natural(tok, l.number, "an element");
        if (e < 1 || e > n) throw ParseError(l.number, "element " + tok + " outside [1, " + std::to_string(n) + "]");
        const std::uint64_t bit = std::uint64_t{1} << (e - 1);
        if (mask & bit) throw ParseError(l.number, "element " + tok + " repeated");
        mask |= bit;
      }
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (k && size != *k)
      throw ParseError(l.number, "expected " + std::to_string(*k) + " elements, got " + std::to_string(size));
    sets.push_back(mask);
  }
  FamilyFile f{SetFamily(n, std::move(sets)), k, {}};
  if (f.family.duplicates_removed() != 0)
    f.warnings.push_back(std::to_string(f.family.duplicates_removed()) + " duplicate set(s) removed");
  return f;
}

inline FamilyFile read_family(const std::string& path) {
  auto in = detail::open_in(path);
  return read_family(in);
}

/// `k` absent writes the "n *" header.
inline void write_family(const SetFamily& family, std::optional<std::size_t> k, std::ostream& out) {
  out << family.ground_size() << ' ';
  if (k)
    out << *k;
  else
    out << '*';
  out << '\n';
  for (std::uint64_t m : family.sets()) {
    if (m == 0) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (std::size_t e = 0; e < family.ground_size(); ++e)
      if ((m >> e) & 1U) {
        out << (first ? "" : " ") << e + 1;
        first = false;
      }
    out << '\n';
  }
}

inline void write_family(const KSetFamily& family, std::ostream& out) { write_family(family, family.k(), out); }

inline void write_family(const SetFamily& family, std::optional<std::size_t> k, const std::string& path) {
  auto out = detail::open_out(path);
  write_family(family, k, out);
}

// ---------------------------------------------------------------------------
// JSON

inline std::string json_number(const Rational& x) { return to_string(x); }
inline std::string json_number(const BigInt& x) { return x.str(); }
inline std::string json_number(const Real& x) { return to_string(x, 20); }

inline Json word_json(const Word& w) {
  Json a = Json::array();
  for (auto s : w.symbols()) a.push_back(unsigned(s));
  return a;
}

inline Json to_json(const BoundReport& r) {
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"ok", h.ok}});
  return {{"value", r.value ? Json(json_number(*r.value)) : Json(nullptr)},
          {"hypotheses", hyps},
          {"citation", r.citation}};
}

inline Json to_json(const DrcOutcome& o) {
  return {{"selected_count", o.selected.size()},
          {"t", o.t},
          {"retries", o.retries_used},
          {"success", o.success},
          {"guarantees", {{"size", json_number(o.size_guarantee)}, {"codegree", json_number(o.codegree_guarantee)}}}};
}

inline Json to_json(const DrcSummary& s) {
  return {{"level", s.level},
          {"left", s.left},
          {"right", s.right},
          {"selected_count", s.selected},
          {"t", s.t},
          {"retries", s.retries},
          {"success", s.success},
          {"guarantees", {{"size", json_number(s.size_guarantee)}, {"codegree", json_number(s.codegree_guarantee)}}}};
}

template <class W>
Json to_json(const SearchResult<W>& r, const std::string& witness_file) {
  return {{"optimum", r.optimum},
          {"status", to_string(r.status)},
          {"witness_file", witness_file.empty() ? Json(nullptr) : Json(witness_file)},
          {"nodes", r.nodes}};
}

inline Json to_json(const PrimeSplit& s) {
  return {{"primes", s.primes}, {"deviation", json_number(s.deviation)}, {"within_baker_harman", s.within_baker_harman}};
}

inline Json to_json(const DecompositionPlan& p) {
  Json blocks = Json::array();
  const bool sets = p.context == PlanContext::fr_sets_odd || p.context == PlanContext::fr_sets_even;
  for (const auto& b : p.blocks) {
    Json j = {{"n", b.n}};
    j[sets ? "k" : "d"] = b.value ? Json(*b.value) : Json(nullptr);
    if (sets) j["l"] = b.l ? Json(*b.l) : Json(nullptr);
    blocks.push_back(j);
  }
  Json devs = Json::array();
  for (const auto& d : p.deviations) devs.push_back(json_number(d));
  Json j = {{"context", to_string(p.context)},
            {"n", p.n},
            {sets ? "k" : "d", p.k_or_d},
            {"l", p.l ? Json(*p.l) : Json(nullptr)},
            {"eps", json_number(p.eps)},
            {"blocks", blocks},
            {"primes", p.primes},
            {"deviations", devs},
            {"tolerance", json_number(p.tolerance)},
            {"residual", p.residual ? Json(json_number(*p.residual)) : Json(nullptr)},
            {"d_prime_range", p.d_prime_range ? Json::array({json_number(p.d_prime_range->first),
                                                             json_number(p.d_prime_range->second)})
                                              : Json(nullptr)},
            {"remainder_range", p.remainder_range ? Json::array({json_number(p.remainder_range->first),
                                                                 json_number(p.remainder_range->second)})
                                                  : Json(nullptr)},
            {"citation", p.citation}};
  return j;
}

inline Json pair_json(const std::optional<std::pair<Word, Word>>& p) {
  if (!p) return nullptr;
  return {{"x", word_json(p->first)}, {"y", word_json(p->second)}, {"distance", hamming_distance(p->first, p->second)}};
}

inline Json to_json(const PairExtraction& e) {
  Json drc = Json::array();
  for (const auto& s : e.drc) drc.push_back(to_json(s));
  return {{"found", e.pair.has_value()},
          {"pair", pair_json(e.pair)},
          {"route", e.route},
          {"plan", e.plan ? to_json(*e.plan) : Json(nullptr)},
          {"fallback_reason", e.fallback_reason.empty() ? Json(nullptr) : Json(e.fallback_reason)},
          {"drc_calls", e.drc_calls},
          {"drc", drc},
          {"citation", "forbidden distance via dependent random choice on block splits"}};
}

inline Json to_json(const SunflowerWitness& w) {
  Json petals = Json::array();
  for (const auto& p : w.petals) petals.push_back(word_json(p));
  Json j = {{"kind", w.kind == SunflowerKind::weak ? "weak" : "strong"}, {"petals", petals}, {"agreement", w.agreement}};
  if (w.kind == SunflowerKind::strong) {
    Json s = Json::array();
    for (auto c : w.agreement_set) s.push_back(c + 1);
    j["agreement_set"] = s;
  }
  return j;
}

inline Json to_json(const SunflowerExtraction& e) {
  Json drc = Json::array();
  for (const auto& s : e.drc) drc.push_back(to_json(s));
  Json pairs = Json::array();
  for (const auto& [x, y] : e.block_pairs) pairs.push_back({{"x", word_json(x)}, {"y", word_json(y)}});
  return {{"found", e.witness.has_value()},
          {"witness", e.witness ? to_json(*e.witness) : Json(nullptr)},
          {"block_sizes", e.block_sizes},
          {"block_pairs", pairs},
          {"drc_calls", e.drc_calls},
          {"drc", drc},
          {"citation", "weak sunflower from block pairs x_i, y_i at distance d"}};
}

inline Json to_json(const CrossPairReport& r) {
  return {{"found", r.pair.has_value()},
          {"pair", pair_json(r.pair)},
          {"dropped", r.dropped},
          {"buckets", r.buckets},
          {"bucket_used", r.bucket_used},
          {"citation", "cross distance by pigeonhole on the disagreement support"}};
}

inline Json to_json(const CaptureExperiment& e) {
  return {{"n", e.n},
          {"q", e.q},
          {"code_size", e.code_size},
          {"d", e.d},
          {"eta", json_number(e.eta)},
          {"alpha", json_number(e.alpha)},
          {"m", e.m},
          {"r", e.r},
          {"trials", e.trials},
          {"seed", e.seed},
          {"pair_count", e.pair_count},
          {"observed_X_mean", json_number(e.observed_X_mean)},
          {"observed_Y_mean", json_number(e.observed_Y_mean)},
          {"observed_X_variance", json_number(e.observed_X_variance)},
          {"expected_X", json_number(e.expected_X)},
          {"pair_probability", json_number(e.pair_probability)},
          {"pair_probability_direct", json_number(e.pair_probability_direct)},
          {"expected_Y", json_number(e.expected_Y)},
          {"citation", "supersaturation capture: E[X] = r^(d+m) |C| / q^n"}};
}

inline Json to_json(const ConstantLedger& L) {
  Json entries = Json::array();
  for (const auto& e : L.entries()) {
    Json v = std::visit(
        [](const auto& x) -> Json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, std::monostate>)
            return nullptr;
          else
            return json_number(x);
        },
        e.value);
    const char* kind = std::holds_alternative<std::monostate>(e.value) ? "not_evaluated"
                       : std::holds_alternative<Real>(e.value)         ? "real"
                                                                        : "exact";
    entries.push_back({{"name", e.name}, {"value", v}, {"kind", kind}, {"anchor", e.anchor}});
  }
  return {{"epsilon", json_number(L.epsilon())}, {"context", to_string(L.context())}, {"entries", entries}};
}

}  // namespace forbid

#endif  // FORBID_IO_HPP
