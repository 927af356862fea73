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

// Command-line front end. Exit codes: 0 success, 1 witness absent,
// 2 usage or input error, 3 search budget exhausted.

#ifndef FORBID_CLI_HPP
#define FORBID_CLI_HPP

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "forbid/bounds.hpp"
#include "forbid/constructions.hpp"
#include "forbid/drc.hpp"
#include "forbid/errors.hpp"
#include "forbid/io.hpp"
#include "forbid/ledger.hpp"
#include "forbid/pipelines.hpp"
#include "forbid/search.hpp"

namespace forbid::cli {

enum ExitCode : int { kSuccess = 0, kAbsent = 1, kUsage = 2, kBudget = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Carries the formatted help text out of parse_args.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

enum class Subcommand { bounds, search, pairs, extract, sunflower, cross, supersat, construct };
enum class OutputFormat { text, json };

struct RunConfig {
  Subcommand subcommand = Subcommand::bounds;
  std::string kind;  // bounds quantity, search kind or construction name
  std::optional<std::uint64_t> n, q, k, l, d, t, r, s, parts, p, petals, trials, split;
  std::optional<Rational> eps, eta, alpha, x, gamma;
  std::vector<std::uint64_t> forbid, residues;
  std::string context = "code_case2";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  std::optional<std::string> input, against, output, witness;
  bool cube = false, symmetry = false, strong = false, augment = false, drc = false, strict = false;
  std::uint64_t retries = 16;
  unsigned drc_t = 1;
  OutputFormat format = OutputFormat::text;
  std::string invocation;
};

namespace detail {

inline std::string join_argv(int argc, const char* const* argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

inline Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw UsageError("malformed number for --" + flag + ": '" + text + "'");
  }
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& where) {
  if (!v) throw UsageError("missing required option --" + std::string(flag) + " for " + where);
  return *v;
}

inline unsigned hardware_threads() {
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

}  // namespace detail

/// Parses argv into a validated RunConfig. Throws UsageError naming the
/// offending flag; `--help` is reported as HelpRequested.
inline RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig c;
  c.invocation = detail::join_argv(argc, argv);
  c.threads = detail::hardware_threads();
  CLI::App app{"Forbidden intersections and distances: bounds, exact search and constructive pipelines", "forbid"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::string> rationals;
  std::string format = "text";
  auto nat = [&](const char* name, std::optional<std::uint64_t>& slot, const char* help) {
    app.add_option(std::string("--") + name, slot, help);
  };
  nat("n", c.n, "length / ground-set size / permutation degree");
  nat("q", c.q, "alphabet size");
  nat("k", c.k, "set size or number of petals");
  nat("l", c.l, "forbidden intersection size / residue count");
  nat("d", c.d, "target distance");
  nat("t", c.t, "anticode parameter t");
  nat("r", c.r, "anticode parameter r");
  nat("s", c.s, "integer to split into primes");
  nat("parts", c.parts, "number of primes (3 or 4)");
  nat("p", c.p, "prime modulus");
  nat("petals", c.petals, "largest k for the sunflower ledger");
  nat("trials", c.trials, "capture experiment trials");
  nat("split", c.split, "size of the left block for --drc");
  for (const char* name : {"eps", "eta", "alpha", "x", "gamma"})
    app.add_option(std::string("--") + name, rationals[name], "rational, e.g. 1/4 or 0.25");
  app.add_option("--forbid", c.forbid, "forbidden distances")->delimiter(',');
  app.add_option("--residues", c.residues, "residue set for mod-p codes")->delimiter(',');
  app.add_option("--context", c.context, "ledger context")
      ->check(CLI::IsMember({"FR_sets", "code_case1", "code_case2", "sunflower", "cross", "supersat"}));
  app.add_option("--seed", c.seed, "64-bit seed");
  app.add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget-nodes", c.budget_nodes, "search node budget");
  app.add_option("--budget-seconds", c.budget_seconds, "search wall-clock budget");
  app.add_option("--input", c.input, "code or family file");
  app.add_option("--against", c.against, "second code for 'cross'");
  app.add_option("--output", c.output, "output file");
  app.add_option("--witness", c.witness, "write the search witness here");
  app.add_option("--retries", c.retries, "DRC attempts");
  app.add_option("--drc-t", c.drc_t, "DRC sample size")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--cube", c.cube, "use the full cube [q]^n as input code");
  app.add_flag("--symmetry", c.symmetry, "pin the first object (vertex-transitive instances)");
  app.add_flag("--strong", c.strong, "look for a strong sunflower");
  app.add_flag("--augment", c.augment, "large-small family: add the odd-case sets");
  app.add_flag("--drc", c.drc, "extract: run one dependent-random-choice step only");
  app.add_flag("--strict", c.strict, "extract: fail instead of falling back when no plan exists");

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and the constant ledger");
  bounds->add_option("quantity", c.kind, "fw|cfw|chernoff|tail|modp|ak-r|ak-size|split|entropy|ledger")
      ->required()
      ->check(CLI::IsMember({"fw", "cfw", "chernoff", "tail", "modp", "ak-r", "ak-size", "split", "entropy", "ledger"}));
  auto* search = app.add_subcommand("search", "exact extremal search");
  search->add_option("--kind", c.kind, "code|family|perm|diameter")
      ->check(CLI::IsMember({"code", "family", "perm", "diameter"}));
  app.add_subcommand("pairs", "count pairs at distance d");
  app.add_subcommand("extract", "pair extraction pipeline");
  app.add_subcommand("sunflower", "weak or strong sunflower");
  app.add_subcommand("cross", "cross-distance pair between two codes");
  app.add_subcommand("supersat", "capture experiment");
  auto* construct = app.add_subcommand("construct", "named constructions");
  construct->add_option("name", c.kind, "parity|anticode|large-small|perm-blocks|perm-avoid")
      ->required()
      ->check(CLI::IsMember({"parity", "anticode", "large-small", "perm-blocks", "perm-avoid"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  static const std::map<std::string, Subcommand> names = {
      {"bounds", Subcommand::bounds},       {"search", Subcommand::search},
      {"pairs", Subcommand::pairs},         {"extract", Subcommand::extract},
      {"sunflower", Subcommand::sunflower}, {"cross", Subcommand::cross},
      {"supersat", Subcommand::supersat},   {"construct", Subcommand::construct}};
  c.subcommand = names.at(app.get_subcommands().front()->get_name());
  if (c.subcommand == Subcommand::search && c.kind.empty()) c.kind = "code";
  c.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  for (const auto& [name, text] : rationals) {
    if (text.empty()) continue;
    const Rational v = detail::rational_flag(name, text);
    if (name == "eps") c.eps = v;
    if (name == "eta") c.eta = v;
    if (name == "alpha") c.alpha = v;
    if (name == "x") c.x = v;
    if (name == "gamma") c.gamma = v;
  }

  // Required parameters per subcommand.
  using detail::need;
  const std::string where = "'" + app.get_subcommands().front()->get_name() + (c.kind.empty() ? "" : " " + c.kind) + "'";
  auto code_input = [&] {
    if (c.cube) {
      need(c.n, "n", where);
      need(c.q, "q", where);
    } else {
      need(c.input, "input", where);
    }
  };
  switch (c.subcommand) {
    case Subcommand::bounds:
      if (c.kind == "fw") { need(c.n, "n", where); need(c.k, "k", where); need(c.l, "l", where); }
      if (c.kind == "cfw") need(c.eps, "eps", where);
      if (c.kind == "chernoff") { need(c.q, "q", where); need(c.alpha, "alpha", where); }
      if (c.kind == "tail") { need(c.q, "q", where); need(c.alpha, "alpha", where); need(c.n, "n", where); }
      if (c.kind == "modp") {
        need(c.n, "n", where); need(c.q, "q", where); need(c.l, "l", where);
        if (c.input) need(c.p, "p", where);
      }
      if (c.kind == "ak-r" || c.kind == "ak-size") { need(c.n, "n", where); need(c.q, "q", where); need(c.t, "t", where); }
      if (c.kind == "split") need(c.s, "s", where);
      if (c.kind == "entropy") need(c.x, "x", where);
      if (c.kind == "ledger") need(c.eps, "eps", where);
      break;
    case Subcommand::search:
      need(c.n, "n", where);
      if (c.kind == "code") {
        need(c.q, "q", where);
        if (c.forbid.empty()) throw UsageError("missing required option --forbid for " + where);
      }
      if (c.kind == "family") { need(c.k, "k", where); need(c.l, "l", where); }
      if (c.kind == "perm") need(c.d, "d", where);
      if (c.kind == "diameter") { need(c.q, "q", where); need(c.t, "t", where); }
      break;
    case Subcommand::pairs:
      code_input();
      need(c.d, "d", where);
      break;
    case Subcommand::extract:
      code_input();
      if (!c.drc) {
        need(c.d, "d", where);
        need(c.eps, "eps", where);
      }
      break;
    case Subcommand::sunflower:
      code_input();
      need(c.k, "k", where);
      break;
    case Subcommand::cross:
      code_input();
      need(c.against, "against", where);
      need(c.d, "d", where);
      need(c.gamma, "gamma", where);
      break;
    case Subcommand::supersat:
      code_input();
      need(c.d, "d", where);
      need(c.eta, "eta", where);
      break;
    case Subcommand::construct:
      need(c.n, "n", where);
      if (c.kind == "anticode") { need(c.q, "q", where); need(c.t, "t", where); need(c.r, "r", where); }
      if (c.kind == "large-small") need(c.l, "l", where);
      if (c.kind == "perm-avoid") need(c.d, "d", where);
      if (c.format == OutputFormat::json && !c.output)
        throw UsageError("'construct' with --format json needs --output for the file");
      break;
  }
  return c;
}

namespace detail {

inline void emit(const RunConfig& c, Json body, std::ostream& out) {
  if (c.format == OutputFormat::json) {
    Json j = {{"invocation", c.invocation}, {"seed", c.seed}};
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << '\n';
    return;
  }
  for (auto it = body.begin(); it != body.end(); ++it)
    out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << '\n';
}

inline Code load_code(const RunConfig& c, std::ostream& err, const std::optional<std::string>& path) {
  if (c.cube && path == c.input) {
    if (*c.q < 2 || *c.q > kMaxAlphabet) throw DomainError("--q must lie in [2, 256]");
    return full_cube(*c.n, static_cast<unsigned>(*c.q));
  }
  CodeFile f = read_code(*path);
  for (const auto& w : f.warnings) err << "warning: " << *path << ": " << w << '\n';
  return f.code;
}

inline SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  if (c.budget_nodes) o.budget.max_nodes = *c.budget_nodes;
  if (c.budget_seconds) o.budget.max_seconds = *c.budget_seconds;
  o.threads = c.threads;
  o.symmetry = c.symmetry;
  return o;
}

inline std::optional<LedgerContext> ledger_context(const std::string& s) {
  static const std::map<std::string, LedgerContext> m = {
      {"FR_sets", LedgerContext::fr_sets},     {"code_case1", LedgerContext::code_case1},
      {"code_case2", LedgerContext::code_case2}, {"sunflower", LedgerContext::sunflower},
      {"cross", LedgerContext::cross},         {"supersat", LedgerContext::supersat}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

inline unsigned as_alphabet(std::uint64_t q) {
  if (q < 2 || q > kMaxAlphabet) throw DomainError("alphabet size must lie in [2, 256]");
  return static_cast<unsigned>(q);
}

inline int run_bounds(const RunConfig& c, std::ostream& out) {
  Json body = {{"quantity", c.kind}};
  if (c.kind == "fw") {
    body.update(to_json(frankl_wilson_bound(*c.n, *c.k, *c.l)));
  } else if (c.kind == "cfw") {
    body["value"] = json_number(compact_fw_rate(*c.eps));
    body["citation"] = "c(eps) = (1/(1+eps))^eps";
  } else if (c.kind == "chernoff") {
    std::ostringstream v;
    v.precision(17);
    v << chernoff_exponent(static_cast<unsigned>(*c.q), *c.alpha);
    body["value"] = v.str();
    body["citation"] = "f_q(alpha) = alpha log_q((q-1)/alpha) + (1-alpha) log_q(1/(1-alpha))";
  } else if (c.kind == "tail") {
    body["value"] = json_number(tail_sum(static_cast<unsigned>(*c.q), *c.alpha, *c.n));
    body["citation"] = "S_q(alpha, n) = sum_{i <= alpha n} C(n, i) (q-1)^i";
  } else if (c.kind == "modp") {
    body["value"] = json_number(modp_code_bound(*c.n, static_cast<unsigned>(*c.q), *c.l));
    body["citation"] = "mod-p code bound: sum_{i <= l} C(n, i) (q-1)^i";
    if (c.input) {
      CodeFile f = read_code(*c.input);
      std::set<std::uint64_t> res(c.residues.begin(), c.residues.end());
      body["code_size"] = f.code.size();
      body["is_modp_code"] = check_modp_code(f.code, *c.p, res);
    }
  } else if (c.kind == "ak-r") {
    body["value"] = ak_r_star(*c.n, as_alphabet(*c.q), *c.t);
    body["citation"] = "largest r with t + 2r < min(n + 1, t + 2(t-1)/(q-2))";
  } else if (c.kind == "ak-size") {
    const auto r = c.r.value_or(ak_r_star(*c.n, as_alphabet(*c.q), *c.t));
    body["r"] = r;
    body["value"] = json_number(ak_anticode_size(*c.n, as_alphabet(*c.q), *c.t, r));
    body["citation"] = "|K_r| = sum_{i <= r} (q-1)^i C(t+2r, i) q^(n-t-2r)";
  } else if (c.kind == "split") {
    const auto parts = static_cast<unsigned>(c.parts.value_or(3));
    try {
      body.update(to_json(split_into_primes(*c.s, parts)));
    } catch (const NoSplitError& e) {
      body["error"] = e.what();
      emit(c, body, out);
      return kAbsent;
    }
  } else if (c.kind == "entropy") {
    std::ostringstream v;
    v.precision(17);
    v << binary_entropy(*c.x);
    body["value"] = v.str();
  } else if (c.kind == "ledger") {
    LedgerOptions opt;
    if (c.petals) opt.petals = static_cast<unsigned>(*c.petals);
    if (c.eta) opt.eta = *c.eta;
    if (c.q) opt.q = static_cast<unsigned>(*c.q);
    if (c.n) opt.n = *c.n;
    body.update(to_json(constant_ledger(*c.eps, *ledger_context(c.context), opt)));
  }
  emit(c, body, out);
  return kSuccess;
}

template <class W, class Writer>
int finish_search(const RunConfig& c, const SearchResult<W>& r, Writer write, std::ostream& out) {
  if (c.witness) write(*c.witness);
  Json body = {{"kind", c.kind}};
  body.update(to_json(r, c.witness.value_or("")));
  emit(c, body, out);
  return r.status == ProofStatus::optimal ? kSuccess : kBudget;
}

inline int run_search(const RunConfig& c, std::ostream& out) {
  const SearchOptions o = search_options(c);
  if (c.kind == "code") {
    const std::set<std::size_t> f(c.forbid.begin(), c.forbid.end());
    auto r = max_code_avoiding(*c.n, as_alphabet(*c.q), f, o);
    return finish_search(c, r, [&](const std::string& p) { write_code(r.witness, p); }, out);
  }
  if (c.kind == "family") {
    auto r = max_avoiding_family(*c.n, *c.k, *c.l, o);
    return finish_search(c, r, [&](const std::string& p) { write_family(r.witness, r.witness.k(), p); }, out);
  }
  if (c.kind == "perm") {
    auto r = max_perm_family_avoiding(*c.n, *c.d, o);
    return finish_search(c, r, [&](const std::string& p) { write_code(r.witness.as_code(), p); }, out);
  }
  auto r = max_code_with_diameter(*c.n, as_alphabet(*c.q), *c.t, o);
  return finish_search(c, r, [&](const std::string& p) { write_code(r.witness, p); }, out);
}

inline void write_output(const RunConfig& c, const std::function<void(std::ostream&)>& body, std::ostream& out,
                         const std::string& suffix = "") {
  if (c.output) {
    auto f = forbid::detail::open_out(*c.output + suffix);
    body(f);
  } else {
    body(out);
  }
}

inline int run_construct(const RunConfig& c, std::ostream& out) {
  Json body = {{"construction", c.kind}};
  if (c.kind == "parity") {
    const Code code = parity_code(*c.n);
    write_output(c, [&](std::ostream& o) { write_code(code, o); }, out);
    body["size"] = code.size();
  } else if (c.kind == "anticode") {
    const Code code = ak_anticode(*c.n, as_alphabet(*c.q), *c.t, *c.r);
    write_output(c, [&](std::ostream& o) { write_code(code, o); }, out);
    body["size"] = code.size();
    body["distinguished_symbol"] = 0;
  } else if (c.kind == "large-small") {
    const SetFamily f = large_small_family(*c.n, *c.l, c.augment);
    write_output(c, [&](std::ostream& o) { write_family(f, std::nullopt, o); }, out);
    body["size"] = f.size();
    body["large_threshold"] = large_threshold(*c.n, *c.l);
    body["l_avoiding"] = is_l_avoiding(f, *c.l);
  } else if (c.kind == "perm-blocks") {
    const auto [a1, a2] = perm_block_families(*c.n);
    if (c.output) {
      write_output(c, [&](std::ostream& o) { write_code(a1.as_code(), o); }, out, ".1");
      write_output(c, [&](std::ostream& o) { write_code(a2.as_code(), o); }, out, ".2");
    } else {
      out << "# A1\n";
      write_code(a1.as_code(), out);
      out << "# A2\n";
      write_code(a2.as_code(), out);
    }
    body["size"] = a1.size();
  } else {
    const PermFamily f = perm_avoiding_construction(*c.n, *c.d);
    write_output(c, [&](std::ostream& o) { write_code(f.as_code(), o); }, out);
    body["size"] = f.size();
  }
  body["output"] = c.output ? Json(*c.output) : Json(nullptr);
  if (c.format == OutputFormat::json) emit(c, body, out);
  return kSuccess;
}

}  // namespace detail

/// Executes a parsed configuration, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  using namespace detail;
  try {
    switch (c.subcommand) {
      case Subcommand::bounds:
        return run_bounds(c, out);
      case Subcommand::search:
        return run_search(c, out);
      case Subcommand::construct:
        return run_construct(c, out);
      case Subcommand::pairs: {
        const Code code = load_code(c, err, c.input);
        const auto pair = find_pair_at_distance(code, *c.d);
        Json body = {{"d", *c.d}, {"count", count_pairs_at_distance(code, *c.d)}, {"first_pair", pair_json(pair)}};
        emit(c, body, out);
        return pair ? kSuccess : kAbsent;
      }
      case Subcommand::extract: {
        const Code code = load_code(c, err, c.input);
        if (c.drc) {
          const std::size_t n1 = c.split.value_or((code.length() + 1) / 2);
          if (n1 > code.length()) throw DomainError("--split exceeds the code length");
          const BipartiteCodeGraph g = build_bipartite(code, CoordinatePartition::contiguous({n1, code.length() - n1}));
          const DrcOutcome o = drc_sample(g, c.drc_t, c.seed, c.retries);
          Json body = to_json(o);
          body["alpha"] = json_number(g.alpha());
          body["guarantees_hold"] = satisfies_guarantees(g, o);
          emit(c, body, out);
          return o.success ? kSuccess : kAbsent;
        }
        ExtractOptions opt;
        opt.t = c.drc_t;
        opt.max_retries = c.retries;
        opt.strict = c.strict;
        const PairExtraction e = extract_distance_pair(code, *c.d, *c.eps, c.seed, opt);
        emit(c, to_json(e), out);
        return e.pair ? kSuccess : kAbsent;
      }
      case Subcommand::sunflower: {
        const Code code = load_code(c, err, c.input);
        if (c.d) {
          ExtractOptions opt;
          opt.t = c.drc_t;
          opt.max_retries = c.retries;
          const SunflowerExtraction e = sunflower_cube_extract(code, *c.k, *c.d, c.seed, opt);
          emit(c, to_json(e), out);
          return e.witness ? kSuccess : kAbsent;
        }
        const auto w = c.strong ? find_strong_sunflower(code, *c.k) : find_weak_sunflower(code, *c.k);
        emit(c, {{"found", w.has_value()}, {"witness", w ? to_json(*w) : Json(nullptr)}}, out);
        return w ? kSuccess : kAbsent;
      }
      case Subcommand::cross: {
        const Code C = load_code(c, err, c.input);
        const Code D = load_code(c, err, c.against);
        const CrossPairReport r = cross_pair_finder(C, D, *c.d, *c.gamma);
        if (r.dropped) err << "warning: " << r.dropped << " word(s) of C have no partner within gamma n\n";
        emit(c, to_json(r), out);
        return r.pair ? kSuccess : kAbsent;
      }
      case Subcommand::supersat: {
        const Code code = load_code(c, err, c.input);
        const CaptureExperiment e = supersat_experiment(code, *c.d, *c.eta, c.trials.value_or(10000), c.seed, c.threads);
        emit(c, to_json(e), out);
        return kSuccess;
      }
    }
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

/// parse_args + run with the exit-code mapping applied to usage errors.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig c;
  try {
    c = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return run(c, out, err);
}

}  // namespace forbid::cli

#endif  // FORBID_CLI_HPP
