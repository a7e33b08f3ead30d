#include "npsplit/suites.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "npsplit/cnf.hpp"
#include "npsplit/config.hpp"
#include "npsplit/errors.hpp"
#include "npsplit/optp.hpp"
#include "npsplit/tracefmt.hpp"

namespace npsplit {

bool SuiteReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::string show(const Bits& x) { return x.empty() ? "(empty)" : x; }

struct SuiteBuilder {
  SuiteReport report;

  void add(std::string description, bool ok, std::string counterexample = {}) {
    if (!ok && counterexample.empty()) counterexample = "(no detail recorded)";
    if (ok) counterexample.clear();
    report.checks.push_back({std::move(description), ok, std::move(counterexample)});
  }
};

// A pass/fail accumulator that keeps the first counterexample only.
struct Law {
  bool ok = true;
  std::string counterexample;

  void require(bool condition, const std::string& cx) {
    if (ok && !condition) {
      ok = false;
      counterexample = cx;
    }
  }
};

void require_sat_decider(const EngineConfig& config, const char* suite) {
  if (config.s_decider.name != "sat-brute")
    throw ConfigError(std::string(suite) +
                      ": membership scans compare against sat_brute, so the "
                      "config must use the sat-brute decider");
}

// Shared by the partition and kway suites: exhaustive membership scan of all
// strings up to maxlen against the independent brute-force SAT decider.
void partition_checks(SuiteBuilder& b, const EngineConfig& config, uint64_t maxlen) {
  require_sat_decider(config, "partition scan");
  SplitEngine engine(config);
  engine.materialize(maxlen);
  unsigned k = config.team_count;

  Law disjoint, cover, strong;
  std::vector<std::set<unsigned>> parts_at_length(maxlen + 1);
  for_each_string_length_lex(maxlen, [&](const Bits& x) {
    unsigned hits = 0;
    for (unsigned p = 0; p < k; ++p) {
      if (engine.member_part(x, p)) {
        ++hits;
        parts_at_length[x.size()].insert(p);
      }
    }
    disjoint.require(hits <= 1, "x = " + show(x) + " lies in " + std::to_string(hits) + " parts");
    bool in_s = sat_brute(x);
    cover.require((hits == 1) == in_s,
                  "x = " + show(x) + ": in S = " + (in_s ? "1" : "0") + " but " +
                      std::to_string(hits) + " parts claim it");
    return false;
  });
  for (uint64_t len = 0; len <= maxlen; ++len)
    strong.require(parts_at_length[len].size() <= 1,
                   "length " + std::to_string(len) + " feeds " +
                       std::to_string(parts_at_length[len].size()) + " parts");

  std::string range = " (all |x| <= " + std::to_string(maxlen) + ")";
  b.add("no string lies in two parts" + range, disjoint.ok, disjoint.counterexample);
  b.add("union of the parts is exactly S" + range, cover.ok, cover.counterexample);
  b.add("every length feeds at most one part" + range, strong.ok, strong.counterexample);

  if (k == 2) {
    Law a_in_d, b_misses_d;
    for_each_string_length_lex(maxlen, [&](const Bits& x) {
      bool in_d = engine.member_D(x);
      if (engine.member_part(x, 0))
        a_in_d.require(in_d, "x = " + show(x) + " is in A but not in D");
      if (engine.member_part(x, 1))
        b_misses_d.require(!in_d, "x = " + show(x) + " is in B and in D");
      return false;
    });
    b.add("A is contained in the separator D" + range, a_in_d.ok, a_in_d.counterexample);
    b.add("B never meets the separator D" + range, b_misses_d.ok, b_misses_d.counterexample);
  }
}

SuiteReport suite_partition(const EngineConfig& config, const SuiteBounds& bounds) {
  SuiteBuilder b;
  partition_checks(b, config, bounds.maxlen);
  return std::move(b.report);
}

SuiteReport suite_rtable(const EngineConfig& config, const SuiteBounds& bounds) {
  SuiteBuilder b;
  uint64_t n = bounds.upto;

  SplitEngine engine(config);
  engine.materialize(n);
  const RTable& table = engine.table();

  Law initial, steps;
  for (uint64_t i = 0; i < 3; ++i)
    initial.require(table.values[i] == config.initial_r,
                    "r(" + std::to_string(i) + ") = " + std::to_string(table.values[i]));
  for (uint64_t i = 0; i + 1 < table.values.size(); ++i) {
    uint64_t a = table.values[i], c = table.values[i + 1];
    steps.require(c == a || c == a + 1,
                  "r(" + std::to_string(i) + ") = " + std::to_string(a) + " then " +
                      std::to_string(c));
  }
  b.add("r(0), r(1), r(2) all equal the initial value", initial.ok, initial.counterexample);
  b.add("r is nondecreasing with increments in {0, 1} up to n = " + std::to_string(n),
        steps.ok, steps.counterexample);

  SplitEngine replay(config);
  replay.materialize(n);
  b.add("recomputing from scratch reproduces the table bit for bit",
        replay.table() == table, "second run diverged");

  std::string fp = config_fingerprint(config);
  ImportedTable imported = import_table_text(export_table_text(table, fp));
  b.add("text export then import is the identity on the table",
        imported.fingerprint == fp && imported.table == table, "round-trip diverged");

  SplitEngine prefix(config);
  prefix.materialize(n / 2);
  ImportedTable cached = import_table_text(export_table_text(prefix.table(), fp));
  SplitEngine resumed(config);
  bool adopted = resumed.adopt(std::move(cached.table));
  resumed.materialize(n);
  b.add("resuming from a cached prefix matches the scratch run",
        adopted && resumed.table() == table,
        adopted ? "resumed run diverged" : "cache prefix was rejected");

  return std::move(b.report);
}

SuiteReport suite_noncircular(const EngineConfig& config, const SuiteBounds& bounds) {
  SuiteBuilder b;
  SplitEngine engine(config);
  engine.materialize(bounds.upto);

  Law lookback, budget, examined, shape;
  for (const DiagEvent& ev : engine.table().events) {
    std::string at = "i = " + std::to_string(ev.i);
    if (!ev.gate_failed)
      lookback.require(ev.max_query_length < ev.i,
                       at + ": query length " + std::to_string(ev.max_query_length));
    BigNat bound = ipow(BigNat(ev.depth), BigNat(ev.target_index), 0) + ev.target_index;
    budget.require(BigNat(ev.max_query_length) <= bound,
                   at + ": query length " + std::to_string(ev.max_query_length) +
                       " exceeds depth^j + j");
    BigNat cap = (BigNat(1) << (ev.depth + 1)) - 1;
    examined.require(BigNat(ev.strings_examined) <= cap,
                     at + ": examined " + std::to_string(ev.strings_examined));
    shape.require(!ev.advanced || (!ev.gate_failed && ev.witness.has_value()),
                  at + ": advanced without a witness");
    shape.require(!ev.gate_failed ||
                      (!ev.witness.has_value() && ev.strings_examined == 0 &&
                       ev.max_query_length == 0),
                  at + ": gate failure with leftover search state");
  }
  std::string range = " for all i <= " + std::to_string(bounds.upto);
  b.add("oracle queries stay shorter than i whenever the gate passed" + range,
        lookback.ok, lookback.counterexample);
  b.add("oracle queries respect the depth^j + j budget" + range, budget.ok,
        budget.counterexample);
  b.add("witness searches examine at most 2^(depth+1) - 1 strings" + range,
        examined.ok, examined.counterexample);
  b.add("event flags are internally consistent" + range, shape.ok, shape.counterexample);
  return std::move(b.report);
}

SuiteReport suite_gate_oracle(const EngineConfig& config, const SuiteBounds& bounds) {
  SuiteBuilder b;
  unsigned c = config.s_decider.exponent_c;
  unsigned k = config.team_count;

  // Independent route: materialize 2^E outright for small E; for E > 64 use
  // monotonicity through the materialized anchor 2^65, which already exceeds
  // any uint64 threshold. No exponent-domain comparison is involved.
  auto direct = [&](const BigNat& exponent, uint64_t i) {
    if (exponent <= 64)
      return (BigNat(1) << static_cast<unsigned>(exponent)) >= i;
    return (BigNat(1) << 65) >= i;  // 2^E >= 2^65 >= i
  };

  // Exponent cache per (depth, r) pair; the depth takes few distinct values.
  std::map<std::pair<uint64_t, uint64_t>, BigNat> exponents;
  auto exponent_of = [&](uint64_t depth, uint64_t r_i) -> const BigNat& {
    auto key = std::make_pair(depth, r_i);
    auto it = exponents.find(key);
    if (it == exponents.end()) {
      uint64_t j = r_i / k;
      BigNat bound = ipow(BigNat(depth), BigNat(j), 0) + j;
      it = exponents.emplace(key, ipow(bound, c)).first;
    }
    return it->second;
  };

  Law agree;
  uint64_t mismatches = 0;
  for (uint64_t i = 2; i <= bounds.gate_upto; ++i) {
    uint64_t depth = depth_value(config.depth_fn, i);
    for (uint64_t r_i = 0; r_i <= bounds.rmax; ++r_i) {
      bool expected = direct(exponent_of(depth, r_i), i);
      bool got = eq1_gate(i, r_i, config);
      if (expected != got) {
        ++mismatches;
        agree.require(false, "i = " + std::to_string(i) + ", r = " + std::to_string(r_i) +
                                 ": direct " + (expected ? "1" : "0") + ", gate " +
                                 (got ? "1" : "0"));
      }
    }
  }
  b.add("exponent-domain gate matches direct big-integer evaluation (i <= " +
            std::to_string(bounds.gate_upto) + ", r <= " + std::to_string(bounds.rmax) +
            "), mismatches = " + std::to_string(mismatches),
        agree.ok, agree.counterexample);
  return std::move(b.report);
}

SuiteReport suite_compose(const EngineConfig& config, const SuiteBounds& bounds) {
  SuiteBuilder b;
  require_sat_decider(config, "compose");
  if (config.team_count != 2)
    throw ConfigError("compose: the f/g construction is defined over a 2-way split");

  SplitEngine engine(config);
  engine.materialize(bounds.maxlen);
  SplitHandles h = make_handles(engine);

  Law length, pointwise, one_bit, constant_on_a;
  for_each_string_length_lex(bounds.maxlen, [&](const Bits& x) {
    Bits fx = compose_f(x, h);
    Bits gfx = compose_g(fx, h);
    length.require(fx.size() == x.size() + 1, "x = " + show(x) + ": |f(x)| = " +
                                                  std::to_string(fx.size()));
    one_bit.require(gfx.size() == 1, "x = " + show(x) + ": g emitted " + gfx);
    bool in_s = sat_brute(x);
    pointwise.require((gfx == "1") == in_s,
                      "x = " + show(x) + ": g(f(x)) = " + gfx + ", chi_S = " +
                          (in_s ? "1" : "0"));
    if (h.member_A(x))
      constant_on_a.require(fx == Bits(x.size() + 1, '1') && gfx == "1",
                            "x = " + show(x) + " in A but f(x) = " + fx);
    return false;
  });
  std::string range = " (all |x| <= " + std::to_string(bounds.maxlen) + ")";
  b.add("|f(x)| = |x| + 1" + range, length.ok, length.counterexample);
  b.add("g emits exactly one bit" + range, one_bit.ok, one_bit.counterexample);
  b.add("g(f(x)) = 1 exactly on S" + range, pointwise.ok, pointwise.counterexample);
  b.add("f collapses A to all-ones and g fires on it" + range, constant_on_a.ok,
        constant_on_a.counterexample);
  return std::move(b.report);
}

SuiteReport suite_enumeration(const EngineConfig&, const SuiteBounds&) {
  SuiteBuilder b;
  EnumerationMode goedel;  // the suite is about the faithful mode

  // The dummy rejector's preimage is dense (every malformed code), so a
  // small scan bound suffices.
  {
    auto indices = indices_of_program(dummy_machine(), 100, goedel);
    Law ok;
    ok.require(indices.size() >= 2,
               "found " + std::to_string(indices.size()) + " indices within 100");
    for (const BigNat& j : indices)
      ok.require(index_to_machine(j, goedel).program == dummy_machine(),
                 "index " + j.str() + " does not decode to the dummy");
    b.add("dummy rejector recurs at least twice within index 100", ok.ok,
          ok.counterexample);
  }

  // Non-dummy fixtures recur by the pairing construction; the documented
  // search bound for a second occurrence is pair(code, 1) + 1.
  struct Fixture {
    const char* name;
    MachineDescription program;
  };
  for (const Fixture& fx : {Fixture{"always-accept", always_accept()},
                            Fixture{"copier-query", copier_query()}}) {
    BigNat code = string_to_nat(encode_program(fx.program));
    BigNat limit = cantor_pair(code, 1) + 1;
    auto indices = indices_of_program(fx.program, limit, goedel);
    Law ok;
    ok.require(indices.size() >= 2,
               "found " + std::to_string(indices.size()) + " indices");
    for (const BigNat& j : indices)
      ok.require(index_to_machine(j, goedel).program == fx.program,
                 "index " + j.str() + " does not decode back to the program");
    if (indices.size() >= 2)
      ok.require(indices[0] != indices[1], "duplicate index reported");
    b.add(std::string(fx.name) + " recurs at least twice within pair(code, 1) + 1",
          ok.ok, ok.counterexample);
  }
  return std::move(b.report);
}

SuiteReport suite_kway(const EngineConfig& config, const SuiteBounds& bounds) {
  SuiteBuilder b;
  if (config.team_count < 3)
    throw ConfigError("kway: expects a team count of at least 3");
  partition_checks(b, config, bounds.maxlen);

  SplitEngine engine(config);
  engine.materialize(bounds.upto);
  unsigned k = config.team_count;

  // Observed (target, part) pairs per r value.
  std::map<uint64_t, std::set<std::pair<uint64_t, unsigned>>> pairs;
  Law routed;
  for (const DiagEvent& ev : engine.table().events) {
    pairs[ev.r_i].insert({ev.target_index, ev.oracle_part});
    routed.require(ev.oracle_part != ev.r_i % k,
                   "i = " + std::to_string(ev.i) + ": diagonalizing against the part "
                   "that is currently collecting");
  }
  b.add("the diagonalized part always differs from the collecting residue",
        routed.ok, routed.counterexample);

  Law coverage;
  uint64_t blocks = 0;
  if (!pairs.empty()) {
    uint64_t max_r = pairs.rbegin()->first;
    for (uint64_t v0 = 0; v0 + k - 1 <= max_r; v0 += k) {
      bool complete = true;
      for (unsigned d = 0; d < k; ++d)
        if (!pairs.count(v0 + d)) complete = false;
      if (!complete) continue;
      ++blocks;
      std::set<unsigned> parts_seen;
      std::string at = "block r in [" + std::to_string(v0) + ", " +
                       std::to_string(v0 + k - 1) + "]";
      for (unsigned d = 0; d < k; ++d) {
        const auto& set = pairs[v0 + d];
        coverage.require(set.size() == 1, at + ": several pairings at one r value");
        for (const auto& [target, part] : set) {
          coverage.require(target == v0 / k, at + ": target drifted within the block");
          parts_seen.insert(part);
        }
      }
      coverage.require(parts_seen.size() == k, at + ": parts covered " +
                                                   std::to_string(parts_seen.size()) +
                                                   " of " + std::to_string(k));
    }
  }
  b.add("each complete block pairs the target with every part exactly once (" +
            std::to_string(blocks) + " complete blocks observed)",
        coverage.ok, coverage.counterexample);
  if (bounds.require_blocks > 0)
    b.add("at least " + std::to_string(bounds.require_blocks) +
              " complete blocks appear in the event log",
          blocks >= bounds.require_blocks, "observed " + std::to_string(blocks));
  return std::move(b.report);
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"partition", "rtable", "noncircular", "gate-oracle",
          "compose",   "enumeration", "kway"};
}

SuiteReport run_suite(const std::string& name, const EngineConfig& config,
                      const SuiteBounds& bounds) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  if (name == "partition") report = suite_partition(config, bounds);
  else if (name == "rtable") report = suite_rtable(config, bounds);
  else if (name == "noncircular") report = suite_noncircular(config, bounds);
  else if (name == "gate-oracle") report = suite_gate_oracle(config, bounds);
  else if (name == "compose") report = suite_compose(config, bounds);
  else if (name == "enumeration") report = suite_enumeration(config, bounds);
  else if (name == "kway") report = suite_kway(config, bounds);
  else throw ConfigError("unknown suite: " + name);
  report.suite = name;
  report.config_fingerprint = config_fingerprint(config);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void print_report(std::ostream& os, const SuiteReport& report) {
  os << "suite " << report.suite << "  config " << report.config_fingerprint << "\n";
  size_t passed = 0;
  for (const CheckResult& c : report.checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.description;
    if (!c.passed) os << "\n         counterexample: " << c.counterexample;
    os << "\n";
    if (c.passed) ++passed;
  }
  os << "  " << passed << "/" << report.checks.size() << " checks passed in "
     << report.wall_seconds << " s\n";
}

}  // namespace npsplit
