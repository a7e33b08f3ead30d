#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npsplit/bits.hpp"
#include "npsplit/enumeration.hpp"
#include "npsplit/sdecider.hpp"

namespace npsplit {

// Delayed/team diagonalization: a nondecreasing splitting function r, built
// step by step, whose residue mod k routes every input length into one of k
// parts of the base set S. Extending r from i to i+1 targets machine
// M_{floor(r(i)/k)}: if the gate says the look-back is affordable, the engine
// hunts for a short witness y on which SAT and the clocked machine (run
// against the currently frozen part) disagree, and r advances exactly when
// one is found.

// Named depth functions: how far back (in witness length) step i may look.
//   dloglog: floor(log2(max(1, floor(log2 i)))) for i >= 2, else 0
//   dlog:    floor(log2 i) for i >= 1, else 0 (accelerated; gate-starved in
//            practice, since the affordability test then never clears at
//            target index 1 — kept for experiments)
enum class DepthFn : uint8_t { DLogLog = 0, DLog = 1 };

const char* depth_fn_name(DepthFn f);
std::optional<DepthFn> depth_fn_from_name(const std::string& name);
uint64_t depth_value(DepthFn f, uint64_t i);

struct EngineConfig {
  SDecider s_decider;                 // defaults to the SAT brute-forcer, c = 2
  unsigned team_count = 2;            // k >= 2
  DepthFn depth_fn = DepthFn::DLogLog;
  EnumerationMode enumeration;        // goedel unless a roster is configured
  uint64_t initial_r = 2;

  EngineConfig();
};

// One record per computed extension i -> i+1.
struct DiagEvent {
  uint64_t i = 0;
  uint64_t r_i = 0;
  uint64_t target_index = 0;        // floor(r_i / k)
  unsigned oracle_part = 0;         // (r_i + 1) mod k
  uint64_t depth = 0;               // depth_fn(i)
  bool gate_failed = false;
  bool advanced = false;
  std::optional<Bits> witness;
  uint64_t strings_examined = 0;    // <= 2^(depth+1) - 1
  uint64_t max_query_length = 0;    // max oracle-query length seen; < i when the gate passed

  bool operator==(const DiagEvent&) const = default;
};

// Memoized r values plus the event log that produced them.
// values[0..2] equal initial_r; events[t] is the extension at i = t + 2.
struct RTable {
  std::vector<uint64_t> values;
  std::vector<DiagEvent> events;

  bool operator==(const RTable&) const = default;
};

// The affordability test of the construction: with j = floor(r_i / k) and
// T = depth^j + j, the diagonalization at step i is skipped (returns true)
// iff cost(T) >= i, i.e. iff deciding S on the longest possible oracle query
// would already cost more than the polynomial-in-i allowance. Exact integer
// arithmetic throughout; T uses the convention 0^0 = 0. Requires i >= 2.
bool eq1_gate(uint64_t i, uint64_t r_i, const EngineConfig& config);

// Membership of q in part: q in S and r(|q|) has the part's residue mod k.
// Throws CircularityError when r(|q|) is not yet in the table; the gate is
// supposed to make that unreachable.
bool oracle_answer(unsigned part, const Bits& q, const RTable& table,
                   const EngineConfig& config);

// The witness condition: y in SAT xor M_target accepts y when its oracle is
// the given part of the table built so far. Every oracle query is checked to
// be shorter than i; a longer query aborts with CircularityError.
bool check_witness(const Bits& y, uint64_t i, uint64_t target_index, unsigned part,
                   const RTable& table, const EngineConfig& config);

class SplitEngine {
 public:
  explicit SplitEngine(EngineConfig config);

  const EngineConfig& config() const { return config_; }
  const RTable& table() const { return table_; }

  // Replaces the table with a cached one after validating the table laws
  // against this config. Returns false (and keeps the current table) if the
  // cache is inconsistent. Fingerprint checking is the caller's job.
  bool adopt(RTable cached);

  // Ensures values[0..n] exist. Extension is strictly sequential; do not
  // call concurrently with anything else on the same engine.
  void materialize(uint64_t n);

  uint64_t r(uint64_t n);

  // One extension step; returns the recorded event.
  const DiagEvent& extend();

  // x in S and r(|x|) ≡ part (mod k). Part 0 is A, part 1 is B, and so on.
  // Runs the exponential-time S decider; that cost is inherent in realizing
  // the definitions directly.
  bool member_part(const Bits& x, unsigned part);

  // The polynomial separator for k = 2: r(|x|) even, no reference to S.
  // A is contained in D and B misses it. Throws ConfigError when k != 2.
  bool member_D(const Bits& x);

 private:
  EngineConfig config_;
  RTable table_;
};

}  // namespace npsplit
