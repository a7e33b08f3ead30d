#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npsplit/bits.hpp"

namespace npsplit {

// Deterministic single-work-tape oracle Turing machine.
//
// Model: one two-way infinite work tape over {0, 1, blank} plus a write-only
// query tape. A transition reads the work-tape cell and performs one action:
// write 0/1/blank to the cell, or leave the cell unchanged and append 0/1 to
// the query tape. Entering query_state consults the oracle on the query tape
// content (one step), clears it, and moves to yes_state or no_state.
// Accept and reject states halt; a missing transition in any other state
// halts as a reject.
//
// Step accounting: one transition = one step; one oracle consultation = one
// step regardless of query length. A host-level simulator executes the
// machines directly, so the overhead a real universal machine would add on
// top of the simulated steps is not modeled.

enum class Sym : uint8_t { Zero = 0, One = 1, Blank = 2 };

enum class Move : uint8_t { Left = 0, Right = 1, Stay = 2 };

// Work-tape write, or query-tape append (which leaves the cell unchanged).
enum class Action : uint8_t {
  Write0 = 0,
  Write1 = 1,
  WriteBlank = 2,
  AppendQ0 = 3,
  AppendQ1 = 4,
};

struct Transition {
  uint32_t next_state = 0;
  Action action = Action::WriteBlank;
  Move move = Move::Stay;

  bool operator==(const Transition&) const = default;
};

struct MachineDescription {
  uint32_t state_count = 0;
  uint32_t start_state = 0;
  uint32_t accept_state = 0;
  uint32_t reject_state = 0;
  uint32_t query_state = 0;
  uint32_t yes_state = 0;
  uint32_t no_state = 0;
  // Keyed by (state, read symbol); the map keeps the canonical order used by
  // the binary encoding.
  std::map<std::pair<uint32_t, Sym>, Transition> transitions;

  bool operator==(const MachineDescription&) const = default;
};

// Empty string means well-formed; otherwise a human-readable reason.
// Well-formedness: state_count >= 1, every referenced state id is in range,
// accept != reject, query is neither accept nor reject, and no transition
// leaves accept, reject or the query state.
std::string validate(const MachineDescription& m);

enum class Verdict : uint8_t { Accepted, Rejected, BudgetExhausted };

const char* to_string(Verdict v);

struct RunOutcome {
  Verdict verdict = Verdict::Rejected;
  uint64_t steps_used = 0;
  std::vector<std::pair<Bits, bool>> queries;  // in consultation order
  uint64_t max_query_length = 0;               // 0 if no queries

  bool operator==(const RunOutcome&) const = default;
};

using Oracle = std::function<bool(const Bits&)>;

// One machine configuration; exposed for tests and step-level debugging.
struct Configuration {
  uint32_t state = 0;
  std::vector<Sym> tape_right;  // cells 0, 1, 2, ...
  std::vector<Sym> tape_left;   // cells -1, -2, ...
  int64_t head = 0;
  Bits query_tape;
  uint64_t steps_taken = 0;

  Sym read() const;
  void write(Sym s);
};

// Simulates m on input from start_state under the step budget.
// Throws MachineError if the machine fails validate().
RunOutcome run(const MachineDescription& m, const Bits& input, uint64_t budget,
               const Oracle& oracle);

// Total decoding of bitstrings into machines. Any code that is not the exact
// canonical encoding of a well-formed machine yields the dummy one-step
// rejector, so every bitstring names some machine.
MachineDescription decode_program(const Bits& code);

// Canonical encoding; decode_program(encode_program(m)) == m for every
// well-formed m. Throws MachineError on a malformed machine.
Bits encode_program(const MachineDescription& m);

// Fixture machines.
MachineDescription dummy_machine();    // rejects any input in one step
MachineDescription always_reject();    // alias of dummy_machine
MachineDescription always_accept();    // accepts any input in one step
MachineDescription copier_query();     // copies input to the query tape, queries, accepts iff yes

// Canonical text format:
//   states N
//   start I / accept I / reject I / query I / yes I / no I
//   one line per transition: `state symbol -> state action move`
// with symbols {0, 1, _}, actions {0, 1, _, q0, q1}, moves {L, R, S}.
// '#' starts a comment; blank lines are ignored.
std::string machine_to_text(const MachineDescription& m);
MachineDescription machine_from_text(const std::string& text);  // throws MachineError
MachineDescription machine_from_file(const std::string& path);  // throws MachineError

}  // namespace npsplit
