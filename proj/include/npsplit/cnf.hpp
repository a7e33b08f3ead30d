#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npsplit/bits.hpp"

namespace npsplit {

struct Literal {
  uint32_t var = 0;
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;  // nonempty

struct CnfFormula {
  uint32_t variable_count = 0;  // >= 1
  std::vector<Clause> clauses;  // at least one clause, each nonempty

  bool operator==(const CnfFormula&) const = default;
};

// Self-delimiting binary encoding of CNF formulas, so that every bitstring
// is classifiable (undecodable strings are simply non-members of SAT):
//
//   formula  := unary(variable_count) clause (more=1 clause)* more=0
//   clause   := literal (more=1 literal)* more=0
//   literal  := sign ('1' positive, '0' negated) + var index, fixed width
//   unary(n) := (n-1) ones then a zero
//
// The var-index width is the bit length of variable_count - 1 (zero bits when
// there is a single variable). Decoding requires exact consumption and
// in-range indices. The shortest valid codeword has four bits, e.g. "0100"
// encodes the single clause (v0).
std::optional<CnfFormula> decode_cnf(const Bits& y);

// Exact inverse of decode_cnf. Throws ConfigError if the formula violates the
// type's invariants (no variables, no clauses, an empty clause, or an
// out-of-range literal).
Bits encode_cnf(const CnfFormula& f);

// True iff every clause has a true literal under the assignment whose bit v
// (from the least significant end) gives the value of variable v.
bool evaluate(const CnfFormula& f, uint64_t assignment);

// Membership in SAT over the codeword language: decodable and satisfiable,
// determined by exhaustive search over all 2^variable_count assignments.
// Deliberately not a real solver. Refuses formulas with more than 28
// variables, which no gate-bounded engine query can reach.
bool sat_brute(const Bits& y);

struct SatWork {
  bool satisfiable = false;
  // Work metric: |y| for the decode scan plus one unit per literal
  // evaluation performed during the assignment search.
  uint64_t work = 0;
};

SatWork sat_brute_metered(const Bits& y);

// Renders e.g. "(v0 | ~v1) & (v2)" for CLI output.
std::string cnf_to_string(const CnfFormula& f);

}  // namespace npsplit
