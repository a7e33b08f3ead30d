#pragma once

#include <vector>

#include "npsplit/bits.hpp"
#include "npsplit/machine.hpp"

namespace npsplit {

// The clocked enumeration M_1, M_2, ... of deterministic oracle machines.
// M_j is cut off after |x|^j + j steps, independently of its oracle.
//
// goedel mode: index j unpairs into (a, b); a names the program code under
// the length-lex bijection between naturals and bitstrings, b is ignored, so
// every program recurs for infinitely many j and therefore with arbitrarily
// large clock exponents. Codes that are not canonical encodings decode to the
// one-step dummy rejector.
//
// roster mode: a hand-chosen machine list repeats cyclically, which places
// interesting machines at small indices while keeping the clock law intact.
// Desk-scale device; goedel mode is the faithful construction.

enum class EnumKind : uint8_t { Goedel = 0, Roster = 1 };

struct EnumerationMode {
  EnumKind kind = EnumKind::Goedel;
  std::vector<MachineDescription> roster;  // used only in roster mode

  bool operator==(const EnumerationMode&) const = default;
};

struct ClockedMachine {
  BigNat index;           // the j of M_j, >= 1
  MachineDescription program;
  BigNat clock_exponent;  // equal to index; budget on x is |x|^j + j
};

// Cantor diagonal pairing and its inverse, exposed because tests and
// indices_of_program invert the enumeration through them.
BigNat cantor_pair(const BigNat& a, const BigNat& b);
std::pair<BigNat, BigNat> cantor_unpair(const BigNat& z);

// Throws ConfigError on j == 0 or an invalid mode (empty roster).
ClockedMachine index_to_machine(const BigNat& j, const EnumerationMode& mode);

// |x|^j + j, saturated at 2^64 - 1. No terminating desk-scale run can reach
// that many steps, so saturation never changes a verdict.
uint64_t clock_budget(uint64_t input_length, const BigNat& j);

// True iff M_j accepts x within its clock, under the given oracle; both a
// reject and an exhausted budget count as non-acceptance. Index 0 is
// accepted here and behaves as a one-step rejector with budget 1: k-way
// splits target index floor(r/k) = 0 while r < k, and this is the machine
// that stands in for it.
bool universal_accepts(const BigNat& j, const Bits& x, const Oracle& oracle,
                       const EnumerationMode& mode);

// All j <= limit whose program equals p, ascending. For limits up to 2^20
// this is a direct scan. Beyond that, goedel mode inverts the pairing from
// p's unique canonical code — exact for every machine except the dummy
// rejector, whose preimage (every malformed code) is too dense to report;
// that combination throws ConfigError.
std::vector<BigNat> indices_of_program(const MachineDescription& p, const BigNat& limit,
                                       const EnumerationMode& mode);

}  // namespace npsplit
