#pragma once

#include <random>
#include <set>

#include "npsplit/machine.hpp"

namespace npsplit::testing {

// Minimal machine skeleton with the usual distinguished-state layout:
// 0 = start, 1 = accept, 2 = reject, 3 = query (yes -> 1, no -> 2).
inline MachineDescription skeleton(uint32_t state_count = 4) {
  MachineDescription m;
  m.state_count = state_count;
  m.start_state = 0;
  m.accept_state = 1;
  m.reject_state = 2;
  m.query_state = 3;
  m.yes_state = 1;
  m.no_state = 2;
  return m;
}

// Start state jumps straight to accept on any symbol.
inline MachineDescription immediate_accept() {
  MachineDescription m = skeleton();
  m.transitions[{0, Sym::Zero}] = {1, Action::Write0, Move::Stay};
  m.transitions[{0, Sym::One}] = {1, Action::Write1, Move::Stay};
  m.transitions[{0, Sym::Blank}] = {1, Action::WriteBlank, Move::Stay};
  return m;
}

// Moves right forever.
inline MachineDescription right_mover() {
  MachineDescription m = skeleton();
  m.transitions[{0, Sym::Zero}] = {0, Action::Write0, Move::Right};
  m.transitions[{0, Sym::One}] = {0, Action::Write1, Move::Right};
  m.transitions[{0, Sym::Blank}] = {0, Action::WriteBlank, Move::Right};
  return m;
}

// Seeded generator of well-formed machines for property-style tests.
class MachineGen {
 public:
  explicit MachineGen(uint64_t seed) : rng_(seed) {}

  MachineDescription next() {
    std::uniform_int_distribution<uint32_t> states(4, 8);
    MachineDescription m = skeleton(states(rng_));
    std::uniform_int_distribution<uint32_t> any(0, m.state_count - 1);
    m.start_state = any(rng_);
    m.yes_state = any(rng_);
    m.no_state = any(rng_);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> action(0, 4);
    std::uniform_int_distribution<int> move(0, 2);
    for (uint32_t s = 0; s < m.state_count; ++s) {
      if (s == m.accept_state || s == m.reject_state || s == m.query_state) continue;
      for (Sym sym : {Sym::Zero, Sym::One, Sym::Blank}) {
        if (coin(rng_) == 0) continue;  // leave some transitions missing
        m.transitions[{s, sym}] = Transition{any(rng_), static_cast<Action>(action(rng_)),
                                             static_cast<Move>(move(rng_))};
      }
    }
    return m;
  }

  Bits bits(size_t max_len) {
    std::uniform_int_distribution<size_t> len(0, max_len);
    std::uniform_int_distribution<int> coin(0, 1);
    Bits out(len(rng_), '0');
    for (char& c : out) c = coin(rng_) ? '1' : '0';
    return out;
  }

  uint64_t number(uint64_t lo, uint64_t hi) {
    return std::uniform_int_distribution<uint64_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline Oracle oracle_from_set(std::set<Bits> members) {
  return [members = std::move(members)](const Bits& q) { return members.count(q) > 0; };
}

}  // namespace npsplit::testing
