#pragma once

#include <functional>

#include "npsplit/bits.hpp"
#include "npsplit/engine.hpp"

namespace npsplit {

// The function-composition construction over a 2-way split: two string
// functions, each computable with one membership probe into its own part,
// whose composition computes the characteristic function of S = A ∪ B.
// Both are NP optimization functions in the intended reading (lexicographic
// maximum over the paths of a nondeterministic machine); here they are
// realized as plain deterministic computations over the membership handles,
// and no path-output machine is simulated.

struct SplitHandles {
  std::function<bool(const Bits&)> member_A;
  std::function<bool(const Bits&)> member_B;
  std::function<bool(const Bits&)> chi_S;  // member_A or member_B
};

// Handles backed by a k = 2 engine. The engine extends its table on demand,
// so share one engine across handles and do not use them concurrently.
SplitHandles make_handles(SplitEngine& engine);

// 1^(|x|+1) when x is in A, otherwise 0x. Output is always one longer than x.
Bits compose_f(const Bits& x, const SplitHandles& h);

// One output bit: "1" iff z starts with 1, or z = 0x with x in B. The empty
// string has no first bit and falls to "0"; f never produces it.
Bits compose_g(const Bits& z, const SplitHandles& h);

// g(f(x)); equals "1" exactly on S.
Bits compose_gf(const Bits& x, const SplitHandles& h);

}  // namespace npsplit
