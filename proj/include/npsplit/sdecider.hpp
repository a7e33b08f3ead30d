#pragma once

#include <functional>
#include <memory>
#include <string>

#include "npsplit/bits.hpp"

namespace npsplit {

// Nondecreasing upper bound on the time the base-set decider needs for
// length-T inputs. The engine never materializes the bound; the gate only
// asks whether cost(T) >= i, so the predicate form is part of the interface.
class CostModel {
 public:
  virtual ~CostModel() = default;
  virtual std::string name() const = 0;

  // Exact bound for small T. Throws ConfigError when the value would exceed
  // roughly 2^4000000.
  virtual BigNat value(const BigNat& length) const = 0;

  // cost(length) >= threshold, exact for all arguments.
  virtual bool dominates(const BigNat& length, const BigNat& threshold) const = 0;
};

// T -> 2^(T^c). dominates() is decided in the exponent domain:
// 2^a >= i  <=>  a >= ceil(log2 i), which never builds the power itself.
class ExpPolyCost final : public CostModel {
 public:
  explicit ExpPolyCost(unsigned c) : c_(c) {}
  std::string name() const override;
  BigNat value(const BigNat& length) const override;
  bool dominates(const BigNat& length, const BigNat& threshold) const override;
  unsigned exponent() const { return c_; }

 private:
  unsigned c_;
};

// A decider for the base set S, together with the constant c for which
// S is decidable in time 2^(n^c). The engine consumes nothing else, so any
// set can be plugged in; NP-completeness of a supplied decider is taken on
// trust and flagged as such in reports.
struct SDecider {
  std::string name;
  std::function<bool(const Bits&)> decide;  // total on all bitstrings
  unsigned exponent_c = 1;
  std::shared_ptr<const CostModel> cost;
};

// The shipped instantiation: S = SAT over the codeword encoding, decided by
// sat_brute. The default c = 2 over-approximates the brute-force cost
// poly(T) * 2^T; the unit suite checks measured work against 2^(T^2) for all
// T <= 16 rather than proving the inequality.
SDecider make_sat_sdecider(unsigned exponent_c = 2);

}  // namespace npsplit
