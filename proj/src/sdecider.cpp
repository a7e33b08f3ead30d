#include "npsplit/sdecider.hpp"

#include "npsplit/cnf.hpp"
#include "npsplit/errors.hpp"

namespace npsplit {

std::string ExpPolyCost::name() const {
  return "2^(T^" + std::to_string(c_) + ")";
}

BigNat ExpPolyCost::value(const BigNat& length) const {
  BigNat e = ipow(length, c_);
  if (e > 4'000'000) throw ConfigError("cost value too large to materialize");
  return BigNat(1) << static_cast<size_t>(e);
}

bool ExpPolyCost::dominates(const BigNat& length, const BigNat& threshold) const {
  if (threshold <= 1) return true;  // cost is always >= 1
  return ipow(length, c_) >= ceil_log2(threshold);
}

SDecider make_sat_sdecider(unsigned exponent_c) {
  if (exponent_c < 1) throw ConfigError("SDecider exponent c must be >= 1");
  SDecider d;
  d.name = "sat-brute";
  d.decide = [](const Bits& y) { return sat_brute(y); };
  d.exponent_c = exponent_c;
  d.cost = std::make_shared<ExpPolyCost>(exponent_c);
  return d;
}

}  // namespace npsplit
