#include "npsplit/optp.hpp"

namespace npsplit {

SplitHandles make_handles(SplitEngine& engine) {
  SplitHandles h;
  h.member_A = [&engine](const Bits& x) { return engine.member_part(x, 0); };
  h.member_B = [&engine](const Bits& x) { return engine.member_part(x, 1); };
  h.chi_S = [h](const Bits& x) { return h.member_A(x) || h.member_B(x); };
  return h;
}

Bits compose_f(const Bits& x, const SplitHandles& h) {
  if (h.member_A(x)) return Bits(x.size() + 1, '1');
  return "0" + x;
}

Bits compose_g(const Bits& z, const SplitHandles& h) {
  if (z.empty()) return "0";
  if (z[0] == '1') return "1";
  return h.member_B(z.substr(1)) ? "1" : "0";
}

Bits compose_gf(const Bits& x, const SplitHandles& h) {
  return compose_g(compose_f(x, h), h);
}

}  // namespace npsplit
