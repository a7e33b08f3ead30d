#include "npsplit/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "npsplit/errors.hpp"

namespace npsplit {

namespace {

constexpr uint64_t kScanLimit = 1u << 20;
constexpr size_t kMaxIndexResults = 1u << 20;

void require_mode(const EnumerationMode& mode) {
  if (mode.kind == EnumKind::Roster && mode.roster.empty())
    throw ConfigError("roster mode with an empty roster");
}

}  // namespace

BigNat cantor_pair(const BigNat& a, const BigNat& b) {
  BigNat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<BigNat, BigNat> cantor_unpair(const BigNat& z) {
  // w = floor((sqrt(8z + 1) - 1) / 2), the diagonal index.
  BigNat w = (boost::multiprecision::sqrt(8 * z + 1) - 1) / 2;
  BigNat t = w * (w + 1) / 2;
  BigNat b = z - t;
  BigNat a = w - b;
  return {a, b};
}

ClockedMachine index_to_machine(const BigNat& j, const EnumerationMode& mode) {
  if (j < 1) throw ConfigError("machine index must be >= 1");
  require_mode(mode);
  ClockedMachine cm;
  cm.index = j;
  cm.clock_exponent = j;
  if (mode.kind == EnumKind::Goedel) {
    auto [a, b] = cantor_unpair(j - 1);
    (void)b;
    cm.program = decode_program(nat_to_string(a));
  } else {
    BigNat pos = (j - 1) % mode.roster.size();
    cm.program = mode.roster[static_cast<size_t>(pos)];
  }
  return cm;
}

uint64_t clock_budget(uint64_t input_length, const BigNat& j) {
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  BigNat budget;
  if (input_length <= 1) {
    budget = BigNat(input_length) + j;  // 0^j = 0, 1^j = 1 (and 0^0 = 1 at j = 0)
    if (input_length == 0 && j == 0) budget = 1;
  } else if (j >= 64) {
    return kMax;  // 2^64 already exceeds the saturation point
  } else {
    budget = ipow(input_length, j) + j;
  }
  if (budget > kMax) return kMax;
  return static_cast<uint64_t>(budget);
}

bool universal_accepts(const BigNat& j, const Bits& x, const Oracle& oracle,
                       const EnumerationMode& mode) {
  if (j == 0) {
    RunOutcome out = run(dummy_machine(), x, clock_budget(x.size(), 0), oracle);
    return out.verdict == Verdict::Accepted;
  }
  ClockedMachine cm = index_to_machine(j, mode);
  RunOutcome out = run(cm.program, x, clock_budget(x.size(), j), oracle);
  return out.verdict == Verdict::Accepted;
}

std::vector<BigNat> indices_of_program(const MachineDescription& p, const BigNat& limit,
                                       const EnumerationMode& mode) {
  if (limit < 1) throw ConfigError("indices_of_program: limit must be >= 1");
  require_mode(mode);
  std::vector<BigNat> out;

  if (mode.kind == EnumKind::Roster) {
    size_t len = mode.roster.size();
    for (size_t pos = 0; pos < len; ++pos) {
      if (!(mode.roster[pos] == p)) continue;
      for (BigNat j = pos + 1; j <= limit; j += len) {
        out.push_back(j);
        if (out.size() > kMaxIndexResults)
          throw ConfigError("indices_of_program: result too large");
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  if (limit <= kScanLimit) {
    for (BigNat j = 1; j <= limit; ++j) {
      if (index_to_machine(j, mode).program == p) out.push_back(j);
    }
    return out;
  }

  if (p == dummy_machine())
    throw ConfigError(
        "indices_of_program: the dummy rejector's index set is too dense to "
        "report beyond a scan-sized limit");

  // Every non-dummy machine decodes from exactly one code, so its goedel
  // indices are exactly pair(code, b) + 1 for b = 0, 1, 2, ...
  BigNat code = string_to_nat(encode_program(p));
  for (BigNat b = 0;; ++b) {
    BigNat j = cantor_pair(code, b) + 1;
    if (j > limit) break;
    out.push_back(j);
    if (out.size() > kMaxIndexResults)
      throw ConfigError("indices_of_program: result too large");
  }
  return out;
}

}  // namespace npsplit
