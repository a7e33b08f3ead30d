#include "npsplit/cnf.hpp"

#include <sstream>

#include "npsplit/errors.hpp"

namespace npsplit {

namespace {

uint32_t index_width(uint32_t variable_count) {
  // Bits needed to write variable_count - 1; zero when only one variable.
  uint32_t w = 0;
  uint32_t top = variable_count - 1;
  while (top > 0) {
    ++w;
    top >>= 1;
  }
  return w;
}

constexpr uint32_t kMaxBruteVariables = 28;

}  // namespace

std::optional<CnfFormula> decode_cnf(const Bits& y) {
  size_t pos = 0;
  auto bit = [&](bool& out) {
    if (pos >= y.size()) return false;
    out = (y[pos++] == '1');
    return true;
  };

  // unary variable count
  uint32_t n = 1;
  while (true) {
    bool b = false;
    if (!bit(b)) return std::nullopt;
    if (!b) break;
    ++n;
    if (n > y.size()) return std::nullopt;  // unary part cannot exceed |y|
  }
  uint32_t w = index_width(n);

  CnfFormula f;
  f.variable_count = n;
  while (true) {  // clauses
    Clause clause;
    while (true) {  // literals
      bool sign = false;
      if (!bit(sign)) return std::nullopt;
      uint32_t idx = 0;
      for (uint32_t i = 0; i < w; ++i) {
        bool b = false;
        if (!bit(b)) return std::nullopt;
        idx = (idx << 1) | (b ? 1u : 0u);
      }
      if (idx >= n) return std::nullopt;
      clause.push_back(Literal{idx, sign});
      bool more = false;
      if (!bit(more)) return std::nullopt;
      if (!more) break;
    }
    f.clauses.push_back(std::move(clause));
    bool more = false;
    if (!bit(more)) return std::nullopt;
    if (!more) break;
  }
  if (pos != y.size()) return std::nullopt;
  return f;
}

Bits encode_cnf(const CnfFormula& f) {
  if (f.variable_count == 0) throw ConfigError("encode_cnf: variable_count must be >= 1");
  if (f.clauses.empty()) throw ConfigError("encode_cnf: formula needs at least one clause");
  uint32_t w = index_width(f.variable_count);
  Bits out;
  out.append(f.variable_count - 1, '1');
  out.push_back('0');
  for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
    const Clause& clause = f.clauses[ci];
    if (clause.empty()) throw ConfigError("encode_cnf: empty clause");
    for (size_t li = 0; li < clause.size(); ++li) {
      const Literal& lit = clause[li];
      if (lit.var >= f.variable_count) throw ConfigError("encode_cnf: literal out of range");
      out.push_back(lit.positive ? '1' : '0');
      for (uint32_t i = w; i-- > 0;)
        out.push_back(((lit.var >> i) & 1) != 0 ? '1' : '0');
      out.push_back(li + 1 < clause.size() ? '1' : '0');
    }
    out.push_back(ci + 1 < f.clauses.size() ? '1' : '0');
  }
  return out;
}

bool evaluate(const CnfFormula& f, uint64_t assignment) {
  for (const Clause& clause : f.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause) {
      bool value = ((assignment >> lit.var) & 1) != 0;
      if (value == lit.positive) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

SatWork sat_brute_metered(const Bits& y) {
  SatWork result;
  result.work = y.size();
  auto f = decode_cnf(y);
  if (!f) return result;
  if (f->variable_count > kMaxBruteVariables)
    throw ConfigError("sat_brute: more than " + std::to_string(kMaxBruteVariables) +
                      " variables; exhaustive search refused");

  uint64_t total = uint64_t{1} << f->variable_count;
  for (uint64_t assignment = 0; assignment < total; ++assignment) {
    bool all = true;
    for (const Clause& clause : f->clauses) {
      bool satisfied = false;
      for (const Literal& lit : clause) {
        ++result.work;
        bool value = ((assignment >> lit.var) & 1) != 0;
        if (value == lit.positive) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) {
        all = false;
        break;
      }
    }
    if (all) {
      result.satisfiable = true;
      return result;
    }
  }
  return result;
}

bool sat_brute(const Bits& y) { return sat_brute_metered(y).satisfiable; }

std::string cnf_to_string(const CnfFormula& f) {
  std::ostringstream os;
  for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
    if (ci) os << " & ";
    os << "(";
    for (size_t li = 0; li < f.clauses[ci].size(); ++li) {
      if (li) os << " | ";
      const Literal& lit = f.clauses[ci][li];
      if (!lit.positive) os << "~";
      os << "v" << lit.var;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace npsplit
