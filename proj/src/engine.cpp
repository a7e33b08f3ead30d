#include "npsplit/engine.hpp"

#include <algorithm>

#include "npsplit/cnf.hpp"
#include "npsplit/errors.hpp"

namespace npsplit {

const char* depth_fn_name(DepthFn f) {
  switch (f) {
    case DepthFn::DLogLog: return "dloglog";
    case DepthFn::DLog: return "dlog";
  }
  return "?";
}

std::optional<DepthFn> depth_fn_from_name(const std::string& name) {
  if (name == "dloglog") return DepthFn::DLogLog;
  if (name == "dlog") return DepthFn::DLog;
  return std::nullopt;
}

uint64_t depth_value(DepthFn f, uint64_t i) {
  switch (f) {
    case DepthFn::DLogLog:
      if (i < 2) return 0;
      return floor_log2(std::max<uint64_t>(1, floor_log2(i)));
    case DepthFn::DLog:
      return i >= 1 ? floor_log2(i) : 0;
  }
  return 0;
}

EngineConfig::EngineConfig() : s_decider(make_sat_sdecider()) {}

namespace {

void require_config(const EngineConfig& c) {
  if (c.team_count < 2) throw ConfigError("team count k must be >= 2");
  if (!c.s_decider.decide) throw ConfigError("config has no S decider");
  if (!c.s_decider.cost) throw ConfigError("config has no cost model");
  if (c.enumeration.kind == EnumKind::Roster && c.enumeration.roster.empty())
    throw ConfigError("roster mode with an empty roster");
}

// The time bound T = depth^j + j of the target machine on witness-length
// inputs, under the boundary convention 0^0 = 0 (so T = 0 when both the
// depth and the target index are 0).
BigNat budget_bound(uint64_t depth, uint64_t target_index) {
  return ipow(BigNat(depth), BigNat(target_index), /*zero_pow_zero=*/0) + target_index;
}

struct ProbeResult {
  bool is_witness = false;
  uint64_t max_query_length = 0;
};

ProbeResult probe_witness(const Bits& y, uint64_t i, uint64_t target_index,
                          unsigned part, const RTable& table,
                          const EngineConfig& config) {
  ProbeResult result;
  Oracle guarded = [&](const Bits& q) {
    if (q.size() >= i)
      throw CircularityError(
          "oracle query of length " + std::to_string(q.size()) +
          " at step i = " + std::to_string(i) +
          "; the gate should have made this unreachable");
    result.max_query_length = std::max<uint64_t>(result.max_query_length, q.size());
    return oracle_answer(part, q, table, config);
  };
  bool in_sat = sat_brute(y);
  bool accepted = universal_accepts(BigNat(target_index), y, guarded, config.enumeration);
  result.is_witness = (in_sat != accepted);
  return result;
}

}  // namespace

bool eq1_gate(uint64_t i, uint64_t r_i, const EngineConfig& config) {
  require_config(config);
  uint64_t target_index = r_i / config.team_count;
  BigNat bound = budget_bound(depth_value(config.depth_fn, i), target_index);
  return config.s_decider.cost->dominates(bound, BigNat(i));
}

bool oracle_answer(unsigned part, const Bits& q, const RTable& table,
                   const EngineConfig& config) {
  if (q.size() >= table.values.size())
    throw CircularityError("r(" + std::to_string(q.size()) +
                           ") is not determined yet; only " +
                           std::to_string(table.values.size()) + " values exist");
  if (table.values[q.size()] % config.team_count != part) return false;
  return config.s_decider.decide(q);
}

bool check_witness(const Bits& y, uint64_t i, uint64_t target_index, unsigned part,
                   const RTable& table, const EngineConfig& config) {
  return probe_witness(y, i, target_index, part, table, config).is_witness;
}

SplitEngine::SplitEngine(EngineConfig config) : config_(std::move(config)) {
  require_config(config_);
  table_.values.assign(3, config_.initial_r);
}

bool SplitEngine::adopt(RTable cached) {
  const auto& v = cached.values;
  if (v.size() < 3) return false;
  if (v[0] != config_.initial_r || v[1] != config_.initial_r || v[2] != config_.initial_r)
    return false;
  if (cached.events.size() + 3 != v.size()) return false;
  for (size_t t = 0; t < cached.events.size(); ++t) {
    const DiagEvent& ev = cached.events[t];
    uint64_t i = t + 2;
    uint64_t step = v[i + 1] - v[i];
    if (ev.i != i || ev.r_i != v[i]) return false;
    if (v[i + 1] < v[i] || step > 1) return false;
    if (ev.advanced != (step == 1)) return false;
    if (ev.advanced && (ev.gate_failed || !ev.witness)) return false;
    if (ev.gate_failed && (ev.witness || ev.strings_examined != 0)) return false;
  }
  table_ = std::move(cached);
  return true;
}

const DiagEvent& SplitEngine::extend() {
  uint64_t i = table_.values.size() - 1;  // >= 2 by construction
  uint64_t r_i = table_.values.back();

  DiagEvent ev;
  ev.i = i;
  ev.r_i = r_i;
  ev.target_index = r_i / config_.team_count;
  ev.oracle_part = static_cast<unsigned>((r_i + 1) % config_.team_count);
  ev.depth = depth_value(config_.depth_fn, i);
  ev.gate_failed = eq1_gate(i, r_i, config_);

  if (!ev.gate_failed) {
    // First witness in length-then-lexicographic order wins.
    ev.strings_examined = for_each_string_length_lex(ev.depth, [&](const Bits& y) {
      ProbeResult probe =
          probe_witness(y, i, ev.target_index, ev.oracle_part, table_, config_);
      ev.max_query_length = std::max(ev.max_query_length, probe.max_query_length);
      if (probe.is_witness) ev.witness = y;
      return probe.is_witness;
    });
    if (ev.max_query_length >= i)
      throw CircularityError("engine bug: query length survived the guard");
  }
  ev.advanced = ev.witness.has_value();

  table_.values.push_back(ev.advanced ? r_i + 1 : r_i);
  table_.events.push_back(std::move(ev));
  return table_.events.back();
}

void SplitEngine::materialize(uint64_t n) {
  while (table_.values.size() <= n) extend();
}

uint64_t SplitEngine::r(uint64_t n) {
  materialize(n);
  return table_.values[n];
}

bool SplitEngine::member_part(const Bits& x, unsigned part) {
  if (part >= config_.team_count)
    throw ConfigError("part " + std::to_string(part) + " out of range for k = " +
                      std::to_string(config_.team_count));
  materialize(x.size());
  if (table_.values[x.size()] % config_.team_count != part) return false;
  return config_.s_decider.decide(x);
}

bool SplitEngine::member_D(const Bits& x) {
  if (config_.team_count != 2)
    throw ConfigError("the separator D is defined for k = 2 only");
  materialize(x.size());
  return table_.values[x.size()] % 2 == 0;
}

}  // namespace npsplit
