#include "npsplit/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "npsplit/errors.hpp"

namespace npsplit {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string slurp(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ConfigError(std::string("cannot open ") + what + ": " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<MachineDescription> roster_from_file(const std::string& path) {
  std::string text = slurp(path, "roster file");
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<MachineDescription> roster;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::filesystem::path p(line);
    if (p.is_relative()) p = base / p;
    roster.push_back(machine_from_file(p.string()));
  }
  if (roster.empty()) throw ConfigError("roster file lists no machines: " + path);
  return roster;
}

EngineConfig config_from_text(const std::string& text, const std::string& base_dir) {
  EngineConfig config;
  std::string decider = "sat-brute";
  unsigned c = 2;
  std::string roster_path;
  bool want_roster = false;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "decider") {
      decider = value;
    } else if (key == "c") {
      c = static_cast<unsigned>(std::stoul(value));
    } else if (key == "k") {
      config.team_count = static_cast<unsigned>(std::stoul(value));
    } else if (key == "depth") {
      auto d = depth_fn_from_name(value);
      if (!d) throw ConfigError("unknown depth function: " + value);
      config.depth_fn = *d;
    } else if (key == "enumeration") {
      if (value == "goedel") config.enumeration.kind = EnumKind::Goedel;
      else if (value == "roster") want_roster = true;
      else throw ConfigError("unknown enumeration mode: " + value);
    } else if (key == "roster") {
      roster_path = value;
    } else if (key == "initial-r") {
      config.initial_r = std::stoull(value);
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }

  if (decider != "sat-brute")
    throw ConfigError("unknown decider: " + decider + " (only sat-brute ships)");
  config.s_decider = make_sat_sdecider(c);

  if (want_roster) {
    if (roster_path.empty()) throw ConfigError("enumeration = roster needs a roster = PATH");
    std::filesystem::path p(roster_path);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    config.enumeration.kind = EnumKind::Roster;
    config.enumeration.roster = roster_from_file(p.string());
  }
  return config;
}

EngineConfig config_from_file(const std::string& path) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  return config_from_text(slurp(path, "config file"), dir.empty() ? "." : dir);
}

std::string canonical_config_text(const EngineConfig& config) {
  std::ostringstream os;
  os << "decider=" << config.s_decider.name << "\n";
  os << "c=" << config.s_decider.exponent_c << "\n";
  os << "cost=" << (config.s_decider.cost ? config.s_decider.cost->name() : "none") << "\n";
  os << "k=" << config.team_count << "\n";
  os << "depth=" << depth_fn_name(config.depth_fn) << "\n";
  os << "enumeration="
     << (config.enumeration.kind == EnumKind::Goedel ? "goedel" : "roster") << "\n";
  os << "initial-r=" << config.initial_r << "\n";
  for (const auto& m : config.enumeration.roster)
    os << "roster-machine=" << encode_program(m) << "\n";
  return os.str();
}

std::string config_fingerprint(const EngineConfig& config) {
  // FNV-1a, 64-bit
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char ch : canonical_config_text(config)) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((hash >> shift) & 0xf);
  return os.str();
}

}  // namespace npsplit
