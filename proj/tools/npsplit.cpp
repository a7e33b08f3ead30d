// npsplit — command-line front end: splitting-function queries, membership,
// trace export, the f/g composition, CNF utilities and verification suites.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "npsplit/cnf.hpp"
#include "npsplit/config.hpp"
#include "npsplit/errors.hpp"
#include "npsplit/optp.hpp"
#include "npsplit/suites.hpp"
#include "npsplit/tracefmt.hpp"

namespace {

using namespace npsplit;

struct GlobalOpts {
  std::string config_path;
  std::string cache_path;
  std::string enumeration;  // "goedel" or "roster"
  std::string roster_file;
};

EngineConfig build_config(const GlobalOpts& g) {
  EngineConfig config = g.config_path.empty() ? EngineConfig{} : config_from_file(g.config_path);
  if (!g.enumeration.empty()) {
    if (g.enumeration == "goedel") {
      config.enumeration.kind = EnumKind::Goedel;
      config.enumeration.roster.clear();
    } else if (g.enumeration == "roster") {
      config.enumeration.kind = EnumKind::Roster;
    } else {
      throw ConfigError("--enumeration must be goedel or roster");
    }
  }
  if (!g.roster_file.empty()) {
    config.enumeration.kind = EnumKind::Roster;
    config.enumeration.roster = roster_from_file(g.roster_file);
  }
  if (config.enumeration.kind == EnumKind::Roster && config.enumeration.roster.empty())
    throw ConfigError("roster mode selected but no roster given (use --roster-file)");
  return config;
}

// Explicit --cache wins; otherwise NPSPLIT_CACHE_DIR names a directory that
// keys cache files by config fingerprint.
std::string cache_file_for(const GlobalOpts& g, const EngineConfig& config) {
  if (!g.cache_path.empty()) return g.cache_path;
  if (const char* dir = std::getenv("NPSPLIT_CACHE_DIR"); dir != nullptr && *dir != '\0')
    return std::string(dir) + "/rtable-" + config_fingerprint(config) + ".txt";
  return {};
}

void try_load_cache(SplitEngine& engine, const std::string& path) {
  if (path.empty()) return;
  ImportedTable imported;
  try {
    if (!load_table(path, imported)) return;
  } catch (const Error& e) {
    std::cerr << "npsplit: ignoring unreadable cache " << path << ": " << e.what() << "\n";
    return;
  }
  if (imported.fingerprint != config_fingerprint(engine.config())) {
    std::cerr << "npsplit: cache " << path << " was written under another config; recomputing\n";
    return;
  }
  if (!engine.adopt(std::move(imported.table)))
    std::cerr << "npsplit: cache " << path << " is inconsistent; recomputing\n";
}

void save_cache(const SplitEngine& engine, const std::string& path) {
  if (path.empty()) return;
  save_table(path, engine.table(), config_fingerprint(engine.config()));
}

Bits parse_bits(const std::string& s, const char* flag) {
  if (!is_bitstring(s)) throw ConfigError(std::string(flag) + " must be a string over {0,1}");
  return s;
}

unsigned parse_part(const std::string& s, unsigned k) {
  unsigned part = 0;
  if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'Z') part = static_cast<unsigned>(s[0] - 'A');
  else if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z') part = static_cast<unsigned>(s[0] - 'a');
  else {
    try {
      part = static_cast<unsigned>(std::stoul(s));
    } catch (const std::exception&) {
      throw ConfigError("--part must be a letter (A, B, C, ...) or a residue number");
    }
  }
  if (part >= k)
    throw ConfigError("part " + s + " out of range for k = " + std::to_string(k));
  return part;
}

// DIMACS-like clause input: 'c' comments, an optional "p cnf V C" header,
// then integer literals with 0 closing each clause.
CnfFormula read_dimacs(std::istream& in) {
  CnfFormula f;
  long declared_vars = -1;
  Clause current;
  uint32_t max_var = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      long vars = 0, clauses = 0;
      if (!(ls >> kind >> vars >> clauses) || kind != "cnf" || vars < 1)
        throw ConfigError("encode-cnf: bad problem line: " + line);
      declared_vars = vars;
      continue;
    }
    ls.clear();
    ls.str(line);
    long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        if (current.empty()) throw ConfigError("encode-cnf: empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      uint32_t var = static_cast<uint32_t>(lit > 0 ? lit : -lit) - 1;
      max_var = std::max(max_var, var);
      current.push_back(Literal{var, lit > 0});
    }
  }
  if (!current.empty()) f.clauses.push_back(std::move(current));  // tolerate a missing final 0
  if (f.clauses.empty()) throw ConfigError("encode-cnf: no clauses on input");
  f.variable_count = declared_vars >= 0 ? static_cast<uint32_t>(declared_vars) : max_var + 1;
  if (max_var >= f.variable_count)
    throw ConfigError("encode-cnf: a literal exceeds the declared variable count");
  return f;
}

// Keeps header lines plus rows whose advanced column is "1".
std::string filter_advanced(const std::string& rendered, char sep, size_t header_lines) {
  std::istringstream is(rendered);
  std::ostringstream os;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    if (lineno++ < header_lines) {
      os << line << "\n";
      continue;
    }
    size_t first = line.find(sep);
    size_t second = first == std::string::npos ? first : line.find(sep, first + 1);
    size_t third = second == std::string::npos ? second : line.find(sep, second + 1);
    if (second == std::string::npos) continue;
    std::string advanced = line.substr(second + 1, third == std::string::npos
                                                       ? std::string::npos
                                                       : third - second - 1);
    if (advanced == "1") os << line << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delayed-diagonalization splitting laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts global;
  app.add_option("--config", global.config_path, "configuration file");
  app.add_option("--cache", global.cache_path, "r-table cache file");
  app.add_option("--enumeration", global.enumeration, "goedel or roster");
  app.add_option("--roster-file", global.roster_file, "machine list for roster mode");

  auto* cmd_r = app.add_subcommand("r", "print r(n)");
  uint64_t n = 0;
  cmd_r->add_option("--n", n, "index to compute")->required();

  auto* cmd_member = app.add_subcommand("member", "membership of x in one part");
  std::string part_name, x_bits;
  cmd_member->add_option("--part", part_name, "A, B, C, ... or a residue")->required();
  cmd_member->add_option("--x", x_bits, "input bitstring")->required();

  auto* cmd_member_d = app.add_subcommand("member-d", "membership in the separator D (k = 2)");
  std::string xd_bits;
  cmd_member_d->add_option("--x", xd_bits, "input bitstring")->required();

  auto* cmd_trace = app.add_subcommand("trace", "export the diagonalization trace");
  uint64_t upto = 0;
  bool only_advanced = false;
  std::string format = "text";
  cmd_trace->add_option("--upto", upto, "materialize r(0..n)")->required();
  cmd_trace->add_flag("--only-advanced", only_advanced, "keep only advancing rows");
  cmd_trace->add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  auto* cmd_compose = app.add_subcommand("compose", "print f(x), g(f(x)) and chi_S(x)");
  std::string cx_bits;
  cmd_compose->add_option("--x", cx_bits, "input bitstring")->required();

  auto* cmd_compose_verify =
      app.add_subcommand("compose-verify", "check g(f(x)) = chi_S(x) pointwise");
  uint64_t cv_maxlen = 10;
  cmd_compose_verify->add_option("--maxlen", cv_maxlen, "scan all |x| up to this length");

  auto* cmd_verify = app.add_subcommand("verify", "run a bundled verification suite");
  std::string suite;
  SuiteBounds bounds;
  cmd_verify->add_option("--suite", suite, "one of: partition rtable noncircular gate-oracle compose enumeration kway")
      ->required();
  cmd_verify->add_option("--maxlen", bounds.maxlen, "membership scan length bound");
  cmd_verify->add_option("--upto", bounds.upto, "r-table bound");
  cmd_verify->add_option("--gate-upto", bounds.gate_upto, "gate-oracle i bound");
  cmd_verify->add_option("--rmax", bounds.rmax, "gate-oracle r bound");
  cmd_verify->add_option("--require-blocks", bounds.require_blocks,
                         "kway: minimum complete blocks in the log");

  auto* cmd_encode = app.add_subcommand("encode-cnf", "encode DIMACS-like input from stdin");

  auto* cmd_sat = app.add_subcommand("sat", "brute-force SAT membership of a codeword");
  std::string y_bits;
  cmd_sat->add_option("--y", y_bits, "candidate codeword")->required();

  auto* cmd_decode = app.add_subcommand("decode", "decode a codeword into a formula");
  std::string dy_bits;
  cmd_decode->add_option("--y", dy_bits, "candidate codeword")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_r->parsed()) {
      EngineConfig config = build_config(global);
      SplitEngine engine(config);
      std::string cache = cache_file_for(global, config);
      try_load_cache(engine, cache);
      std::cout << engine.r(n) << "\n";
      save_cache(engine, cache);
    } else if (cmd_member->parsed()) {
      EngineConfig config = build_config(global);
      SplitEngine engine(config);
      std::string cache = cache_file_for(global, config);
      try_load_cache(engine, cache);
      bool member = engine.member_part(parse_bits(x_bits, "--x"),
                                       parse_part(part_name, config.team_count));
      std::cout << (member ? "true" : "false") << "\n";
      save_cache(engine, cache);
    } else if (cmd_member_d->parsed()) {
      EngineConfig config = build_config(global);
      SplitEngine engine(config);
      std::string cache = cache_file_for(global, config);
      try_load_cache(engine, cache);
      std::cout << (engine.member_D(parse_bits(xd_bits, "--x")) ? "true" : "false") << "\n";
      save_cache(engine, cache);
    } else if (cmd_trace->parsed()) {
      EngineConfig config = build_config(global);
      SplitEngine engine(config);
      std::string cache = cache_file_for(global, config);
      try_load_cache(engine, cache);
      engine.materialize(upto);
      save_cache(engine, cache);
      std::string fp = config_fingerprint(config);
      std::string rendered = format == "csv" ? export_table_csv(engine.table(), fp)
                                             : export_table_text(engine.table(), fp);
      if (only_advanced)
        rendered = filter_advanced(rendered, format == "csv" ? ',' : ' ',
                                   format == "csv" ? 2 : 1);
      std::cout << rendered;
    } else if (cmd_compose->parsed()) {
      EngineConfig config = build_config(global);
      if (config.team_count != 2) throw ConfigError("compose needs k = 2");
      SplitEngine engine(config);
      std::string cache = cache_file_for(global, config);
      try_load_cache(engine, cache);
      SplitHandles h = make_handles(engine);
      Bits x = parse_bits(cx_bits, "--x");
      Bits fx = compose_f(x, h);
      Bits gfx = compose_g(fx, h);
      std::cout << "f(x)    = " << fx << "\n";
      std::cout << "g(f(x)) = " << gfx << "\n";
      std::cout << "chi_S   = " << (h.chi_S(x) ? "1" : "0") << "\n";
      save_cache(engine, cache);
    } else if (cmd_compose_verify->parsed()) {
      EngineConfig config = build_config(global);
      SuiteBounds cv_bounds;
      cv_bounds.maxlen = cv_maxlen;
      SuiteReport report = run_suite("compose", config, cv_bounds);
      print_report(std::cout, report);
      return report.all_passed() ? 0 : 1;
    } else if (cmd_verify->parsed()) {
      EngineConfig config = build_config(global);
      SuiteReport report = run_suite(suite, config, bounds);
      print_report(std::cout, report);
      return report.all_passed() ? 0 : 1;
    } else if (cmd_encode->parsed()) {
      std::cout << encode_cnf(read_dimacs(std::cin)) << "\n";
    } else if (cmd_sat->parsed()) {
      std::cout << (sat_brute(parse_bits(y_bits, "--y")) ? "true" : "false") << "\n";
    } else if (cmd_decode->parsed()) {
      auto f = decode_cnf(parse_bits(dy_bits, "--y"));
      if (f) std::cout << cnf_to_string(*f) << "\n";
      else std::cout << "undecodable\n";
    }
  } catch (const Error& e) {
    std::cerr << "npsplit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "npsplit: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
