#include "npsplit/tracefmt.hpp"

#include <fstream>
#include <sstream>

#include "npsplit/errors.hpp"

namespace npsplit {

namespace {

constexpr const char* kMagic = "npsplit-rtable";
constexpr const char* kVersion = "v1";

std::string witness_token(const std::optional<Bits>& w) {
  if (!w) return "-";
  if (w->empty()) return "e";
  return *w;
}

std::optional<Bits> witness_from_token(const std::string& tok) {
  if (tok == "-") return std::nullopt;
  if (tok == "e") return Bits{};
  if (!is_bitstring(tok)) throw ConfigError("rtable import: bad witness token: " + tok);
  return tok;
}

const DiagEvent* event_at(const RTable& table, uint64_t i) {
  if (i < 2) return nullptr;
  size_t t = static_cast<size_t>(i - 2);
  return t < table.events.size() ? &table.events[t] : nullptr;
}

void append_row(std::ostream& os, const RTable& table, uint64_t i, char sep) {
  os << i << sep << table.values[i];
  if (const DiagEvent* ev = event_at(table, i)) {
    os << sep << (ev->advanced ? 1 : 0) << sep << (ev->gate_failed ? 1 : 0) << sep
       << ev->target_index << sep << ev->oracle_part << sep << ev->depth << sep
       << witness_token(ev->witness) << sep << ev->strings_examined << sep
       << ev->max_query_length;
  } else {
    for (int col = 0; col < 8; ++col) os << sep << '-';
  }
  os << '\n';
}

}  // namespace

std::string export_table_text(const RTable& table, const std::string& fingerprint) {
  std::ostringstream os;
  os << kMagic << ' ' << kVersion << ' ' << fingerprint << '\n';
  for (uint64_t i = 0; i < table.values.size(); ++i) append_row(os, table, i, ' ');
  return os.str();
}

std::string export_table_csv(const RTable& table, const std::string& fingerprint) {
  std::ostringstream os;
  os << "# " << kMagic << ' ' << kVersion << ' ' << fingerprint << '\n';
  os << "i,r,advanced,gate_failed,target,part,depth,witness,strings_examined,"
        "max_query_length\n";
  for (uint64_t i = 0; i < table.values.size(); ++i) append_row(os, table, i, ',');
  return os.str();
}

ImportedTable import_table_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("rtable import: empty input");
  std::istringstream header(line);
  std::string magic, version;
  ImportedTable result;
  if (!(header >> magic >> version >> result.fingerprint) || magic != kMagic ||
      version != kVersion)
    throw ConfigError("rtable import: bad header: " + line);

  auto bad = [](uint64_t i, const std::string& why) -> ConfigError {
    return ConfigError("rtable import, row " + std::to_string(i) + ": " + why);
  };

  uint64_t expect_i = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    uint64_t i = 0, r = 0;
    std::string adv, gate, target, part, depth, witness, examined, maxq;
    if (!(row >> i >> r >> adv >> gate >> target >> part >> depth >> witness >>
          examined >> maxq))
      throw bad(expect_i, "expected 10 columns");
    if (i != expect_i) throw bad(i, "rows must be consecutive from 0");
    result.table.values.push_back(r);
    bool dashes = (adv == "-");
    if (dashes) {
      for (const std::string& tok : {gate, target, part, depth, witness, examined, maxq})
        if (tok != "-") throw bad(i, "mixed dash and value columns");
    } else {
      DiagEvent ev;
      ev.i = i;
      ev.r_i = r;
      ev.advanced = (adv == "1");
      ev.gate_failed = (gate == "1");
      ev.target_index = std::stoull(target);
      ev.oracle_part = static_cast<unsigned>(std::stoul(part));
      ev.depth = std::stoull(depth);
      ev.witness = witness_from_token(witness);
      ev.strings_examined = std::stoull(examined);
      ev.max_query_length = std::stoull(maxq);
      if (i < 2) throw bad(i, "initial rows cannot carry an event");
      if (i - 2 != result.table.events.size()) throw bad(i, "event rows must be contiguous");
      result.table.events.push_back(std::move(ev));
    }
    ++expect_i;
  }
  if (result.table.values.size() < 3) throw ConfigError("rtable import: fewer than 3 rows");
  if (result.table.events.size() + 3 != result.table.values.size())
    throw ConfigError("rtable import: event rows do not match value rows");
  return result;
}

void save_table(const std::string& path, const RTable& table, const std::string& fingerprint) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot write cache file: " + path);
  out << export_table_text(table, fingerprint);
  if (!out) throw ConfigError("failed writing cache file: " + path);
}

bool load_table(const std::string& path, ImportedTable& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = import_table_text(buf.str());
  return true;
}

}  // namespace npsplit
