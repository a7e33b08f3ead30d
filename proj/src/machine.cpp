#include "npsplit/machine.hpp"

#include <fstream>
#include <sstream>

#include "npsplit/errors.hpp"

namespace npsplit {

std::string validate(const MachineDescription& m) {
  if (m.state_count == 0) return "state_count must be at least 1";
  auto in_range = [&](uint32_t s) { return s < m.state_count; };
  for (uint32_t s : {m.start_state, m.accept_state, m.reject_state, m.query_state,
                     m.yes_state, m.no_state}) {
    if (!in_range(s)) return "distinguished state id out of range";
  }
  if (m.accept_state == m.reject_state) return "accept and reject must differ";
  if (m.query_state == m.accept_state || m.query_state == m.reject_state)
    return "query state must not be a halting state";
  for (const auto& [key, t] : m.transitions) {
    uint32_t from = key.first;
    if (!in_range(from)) return "transition from out-of-range state";
    if (!in_range(t.next_state)) return "dangling next-state id";
    if (from == m.accept_state || from == m.reject_state)
      return "halting state has an outgoing transition";
    if (from == m.query_state) return "query state has an outgoing transition";
  }
  return {};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Rejected: return "rejected";
    case Verdict::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

Sym Configuration::read() const {
  if (head >= 0) {
    auto idx = static_cast<size_t>(head);
    return idx < tape_right.size() ? tape_right[idx] : Sym::Blank;
  }
  auto idx = static_cast<size_t>(-head - 1);
  return idx < tape_left.size() ? tape_left[idx] : Sym::Blank;
}

void Configuration::write(Sym s) {
  if (head >= 0) {
    auto idx = static_cast<size_t>(head);
    if (idx >= tape_right.size()) tape_right.resize(idx + 1, Sym::Blank);
    tape_right[idx] = s;
  } else {
    auto idx = static_cast<size_t>(-head - 1);
    if (idx >= tape_left.size()) tape_left.resize(idx + 1, Sym::Blank);
    tape_left[idx] = s;
  }
}

RunOutcome run(const MachineDescription& m, const Bits& input, uint64_t budget,
               const Oracle& oracle) {
  if (std::string reason = validate(m); !reason.empty())
    throw MachineError("run: malformed machine: " + reason);

  Configuration c;
  c.state = m.start_state;
  c.tape_right.reserve(input.size());
  for (char ch : input) c.tape_right.push_back(ch == '1' ? Sym::One : Sym::Zero);

  RunOutcome out;
  while (true) {
    if (c.state == m.accept_state) {
      out.verdict = Verdict::Accepted;
      break;
    }
    if (c.state == m.reject_state) {
      out.verdict = Verdict::Rejected;
      break;
    }
    if (c.steps_taken == budget) {
      out.verdict = Verdict::BudgetExhausted;
      break;
    }
    if (c.state == m.query_state) {
      bool answer = oracle(c.query_tape);
      out.queries.emplace_back(c.query_tape, answer);
      if (c.query_tape.size() > out.max_query_length)
        out.max_query_length = c.query_tape.size();
      c.query_tape.clear();
      c.state = answer ? m.yes_state : m.no_state;
      ++c.steps_taken;
      continue;
    }
    auto it = m.transitions.find({c.state, c.read()});
    if (it == m.transitions.end()) {
      // No rule for this (state, symbol): halt rejecting.
      out.verdict = Verdict::Rejected;
      break;
    }
    const Transition& t = it->second;
    switch (t.action) {
      case Action::Write0: c.write(Sym::Zero); break;
      case Action::Write1: c.write(Sym::One); break;
      case Action::WriteBlank: c.write(Sym::Blank); break;
      case Action::AppendQ0: c.query_tape.push_back('0'); break;
      case Action::AppendQ1: c.query_tape.push_back('1'); break;
    }
    switch (t.move) {
      case Move::Left: --c.head; break;
      case Move::Right: ++c.head; break;
      case Move::Stay: break;
    }
    c.state = t.next_state;
    ++c.steps_taken;
  }
  out.steps_used = c.steps_taken;
  return out;
}

namespace {

// Number coding used by the program encoding: n >= 0 is written as the
// Elias-gamma code of n+1 with the unary prefix in ones. Self-delimiting.
void put_nat(Bits& out, uint64_t n) {
  uint64_t m = n + 1;
  uint64_t k = floor_log2(m);  // number of payload bits
  out.append(k, '1');
  out.push_back('0');
  for (uint64_t i = k; i-- > 0;) out.push_back(((m >> i) & 1) != 0 ? '1' : '0');
}

struct BitReader {
  const Bits& s;
  size_t pos = 0;
  bool ok = true;

  std::optional<uint64_t> nat() {
    uint64_t k = 0;
    while (true) {
      if (pos >= s.size() || k > 63) return fail();
      char c = s[pos++];
      if (c == '0') break;
      ++k;
    }
    uint64_t m = 1;
    for (uint64_t i = 0; i < k; ++i) {
      if (pos >= s.size()) return fail();
      m = (m << 1) | (s[pos++] == '1' ? 1u : 0u);
    }
    return m - 1;
  }

  std::optional<uint64_t> fail() {
    ok = false;
    return std::nullopt;
  }
};

}  // namespace

MachineDescription dummy_machine() {
  MachineDescription m;
  m.state_count = 4;
  m.start_state = 0;
  m.accept_state = 1;
  m.reject_state = 2;
  m.query_state = 3;
  m.yes_state = 1;
  m.no_state = 2;
  m.transitions[{0, Sym::Zero}] = {2, Action::Write0, Move::Stay};
  m.transitions[{0, Sym::One}] = {2, Action::Write1, Move::Stay};
  m.transitions[{0, Sym::Blank}] = {2, Action::WriteBlank, Move::Stay};
  return m;
}

MachineDescription always_reject() { return dummy_machine(); }

MachineDescription always_accept() {
  MachineDescription m = dummy_machine();
  for (auto& [key, t] : m.transitions) t.next_state = 1;
  return m;
}

MachineDescription copier_query() {
  MachineDescription m;
  m.state_count = 5;
  m.start_state = 0;  // scans right, copying the input onto the query tape
  m.query_state = 1;
  m.yes_state = 2;
  m.accept_state = 3;
  m.reject_state = 4;
  m.no_state = 4;
  m.transitions[{0, Sym::Zero}] = {0, Action::AppendQ0, Move::Right};
  m.transitions[{0, Sym::One}] = {0, Action::AppendQ1, Move::Right};
  m.transitions[{0, Sym::Blank}] = {1, Action::WriteBlank, Move::Stay};
  m.transitions[{2, Sym::Blank}] = {3, Action::WriteBlank, Move::Stay};
  return m;
}

Bits encode_program(const MachineDescription& m) {
  if (std::string reason = validate(m); !reason.empty())
    throw MachineError("encode_program: malformed machine: " + reason);
  Bits out;
  put_nat(out, m.state_count);
  put_nat(out, m.start_state);
  put_nat(out, m.accept_state);
  put_nat(out, m.reject_state);
  put_nat(out, m.query_state);
  put_nat(out, m.yes_state);
  put_nat(out, m.no_state);
  put_nat(out, m.transitions.size());
  for (const auto& [key, t] : m.transitions) {
    put_nat(out, key.first);
    put_nat(out, static_cast<uint64_t>(key.second));
    put_nat(out, t.next_state);
    put_nat(out, static_cast<uint64_t>(t.action));
    put_nat(out, static_cast<uint64_t>(t.move));
  }
  return out;
}

MachineDescription decode_program(const Bits& code) {
  const MachineDescription dummy = dummy_machine();
  BitReader r{code};
  MachineDescription m;

  auto take = [&](uint32_t& dst, uint64_t limit) {
    auto v = r.nat();
    if (!v || *v > limit) {
      r.ok = false;
      return;
    }
    dst = static_cast<uint32_t>(*v);
  };

  take(m.state_count, 1u << 20);
  take(m.start_state, UINT32_MAX);
  take(m.accept_state, UINT32_MAX);
  take(m.reject_state, UINT32_MAX);
  take(m.query_state, UINT32_MAX);
  take(m.yes_state, UINT32_MAX);
  take(m.no_state, UINT32_MAX);
  auto count = r.nat();
  if (!r.ok || !count || *count > 3u * (1u << 20)) return dummy;

  std::pair<uint32_t, Sym> prev_key{0, Sym::Zero};
  bool have_prev = false;
  for (uint64_t i = 0; i < *count; ++i) {
    uint32_t from = 0, sym = 0, next = 0, action = 0, move = 0;
    take(from, UINT32_MAX);
    take(sym, 2);
    take(next, UINT32_MAX);
    take(action, 4);
    take(move, 2);
    if (!r.ok) return dummy;
    std::pair<uint32_t, Sym> key{from, static_cast<Sym>(sym)};
    // Transitions must appear in strictly increasing canonical order, so a
    // well-formed machine has exactly one code.
    if (have_prev && !(prev_key < key)) return dummy;
    prev_key = key;
    have_prev = true;
    m.transitions[key] =
        Transition{next, static_cast<Action>(action), static_cast<Move>(move)};
  }
  if (!r.ok || r.pos != code.size()) return dummy;
  if (!validate(m).empty()) return dummy;
  return m;
}

namespace {

const char* sym_token(Sym s) {
  switch (s) {
    case Sym::Zero: return "0";
    case Sym::One: return "1";
    case Sym::Blank: return "_";
  }
  return "?";
}

const char* action_token(Action a) {
  switch (a) {
    case Action::Write0: return "0";
    case Action::Write1: return "1";
    case Action::WriteBlank: return "_";
    case Action::AppendQ0: return "q0";
    case Action::AppendQ1: return "q1";
  }
  return "?";
}

const char* move_token(Move m) {
  switch (m) {
    case Move::Left: return "L";
    case Move::Right: return "R";
    case Move::Stay: return "S";
  }
  return "?";
}

std::optional<Sym> parse_sym(const std::string& tok) {
  if (tok == "0") return Sym::Zero;
  if (tok == "1") return Sym::One;
  if (tok == "_") return Sym::Blank;
  return std::nullopt;
}

std::optional<Action> parse_action(const std::string& tok) {
  if (tok == "0") return Action::Write0;
  if (tok == "1") return Action::Write1;
  if (tok == "_") return Action::WriteBlank;
  if (tok == "q0") return Action::AppendQ0;
  if (tok == "q1") return Action::AppendQ1;
  return std::nullopt;
}

std::optional<Move> parse_move(const std::string& tok) {
  if (tok == "L") return Move::Left;
  if (tok == "R") return Move::Right;
  if (tok == "S") return Move::Stay;
  return std::nullopt;
}

}  // namespace

std::string machine_to_text(const MachineDescription& m) {
  std::ostringstream os;
  os << "states " << m.state_count << "\n";
  os << "start " << m.start_state << "\n";
  os << "accept " << m.accept_state << "\n";
  os << "reject " << m.reject_state << "\n";
  os << "query " << m.query_state << "\n";
  os << "yes " << m.yes_state << "\n";
  os << "no " << m.no_state << "\n";
  for (const auto& [key, t] : m.transitions) {
    os << key.first << " " << sym_token(key.second) << " -> " << t.next_state
       << " " << action_token(t.action) << " " << move_token(t.move) << "\n";
  }
  return os.str();
}

MachineDescription machine_from_text(const std::string& text) {
  MachineDescription m;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& why) -> MachineError {
    return MachineError("machine text, line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;

    uint32_t value = 0;
    if (first == "states" || first == "start" || first == "accept" ||
        first == "reject" || first == "query" || first == "yes" || first == "no") {
      if (!(ls >> value)) throw bad("expected a number after '" + first + "'");
      if (first == "states") m.state_count = value;
      else if (first == "start") m.start_state = value;
      else if (first == "accept") m.accept_state = value;
      else if (first == "reject") m.reject_state = value;
      else if (first == "query") m.query_state = value;
      else if (first == "yes") m.yes_state = value;
      else m.no_state = value;
      continue;
    }

    std::string sym_tok, arrow, next_tok, action_tok, move_tok;
    if (!(ls >> sym_tok >> arrow >> next_tok >> action_tok >> move_tok) || arrow != "->")
      throw bad("expected `state symbol -> state action move`");
    uint32_t from = 0, next = 0;
    try {
      from = static_cast<uint32_t>(std::stoul(first));
      next = static_cast<uint32_t>(std::stoul(next_tok));
    } catch (const std::exception&) {
      throw bad("state ids must be numbers");
    }
    auto sym = parse_sym(sym_tok);
    auto action = parse_action(action_tok);
    auto move = parse_move(move_tok);
    if (!sym) throw bad("unknown symbol '" + sym_tok + "'");
    if (!action) throw bad("unknown action '" + action_tok + "'");
    if (!move) throw bad("unknown move '" + move_tok + "'");
    auto key = std::make_pair(from, *sym);
    if (m.transitions.count(key)) throw bad("duplicate transition");
    m.transitions[key] = Transition{next, *action, *move};
  }
  if (std::string reason = validate(m); !reason.empty())
    throw MachineError("machine text: " + reason);
  return m;
}

MachineDescription machine_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MachineError("cannot open machine file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return machine_from_text(buf.str());
}

}  // namespace npsplit
