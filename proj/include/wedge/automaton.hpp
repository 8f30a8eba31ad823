#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wedge/world.hpp"

namespace wedge {

struct MealyRule {
  std::string state;
  std::optional<PortSet> obs_free;  // nullopt matches anything
  std::optional<bool> obs_full;
  std::optional<int> obs_carry;
  Port port = Port::N;
  bool leave_full = false;
  int carry_next = 0;
  std::string next_state;
  int line = 0;

  bool matches(std::string_view st, const Observation& o) const {
    if (st != state) return false;
    if (obs_free && !(*obs_free == o.free)) return false;
    if (obs_full && *obs_full != o.full) return false;
    if (obs_carry && *obs_carry != o.carried) return false;
    return true;
  }
};

// Transition table; matching is first-rule-wins in file order.
struct MealySpec {
  std::string initial;
  int p = 0;
  std::vector<MealyRule> rules;

  const MealyRule* match(std::string_view state, const Observation& o) const {
    for (const MealyRule& r : rules)
      if (r.matches(state, o)) return &r;
    return nullptr;
  }

  std::vector<std::string> states() const {
    std::vector<std::string> out;
    auto add = [&](const std::string& s) {
      for (const std::string& k : out)
        if (k == s) return;
      out.push_back(s);
    };
    add(initial);
    for (const MealyRule& r : rules) {
      add(r.state);
      add(r.next_state);
    }
    return out;
  }

  // Lines: `state obs_free obs_full obs_carry -> port leave carry_next next_state`
  // with `*` wildcards and `-` for the empty port set. Directives `p <n>` and
  // `start <state>`; `#` comments.
  static MealySpec parse(std::istream& is) {
    MealySpec m;
    std::string line;
    int ln = 0;
    bool start_set = false;
    while (std::getline(is, line)) {
      ++ln;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      std::string tok;
      if (!(ss >> tok)) continue;
      if (tok == "p") {
        if (!(ss >> m.p) || m.p < 0) throw std::invalid_argument("automaton line " + std::to_string(ln) + ": bad pebble budget");
        continue;
      }
      if (tok == "start") {
        if (!(ss >> m.initial)) throw std::invalid_argument("automaton line " + std::to_string(ln) + ": bad start state");
        start_set = true;
        continue;
      }
      MealyRule r;
      r.line = ln;
      r.state = tok;
      std::string f, full, carry, arrow, port, leave, cn;
      if (!(ss >> f >> full >> carry >> arrow >> port >> leave >> cn >> r.next_state) ||
          arrow != "->")
        throw std::invalid_argument("automaton line " + std::to_string(ln) + ": malformed rule");
      std::string extra;
      if (ss >> extra) throw std::invalid_argument("automaton line " + std::to_string(ln) + ": trailing tokens");
      if (f != "*") r.obs_free = f == "-" ? PortSet::none() : PortSet::parse(f);
      if (full != "*") {
        if (full != "e" && full != "f") throw std::invalid_argument("automaton line " + std::to_string(ln) + ": bad fullness");
        r.obs_full = full == "f";
      }
      if (carry != "*") r.obs_carry = int(detailstoi(carry, ln));
      if (port.size() != 1) throw std::invalid_argument("automaton line " + std::to_string(ln) + ": bad port");
      r.port = port_from_char(port[0]);
      if (leave != "e" && leave != "f") throw std::invalid_argument("automaton line " + std::to_string(ln) + ": bad leave fullness");
      r.leave_full = leave == "f";
      r.carry_next = int(detailstoi(cn, ln));
      if (!start_set) {
        m.initial = r.state;
        start_set = true;
      }
      m.rules.push_back(std::move(r));
    }
    if (m.rules.empty()) throw std::invalid_argument("automaton: no rules");
    return m;
  }

 private:
  static i64 detailstoi(const std::string& s, int ln) {
    try {
      size_t pos = 0;
      i64 v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("automaton line " + std::to_string(ln) + ": bad integer '" + s + "'");
    }
  }
};

struct MealyViolation {
  std::string state;
  Observation obs;
  std::string message;
  int line = -1;
};

// Checks every reachable (state, observation) pair against the output
// restrictions: the chosen port must be free, and the pebble action must be
// one of the lawful shapes (keep / drop on empty while carrying / pick on
// full). Observations that cannot occur are skipped: an empty port set leaves
// no lawful output at all, and a full node while carrying all p pebbles is
// impossible because pebbles are conserved.
inline std::vector<MealyViolation> validate(const MealySpec& m) {
  std::vector<MealyViolation> out;
  for (const std::string& st : m.states()) {
    for (int bits = 1; bits < 16; ++bits) {
      for (int full = 0; full < 2; ++full) {
        for (int carry = 0; carry <= m.p; ++carry) {
          if (full == 1 && carry >= m.p) continue;
          Observation o{PortSet{std::uint8_t(bits)}, full == 1, carry};
          const MealyRule* r = m.match(st, o);
          auto fail = [&](const std::string& msg, int line) {
            out.push_back({st, o, msg, line});
          };
          if (!r) {
            fail("no matching rule", -1);
            continue;
          }
          if (!o.free.contains(r->port)) fail("port not free", r->line);
          if (!o.full) {
            if (r->leave_full) {
              if (o.carried == 0) fail("drop while carrying 0", r->line);
              else if (r->carry_next != o.carried - 1) fail("drop must decrement carried", r->line);
            } else if (r->carry_next != o.carried) {
              fail("carried changed without drop", r->line);
            }
          } else {
            if (!r->leave_full) {
              if (r->carry_next != o.carried + 1) fail("pick must increment carried", r->line);
            } else if (r->carry_next != o.carried) {
              fail("carried changed without pick", r->line);
            }
          }
        }
      }
    }
  }
  return out;
}

class MealyController : public Controller {
 public:
  explicit MealyController(const MealySpec& spec) : spec_(spec), state_(&spec.initial) {}

  std::optional<AgentOutput> next(const Observation& o) override {
    const MealyRule* r = spec_.match(*state_, o);
    if (!r) throw std::logic_error("automaton has no rule for state '" + *state_ + "'");
    deciding_ = state_;           // the state that consumed this observation
    state_ = &r->next_state;      // stable: points into the spec
    return AgentOutput{r->port, r->leave_full, r->carry_next};
  }
  // The automaton's memory is the state identifier; it doubles as the label.
  std::string_view proc() const override { return *deciding_; }
  int pebbles() const override { return spec_.p; }

 private:
  const MealySpec& spec_;
  const std::string* state_;
  const std::string* deciding_ = state_;
};

inline MealyController interpret(const MealySpec& m) {
  auto violations = validate(m);
  if (!violations.empty())
    throw std::invalid_argument("automaton rejected: " + violations.front().message +
                                " (state '" + violations.front().state + "')");
  return MealyController(m);
}

// Finite-memory audit for library controllers: every internal counter must
// declare a precomputed bound.
struct CounterSpec {
  std::string proc;
  std::string name;
  i64 bound = -1;  // negative means unbounded
};

struct MemoryReport {
  std::vector<CounterSpec> counters;
};

struct UnboundedCounterError : std::runtime_error {
  UnboundedCounterError(const std::string& proc, const std::string& name)
      : std::runtime_error("unbounded counter " + name + " in " + proc) {}
};

class AuditedController : public Controller {
 public:
  virtual std::vector<CounterSpec> counter_specs() const { return {}; }
};

inline MemoryReport compile_check(const Controller& c) {
  MemoryReport rep;
  if (auto* a = dynamic_cast<const AuditedController*>(&c)) {
    rep.counters = a->counter_specs();
    for (const CounterSpec& cs : rep.counters)
      if (cs.bound < 0) throw UnboundedCounterError(cs.proc, cs.name);
  }
  return rep;
}

}  // namespace wedge
