#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wedge/geometry.hpp"

namespace wedge {

struct Observation {
  PortSet free;
  bool full = false;  // a pebble lies on the current node
  int carried = 0;
  friend bool operator==(const Observation&, const Observation&) = default;
};

struct AgentOutput {
  Port port = Port::N;
  bool leave_full = false;  // fullness of the node being left
  int carried_next = 0;
  friend bool operator==(const AgentOutput&, const AgentOutput&) = default;
};

struct SimError : std::runtime_error {
  i64 step;
  SimError(const std::string& what, i64 step_) : std::runtime_error(what), step(step_) {}
};

struct BlockedPortError : SimError {
  BlockedPortError(Port p, i64 step_)
      : SimError(std::string("blocked port ") + port_char(p) + " taken at step " +
                     std::to_string(step_),
                 step_) {}
};

struct IllegalPebbleActionError : SimError {
  IllegalPebbleActionError(const std::string& what, i64 step_)
      : SimError(what + " at step " + std::to_string(step_), step_) {}
};

struct WorldState {
  Wedge wedge;
  Node agent{};
  int carried = 0;
  int p = 0;                  // pebble budget; carried + pebbles.size() == p
  std::vector<Node> pebbles;  // pairwise distinct nodes
  i64 step_count = 0;

  bool node_full(Node n) const {
    return std::find(pebbles.begin(), pebbles.end(), n) != pebbles.end();
  }
};

inline Observation observe(const WorldState& s) {
  return {free_ports(s.wedge, s.agent), s.node_full(s.agent), s.carried};
}

namespace detail {

// Validates out against obs and mutates the state. obs must be observe(s).
inline void apply_in_place(WorldState& s, const Observation& obs, const AgentOutput& out) {
  if (!obs.free.contains(out.port)) throw BlockedPortError(out.port, s.step_count);
  if (out.carried_next < 0 || out.carried_next > s.p)
    throw IllegalPebbleActionError("carried count out of range", s.step_count);
  if (!obs.full) {
    if (out.leave_full) {
      if (obs.carried == 0)
        throw IllegalPebbleActionError("drop while carrying none", s.step_count);
      if (out.carried_next != obs.carried - 1)
        throw IllegalPebbleActionError("drop must decrement carried", s.step_count);
      s.pebbles.push_back(s.agent);
    } else if (out.carried_next != obs.carried) {
      throw IllegalPebbleActionError("carried changed without drop", s.step_count);
    }
  } else {
    if (!out.leave_full) {
      if (out.carried_next != obs.carried + 1)
        throw IllegalPebbleActionError("pick must increment carried", s.step_count);
      s.pebbles.erase(std::find(s.pebbles.begin(), s.pebbles.end(), s.agent));
    } else if (out.carried_next != obs.carried) {
      throw IllegalPebbleActionError("carried changed without pick", s.step_count);
    }
  }
  s.carried = out.carried_next;
  s.agent = step(s.agent, out.port);
  s.step_count += 1;
}

}  // namespace detail

inline WorldState apply(WorldState s, const AgentOutput& out) {
  detail::apply_in_place(s, observe(s), out);
  return s;
}

struct TraceEvent {
  i64 t = 0;
  Node pos{};
  Observation obs;
  AgentOutput out;
  std::string_view proc;
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  Wedge wedge;
  Node start{};
  int p = 0;
  std::vector<TraceEvent> events;
  std::deque<std::string> label_pool;  // owns the labels events point at

  std::string_view intern(std::string_view label) {
    for (const std::string& k : label_pool)
      if (k == label) return k;
    label_pool.emplace_back(label);
    return label_pool.back();
  }

  std::unordered_set<Node, NodeHash> visited() const {
    std::unordered_set<Node, NodeHash> v;
    v.insert(start);
    for (const TraceEvent& e : events) v.insert(step(e.pos, e.out.port));
    return v;
  }
};

class Controller {
 public:
  virtual ~Controller() = default;
  // nullopt means the controller is done and takes no further steps.
  virtual std::optional<AgentOutput> next(const Observation& obs) = 0;
  // Label of the procedure that decides the next step. The returned view must
  // stay valid until the call to next() after the upcoming one (labels are
  // expected to be literals or otherwise stable storage).
  virtual std::string_view proc() const = 0;
  virtual int pebbles() const { return 0; }
};

class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual bool on_event(const TraceEvent& e) = 0;  // false stops the run
};

struct RunOutcome {
  i64 steps = 0;
  bool controller_finished = false;
  bool stopped_by_sink = false;
  WorldState final_state;
};

inline RunOutcome run_stream(const Wedge& w, Node start, Controller& c, i64 budget,
                             TraceSink& sink) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (w.kind != WedgeKind::Free && !node_in_wedge(w, start))
    throw std::invalid_argument("start node outside the wedge");
  int p = c.pebbles();
  WorldState s{w, start, p, p, {}, 0};
  PortOracle oracle(w);
  RunOutcome out;
  for (i64 t = 0; t < budget; ++t) {
    Observation obs{oracle.free(s.agent), s.node_full(s.agent), s.carried};
    std::optional<AgentOutput> act = c.next(obs);
    if (!act) {
      out.controller_finished = true;
      break;
    }
    // proc() right after next() names the procedure that decided this step.
    TraceEvent ev{t, s.agent, obs, *act, c.proc()};
    detail::apply_in_place(s, obs, *act);
    out.steps = t + 1;
    if (!sink.on_event(ev)) {
      out.stopped_by_sink = true;
      break;
    }
  }
  out.final_state = std::move(s);
  return out;
}

class CollectSink : public TraceSink {
 public:
  explicit CollectSink(Trace& t) : t_(t) {}
  bool on_event(const TraceEvent& e) override {
    TraceEvent ev = e;
    ev.proc = t_.intern(ev.proc);
    t_.events.push_back(ev);
    return true;
  }

 private:
  Trace& t_;
};

inline Trace run(const Wedge& w, Node start, Controller& c, i64 budget) {
  Trace t;
  t.wedge = w;
  t.start = start;
  t.p = c.pebbles();
  CollectSink sink(t);
  run_stream(w, start, c, budget, sink);
  return t;
}

}  // namespace wedge
