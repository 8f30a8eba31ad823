#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wedge/automaton.hpp"
#include "wedge/constants.hpp"
#include "wedge/coro.hpp"
#include "wedge/ctrl_small_walled.hpp"
#include "wedge/symmetry.hpp"

namespace wedge {

// Coroutine-backed controller carrying its declared counter bounds for the
// finite-memory audit.
class PhaseController : public AuditedController {
 public:
  template <class F>
  PhaseController(int pebbles, std::vector<CounterSpec> counters, F&& make_root)
      : impl_(pebbles, std::forward<F>(make_root)), counters_(std::move(counters)) {}

  std::optional<AgentOutput> next(const Observation& o) override { return impl_.next(o); }
  std::string_view proc() const override { return impl_.proc(); }
  int pebbles() const override { return impl_.pebbles(); }
  std::vector<CounterSpec> counter_specs() const override { return counters_; }

 private:
  CoroController impl_;
  std::vector<CounterSpec> counters_;
};

// Builds the library controller for a wedge already in canonical orientation.
// The controller is built from the wedge's boundary data alone and never from
// the start node.
inline std::unique_ptr<Controller> make_canonical_controller(const CanonicalWedge& c);

struct ControllerChoice {
  Form form;
  Wedge canonical;
  SymmetryMap to_real;
  MemoryReport memory;
  std::unique_ptr<Controller> controller;  // operates on the real wedge
};

// name: one of the form names, or "auto" to classify the wedge. The returned
// controller acts in real coordinates; the canonical-orientation strategy is
// wrapped behind the port permutation when the orientation differs.
inline ControllerChoice make_controller(const Wedge& w, std::string_view name = "auto") {
  CanonicalWedge c = [&] {
    if (name == "auto") return canonicalize(w);
    auto t = try_form(w, form_from_str(name));
    if (!t)
      throw UnclassifiableWedge("wedge cannot be oriented for " + std::string(name));
    return *t;
  }();
  auto inner = make_canonical_controller(c);
  MemoryReport rep = compile_check(*inner);
  std::unique_ptr<Controller> ctrl;
  if (c.to_real == SymmetryMap::identity())
    ctrl = std::move(inner);
  else
    ctrl = std::make_unique<RemappedController>(std::move(inner), c.to_real);
  return {c.form, c.wedge, c.to_real, std::move(rep), std::move(ctrl)};
}

namespace detail {

inline std::unique_ptr<Controller> make_obtuse_walled(const Wedge& w) {
  AlgorithmConstants k = precompute(w, Form::SmallWalledObtuse);
  i64 x = k.cut.x, y = k.cut.y, Y = k.Y;
  Rat s1(w.h1.dir.y, w.h1.dir.x);
  bool sloped = s1 > Rat(0);
  i64 inv = sloped ? (Rat(1) / s1).ceil() : 0;
  i64 capE = std::max<i64>(3 * x + 1, sloped ? inv + x + 2 : 0);
  obtuse::ObtuseParams p{x, y, Y, capE, {}};
  i64 leg = 0;
  for (const BottomSet& b : k.bottom_sets) {
    VisitScript s = visit_set(w, b.anchor, b.sigma);
    for (const auto& l : s.legs) leg = std::max<i64>(leg, i64(l.size()));
    p.bottom.push_back(std::move(s));
  }
  std::vector<CounterSpec> counters{
      {"explore-staircase-up", "count", x},
      {"explore-staircase-up", "sweep", x},
      {"explore-down", "count", y},
      {"horizontal-trip", "countW", x},
      {"explore-box", "countS", y},
      {"explore-box", "countW", x},
      {"finish-box", "countS", y},
      {"finish-box", "countE", capE},
      {"below-the-chain", "countW", Y},
      {"below-the-chain", "countS", sloped ? (s1 * Rat(x + Y)).ceil() + y + 3 : y},
      {"below-the-chain", "countE", sloped ? inv + x + Y + y + 2 : 0},
      {"below-the-chain", "climbN", y},
      {"below-the-chain", "climbE", x},
      {"visit", "walked", leg},
  };
  return std::make_unique<PhaseController>(
      0, std::move(counters),
      [p = std::move(p)](Agent& a) { return explore_obtuse_small_walled(a, p); });
}

}  // namespace detail

inline std::unique_ptr<Controller> make_canonical_controller(const CanonicalWedge& c) {
  switch (c.form) {
    case Form::SmallWalledAcute:
      return std::make_unique<PhaseController>(
          0, std::vector<CounterSpec>{}, [](Agent& a) { return explore_acute_walled(a); });
    case Form::SmallWalledObtuse:
      return detail::make_obtuse_walled(c.wedge);
    default:
      throw std::logic_error("controller for " + form_str(c.form) + " not built yet");
  }
}

}  // namespace wedge
