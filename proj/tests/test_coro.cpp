#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>
#include "wedge/coro.hpp"

using namespace wedge;

namespace {

Wedge open_plane() {
  return Wedge::make({Rat(1, 2), Rat(1, 2)}, {0, 1}, {0, 1}, WedgeKind::Free);
}

Proc edge(Agent& a, Port p, int len) {
  auto g = a.label("edge");
  for (int i = 0; i < len; ++i) co_await a.move(p);
}

Proc square(Agent& a) {
  auto g = a.label("square");
  for (Port p : {Port::N, Port::E, Port::S, Port::W}) co_await edge(a, p, 2);
}

Proc mixed_labels(Agent& a) {
  co_await a.move(Port::N);
  {
    auto g = a.label("inner");
    co_await a.move(Port::E);
  }
  co_await a.move(Port::S);
}

Proc pebbler(Agent& a) {
  co_await a.drop(Port::N);
  co_await a.move(Port::S);
  co_await a.pick(Port::N);
}

Proc boom(Agent& a) {
  auto g = a.label("boom");
  co_await a.move(Port::N);
  throw std::runtime_error("kaboom");
}

Proc outer(Agent& a) { co_await boom(a); }

Proc deep(Agent& a, int d) {
  if (d == 0) {
    co_await a.move(Port::E);
    co_return;
  }
  co_await deep(a, d - 1);
}

Proc forever(Agent& a) {
  for (;;) co_await a.move(Port::N);
}

struct NullSink : TraceSink {
  bool on_event(const TraceEvent&) override { return true; }
};

}  // namespace

TEST_CASE("coroutine controller walks a square through nested procedures") {
  CoroController c(0, [](Agent& a) { return square(a); });
  Trace t = run(open_plane(), {0, 0}, c, 100);
  REQUIRE(t.events.size() == 8);
  for (const TraceEvent& e : t.events) CHECK(e.proc == "edge");
  CHECK(t.events.back().pos == Node{1, 0});
  CHECK(t.events.back().out.port == Port::W);
  auto v = t.visited();
  CHECK(v.size() == 8);
  CHECK(v.count(Node{2, 2}) == 1);
  CHECK(v.count(Node{1, 0}) == 1);
}

TEST_CASE("finished root reports the controller as done") {
  CoroController c(0, [](Agent& a) { return square(a); });
  NullSink sink;
  auto out = run_stream(open_plane(), {0, 0}, c, 100, sink);
  CHECK(out.steps == 8);
  CHECK(out.controller_finished);
  CHECK(out.final_state.agent == Node{0, 0});
  CHECK(c.next(Observation{PortSet::all(), false, 0}) == std::nullopt);
}

TEST_CASE("labels revert when a procedure scope unwinds") {
  CoroController c(0, [](Agent& a) { return mixed_labels(a); });
  Trace t = run(open_plane(), {0, 0}, c, 100);
  REQUIRE(t.events.size() == 3);
  CHECK(t.events[0].proc == "start");
  CHECK(t.events[1].proc == "inner");
  CHECK(t.events[2].proc == "start");
}

TEST_CASE("drop and pick helpers keep the pebble shape rules") {
  CoroController c(1, [](Agent& a) { return pebbler(a); });
  Trace t = run(open_plane(), {0, 0}, c, 100);
  REQUIRE(t.events.size() == 3);
  CHECK(t.events[0].out == AgentOutput{Port::N, true, 0});
  CHECK_FALSE(t.events[1].obs.full);
  CHECK(t.events[2].obs.full);
  CHECK(t.events[2].out == AgentOutput{Port::N, false, 1});
}

TEST_CASE("exceptions chain out of nested procedures") {
  CoroController c(0, [](Agent& a) { return outer(a); });
  REQUIRE_THROWS_WITH(run(open_plane(), {0, 0}, c, 100), "kaboom");
}

TEST_CASE("deep nesting resolves through symmetric transfer") {
  CoroController c(0, [](Agent& a) { return deep(a, 500); });
  NullSink sink;
  auto out = run_stream(open_plane(), {0, 0}, c, 100, sink);
  CHECK(out.steps == 1);
  CHECK(out.controller_finished);
  CHECK(out.final_state.agent == Node{1, 0});
}

TEST_CASE("budget exhaustion stops a non-terminating procedure") {
  CoroController c(0, [](Agent& a) { return forever(a); });
  NullSink sink;
  auto out = run_stream(open_plane(), {0, 0}, c, 50, sink);
  CHECK(out.steps == 50);
  CHECK_FALSE(out.controller_finished);
  CHECK(out.final_state.agent == Node{0, 50});
}
