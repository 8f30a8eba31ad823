#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "support/validator_cases.hpp"
#include "wedge/automaton.hpp"
#include "wedge/trace_io.hpp"
#include "wedge/world.hpp"

using namespace wedge;

namespace {

Point pt(Rat x, Rat y) { return {x, y}; }

Wedge free_grid() {
  return Wedge::make(pt(Rat(0), Rat(0)), {1, 1}, {1, 1}, WedgeKind::Free);
}

Wedge semi_quarter() {
  return Wedge::make(pt(Rat(-1, 2), Rat(-1, 2)), {0, 1}, {1, 0}, WedgeKind::SemiWalled);
}

MealySpec load_asset(const std::string& name) {
  std::ifstream f(std::string(WEDGE_SOURCE_DIR "/assets/") + name);
  REQUIRE(f.good());
  return MealySpec::parse(f);
}

MealySpec from_text(const std::string& text) {
  std::istringstream is(text);
  return MealySpec::parse(is);
}

}  // namespace

TEST_CASE("parsing a transition table") {
  MealySpec m = load_asset("always-east.mealy");
  CHECK(m.p == 0);
  CHECK(m.initial == "A");
  CHECK(m.rules.size() == 8);
  CHECK(m.states() == std::vector<std::string>{"A"});
  CHECK_FALSE(m.rules.front().obs_full.has_value());
  REQUIRE(m.rules.front().obs_free.has_value());
  CHECK(*m.rules.front().obs_free == PortSet::parse("N"));
  CHECK_FALSE(m.rules.back().obs_free.has_value());
}

TEST_CASE("parse rejects malformed tables") {
  CHECK_THROWS_AS(from_text("A * * -> E e 0 A\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("A * * * -> X e 0 A\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("A * * * -> E q 0 A\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("A * * * -> E e zero A\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("A * * * -> E e 0 A extra\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("p -2\nA * * * -> E e 0 A\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("# only a comment\n"), std::invalid_argument);
}

TEST_CASE("first matching rule wins") {
  MealySpec m = from_text(
      "p 0\n"
      "start A\n"
      "A NESW * * -> N e 0 A\n"
      "A * * * -> E e 0 A\n");
  const MealyRule* r = m.match("A", {PortSet::all(), false, 0});
  REQUIRE(r != nullptr);
  CHECK(r->port == Port::N);
  r = m.match("A", {PortSet::parse("ES"), false, 0});
  REQUIRE(r != nullptr);
  CHECK(r->port == Port::E);
  CHECK(m.match("B", {PortSet::all(), false, 0}) == nullptr);
}

TEST_CASE("validator accepts and rejects each restriction") {
  for (const auto& c : cases::validator_cases()) {
    INFO(c.name);
    auto v = validate(from_text(c.text));
    if (c.ok) {
      CHECK(v.empty());
    } else {
      REQUIRE(v.size() == 1);
      CHECK(v.front().message == c.message);
      CHECK(v.front().state == "A");
    }
  }
}

TEST_CASE("validator flags missing rules") {
  auto v = validate(from_text("p 0\nstart A\nA NESW * * -> N e 0 B\n"));
  REQUIRE_FALSE(v.empty());
  bool missing = false;
  for (const auto& viol : v) missing |= viol.message == "no matching rule";
  CHECK(missing);
}

TEST_CASE("interpret rejects invalid specs") {
  MealySpec bad = from_text("p 0\nstart A\nA * * * -> E e 0 A\n");
  CHECK_THROWS_AS(interpret(bad), std::invalid_argument);
}

TEST_CASE("always-East walks east") {
  MealySpec m = load_asset("always-east.mealy");
  REQUIRE(validate(m).empty());
  MealyController c = interpret(m);
  Trace t = run(free_grid(), {0, 0}, c, 4);
  REQUIRE(t.events.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(t.events[i].pos == Node{i, 0});
    CHECK(t.events[i].out.port == Port::E);
  }
  auto vs = t.visited();
  for (i64 x = 1; x <= 4; ++x) CHECK(vs.count({x, 0}) == 1);
}

TEST_CASE("alternator zigzags with a period-2 state sequence") {
  MealySpec m = load_asset("alternator.mealy");
  REQUIRE(validate(m).empty());
  MealyController c = interpret(m);
  Trace t = run(free_grid(), {0, 0}, c, 6);
  REQUIRE(t.events.size() == 6);
  std::vector<Node> want = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}};
  std::vector<std::string_view> states = {"A", "B", "A", "B", "A", "B"};
  for (int i = 0; i < 6; ++i) {
    CHECK(t.events[i].pos == want[i]);
    CHECK(t.events[i].proc == states[i]);
  }
}

TEST_CASE("interpreted specs replay through the world without errors") {
  MealySpec m = load_asset("sweep.mealy");
  REQUIRE(validate(m).empty());
  MealyController c = interpret(m);
  CHECK_NOTHROW(run(semi_quarter(), {5, 5}, c, 2000));
}

TEST_CASE("sweep matches its golden trace") {
  MealySpec m = load_asset("sweep.mealy");
  MealyController c = interpret(m);
  Trace t = run(semi_quarter(), {3, 3}, c, 200);
  std::ostringstream os;
  write_trace(os, t);
  std::ifstream golden(WEDGE_SOURCE_DIR "/assets/golden/sweep.trace");
  REQUIRE(golden.good());
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(os.str() == want.str());
}

namespace {

class TwoCounter : public AuditedController {
 public:
  explicit TwoCounter(i64 bound) : bound_(bound) {}
  std::optional<AgentOutput> next(const Observation&) override {
    return AgentOutput{Port::N, false, 0};
  }
  std::string_view proc() const override { return "two-counter"; }
  std::vector<CounterSpec> counter_specs() const override {
    return {{"walk", "countW", 4}, {"walk", "countS", bound_}};
  }

 private:
  i64 bound_;
};

}  // namespace

TEST_CASE("memory audit lists bounds and rejects unbounded counters") {
  MealySpec m = load_asset("always-east.mealy");
  MealyController plain = interpret(m);
  CHECK(compile_check(plain).counters.empty());

  TwoCounter good(7);
  MemoryReport rep = compile_check(good);
  REQUIRE(rep.counters.size() == 2);
  CHECK(rep.counters[0].bound == 4);
  CHECK(rep.counters[1].bound == 7);

  TwoCounter bad(-1);
  CHECK_THROWS_AS(compile_check(bad), UnboundedCounterError);
}
