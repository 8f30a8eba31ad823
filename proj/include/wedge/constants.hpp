#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wedge/ctrl_small_walled.hpp"
#include "wedge/lines.hpp"
#include "wedge/symmetry.hpp"
#include "wedge/visit.hpp"
#include "wedge/world.hpp"

namespace wedge {

// Anchor node on the bottom cutting line reached from starts of one vertical
// residue class, plus the wedge nodes on or below that line.
struct BottomSet {
  Node anchor;
  std::vector<Node> sigma;
};

// Everything the controllers need that is computed from the wedge boundary
// alone, ahead of the run. Exact arithmetic throughout. Fields not used by a
// given wedge class keep their defaults.
struct AlgorithmConstants {
  Frac cut{1, 1};          // cutting-line direction (x, y)
  Frac flank1{1, 1};       // flanking directions for large walled wedges
  Frac flank2{1, 1};
  i64 Y = 0;               // ceil(x / z_ratio); westward overshoot below a chain
  Rat z_ratio{0};          // y / (slope(h1) * x) - 1; 0 when h1 is horizontal
  Rat sigma{0};            // bottom-segment ratio for the semi-walled adjacent case
  i64 m = 1;               // pebble-advance step count for the semi-walled cases
  i64 r = 1;               // staircase count per bottom segment
  std::vector<BottomSet> bottom_sets;  // indexed by start.y mod cut.y
  i64 freeAdj_x = 1;       // row-scan width for the free adjacent case
};

namespace detail {

struct DiscardSink : TraceSink {
  bool on_event(const TraceEvent&) override { return true; }
};

// Easternmost lattice node of the first row at or above the apex whose y is
// congruent to want (mod y). Rows at or above the apex always extend West
// inside an obtuse wedge, so the floor of the eastern boundary is in it.
inline Node residue_representative(const Wedge& w, i64 y, i64 want) {
  Rat ox = w.origin().x, oy = w.origin().y;
  for (i64 ry = oy.ceil(); ry < oy.ceil() + y; ++ry) {
    if (((ry % y) + y) % y != want) continue;
    Rat dy = Rat(ry) - oy;
    Rat bound = dy * Rat(w.h2.dir.x, w.h2.dir.y);
    if (w.h1.dir.y < 0) bound = std::min(bound, dy * Rat(w.h1.dir.x, w.h1.dir.y));
    Node v{(ox + bound).floor(), ry};
    while (!node_in_wedge(w, v)) --v.x;
    return v;
  }
  throw std::logic_error("no representative row");
}

// Runs the downward phase alone from the given start; its end node is the
// anchor on the bottom line for the start's residue class.
inline Node bottom_anchor(const Wedge& w, i64 x, i64 y, Node start) {
  for (i64 budget = i64(1) << 16; budget <= i64(1) << 28; budget *= 4) {
    CoroController c(0, [x, y](Agent& a) { return obtuse::explore_down(a, x, y); });
    DiscardSink sink;
    RunOutcome out = run_stream(w, start, c, budget, sink);
    if (out.controller_finished) return out.final_state.agent;
  }
  throw std::runtime_error("downward phase did not reach the bottom line");
}

// Wedge nodes on or below the line through A with direction (x, y). The
// region is a triangle with corners A-line x wall, A-line x far boundary and
// the apex; scan its bounding box.
inline std::vector<Node> bottom_triangle(const Wedge& w, i64 x, i64 y, Node A) {
  auto hit = [&](const HalfLine& h) {
    Rat wx = h.origin.x - Rat(A.x), wy = h.origin.y - Rat(A.y);
    Rat t = (wx * Rat(h.dir.y) - wy * Rat(h.dir.x)) / Rat(cross(Vec{x, y}, h.dir));
    return Point{Rat(A.x) + t * Rat(x), Rat(A.y) + t * Rat(y)};
  };
  Point c1 = hit(w.h1), c2 = hit(w.h2), o = w.origin();
  Rat lox = std::min({c1.x, c2.x, o.x}), hix = std::max({c1.x, c2.x, o.x});
  Rat loy = std::min({c1.y, c2.y, o.y}), hiy = std::max({c1.y, c2.y, o.y});
  std::vector<Node> out;
  for (i64 nx = lox.ceil(); nx <= hix.floor(); ++nx)
    for (i64 ny = loy.ceil(); ny <= hiy.floor(); ++ny) {
      if (x * (ny - A.y) > y * (nx - A.x)) continue;
      if (node_in_wedge(w, {nx, ny})) out.push_back({nx, ny});
    }
  return out;
}

}  // namespace detail

// Constants for a wedge already in the given canonical orientation.
inline AlgorithmConstants precompute(const Wedge& w, Form form) {
  AlgorithmConstants k;
  switch (form) {
    case Form::SmallWalledObtuse: {
      k.cut = choose_cutting_line(w);
      i64 x = k.cut.x, y = k.cut.y;
      Rat s1(w.h1.dir.y, w.h1.dir.x);
      if (s1 > Rat(0)) {
        k.z_ratio = Rat(y) / (s1 * Rat(x)) - Rat(1);
        k.Y = (Rat(x) / k.z_ratio).ceil();
      }
      for (i64 res = 0; res < y; ++res) {
        Node rep = detail::residue_representative(w, y, res);
        Node a = detail::bottom_anchor(w, x, y, rep);
        k.bottom_sets.push_back({a, detail::bottom_triangle(w, x, y, a)});
      }
      break;
    }
    default:
      break;
  }
  return k;
}

inline AlgorithmConstants precompute(const Wedge& w) {
  CanonicalWedge c = canonicalize(w);
  return precompute(c.wedge, c.form);
}

}  // namespace wedge
