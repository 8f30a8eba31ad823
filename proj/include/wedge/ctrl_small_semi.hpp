#pragma once

#include "wedge/coro.hpp"
#include "wedge/ctrl_small_walled.hpp"
#include "wedge/visit.hpp"

namespace wedge {

// Small semi-walled wedges: h1 is a wall, h2 only delimits the region that
// must be covered, and the agent may travel past it. One pebble parks the
// sweep front between phases. Only the wall ever blocks a port.
namespace semi {

// --- boundaries in adjacent quadrants ---------------------------------------
// Canonical orientation: wall strictly up-left, free boundary with a North
// component. Every row at or above the apex is a finite segment ending at the
// wall on the West, and there are no wedge nodes below the apex. The agent
// sweeps one row per phase; between phases the pebble waits on a line of
// slope 1/x that runs East of the free boundary, so a sweep started at the
// pebble crosses the whole wedge segment of its row.

// Walks West to the wall, slides down along it to just below the apex, and
// steps back up: ends at the North-East corner of the origin's cell, or one
// node West of that corner when the wall permits. A wedge whose apex is
// itself a grid node jams the slide at that node, with the wall sealing the
// West, South and East ports at once; the apex is then the corner sought.
inline Proc go_to_origin(Agent& a) {
  auto g = a.label("go-to-origin");
  while (a.free(Port::W)) co_await a.move(Port::W);
  while (!a.free(Port::W)) {
    while (!a.free(Port::S)) {
      if (!a.free(Port::E)) co_return;
      co_await a.move(Port::E);
    }
    co_await a.move(Port::S);
  }
  co_await a.move(Port::N);
  if (a.free(Port::W)) co_await a.move(Port::W);
}

// Forever: drop the pebble, sweep the row West to the wall, return East to
// the pebble, carry it one row North and x columns East. The first drop lands
// x+1 columns East of where Go to Origin stopped and each phase shifts the
// drop point by (x, 1), which keeps it East of the free boundary.
inline Proc bounce_to_pebble(Agent& a, i64 x) {
  auto g = a.label("bounce-to-pebble");
  // From a grid-node apex the only way out is North; the apex row holds no
  // other wedge node, so the phases simply start one row higher.
  if (!a.free(Port::E)) co_await a.move(Port::N);
  for (i64 i = 0; i < x + 1; ++i) co_await a.move(Port::E);
  for (;;) {
    co_await a.drop(Port::W);
    while (a.free(Port::W)) co_await a.move(Port::W);
    while (!a.full()) co_await a.move(Port::E);
    co_await a.pick(Port::N);
    for (i64 j = 0; j < x; ++j) co_await a.move(Port::E);
  }
}

// --- boundaries in opposite quadrants ---------------------------------------
// Canonical orientation: wall down-left (horizontal allowed), free boundary
// up-right (vertical allowed). Every row of the wedge is unbounded to the
// West; below the apex the wall is the wedge's Eastern boundary. The sweep
// walks cutting lines of slope y/x, one line further West per phase, running
// the box chain of the walled case from the pebble down to the wall. The
// pebble waits on the current line East of or on the free boundary, m
// staircase steps above where the chain starts.

struct SemiOppositeParams {
  i64 x = 1;           // cutting-line direction
  i64 y = 1;
  i64 Y = 0;           // Below-the-Chain westward overshoot
  i64 capE = 1;        // finish-box sweep cap
  i64 m = 1;           // staircase steps that move the pebble one line West
  i64 r = 1;           // staircase steps placing the first pebble
  VisitScript bottom;  // tour of the wedge nodes East of the first line
};

// Staircase of the cutting line through the start, downward, until a descent
// is cut short by the wall. Westward runs need no guard: every row continues
// West inside the wedge.
inline Proc slide_down_to_wall(Agent& a, i64 x, i64 y) {
  auto g = a.label("slide-down-to-wall");
  i64 count = y;
  while (count == y) {
    for (i64 i = 0; i < x; ++i) co_await a.move(Port::W);
    count = 0;
    while (a.free(Port::S) && count < y) {
      co_await a.move(Port::S);
      ++count;
    }
  }
}

// From a node resting on the wall, follows the wall up-East until a node past
// the apex with a free South port, then one step back West. Climbing handles
// both wall regimes: a shallow wall blocks from below, a steep one from the
// East, weaving across columns. At a grid-node apex North can be sealed too
// (the free boundary leans North-West over it); backing West along the wall
// reopens it.
inline Proc slide_up_to_origin(Agent& a) {
  auto g = a.label("slide-up-to-origin");
  while (!a.free(Port::S)) {
    while (!a.free(Port::E)) {
      while (!a.free(Port::N)) co_await a.move(Port::W);
      co_await a.move(Port::N);
    }
    co_await a.move(Port::E);
  }
  co_await a.move(Port::W);
}

// One step North, one West, then the precomputed tour of every wedge node on
// or East of the cutting line through the node reached. The tour starts and
// ends there.
inline Proc bottom_triangle(Agent& a, const VisitScript& s) {
  auto g = a.label("bottom-triangle");
  co_await a.move(Port::N);
  co_await a.move(Port::W);
  co_await run_visit(a, s);
}

// Climbs r staircase steps up the first cutting line and parks the pebble at
// the node reached, East of or on the free boundary. The pebble lands via a
// one-step bounce West, since a pebble is deposited on the node being left.
inline Proc initialize_pebble(Agent& a, i64 x, i64 y, i64 r) {
  auto g = a.label("initialize-pebble");
  for (i64 k = 0; k < r; ++k) {
    for (i64 i = 0; i < y; ++i) co_await a.move(Port::N);
    for (i64 j = 0; j < x; ++j) co_await a.move(Port::E);
  }
  co_await a.drop(Port::W);
  co_await a.move(Port::E);
}

// Picks the pebble up, climbs m staircase steps along its cutting line and
// moves one node West, onto the next line; parks the pebble there with the
// same one-step bounce. m is large enough that the climb gains more ground on
// the free boundary than the West step gives back, so the pebble stays East
// of or on it.
inline Proc move_pebble(Agent& a, i64 x, i64 y, i64 m) {
  auto g = a.label("move-pebble");
  co_await a.pick(Port::N);
  for (i64 i = 1; i < y; ++i) co_await a.move(Port::N);
  for (i64 j = 0; j < x; ++j) co_await a.move(Port::E);
  for (i64 k = 1; k < m; ++k) {
    for (i64 i = 0; i < y; ++i) co_await a.move(Port::N);
    for (i64 j = 0; j < x; ++j) co_await a.move(Port::E);
  }
  co_await a.move(Port::W);
  co_await a.drop(Port::W);
  co_await a.move(Port::E);
}

// Climbs the staircase from the last cardinal node of the finished chain back
// to the pebble, which rests on the same staircase where the chain started.
inline Proc go_back_to_pebble(Agent& a, i64 x, i64 y) {
  auto g = a.label("go-back-to-pebble");
  while (!a.full()) {
    for (i64 i = 0; i < y; ++i) co_await a.move(Port::N);
    for (i64 j = 0; j < x; ++j) co_await a.move(Port::E);
  }
}

}  // namespace semi

inline Proc explore_small_semi_adjacent(Agent& a, i64 x) {
  co_await semi::go_to_origin(a);
  co_await semi::bounce_to_pebble(a, x);
}

inline Proc explore_small_semi_opposite(Agent& a, semi::SemiOppositeParams p) {
  co_await semi::slide_down_to_wall(a, p.x, p.y);
  co_await semi::slide_up_to_origin(a);
  co_await semi::bottom_triangle(a, p.bottom);
  co_await semi::initialize_pebble(a, p.x, p.y, p.r);
  for (;;) {
    co_await semi::move_pebble(a, p.x, p.y, p.m);
    i64 endS = 0;
    co_await obtuse::explore_chain(a, p.x, p.y, p.capE, endS);
    co_await obtuse::below_the_chain(a, p.Y, endS, p.x);
    co_await semi::go_back_to_pebble(a, p.x, p.y);
  }
}

}  // namespace wedge
