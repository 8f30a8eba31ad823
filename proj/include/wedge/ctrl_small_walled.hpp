#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "wedge/coro.hpp"
#include "wedge/visit.hpp"

namespace wedge {

// Row scan for small walled wedges whose boundary directions both point
// strictly North: every horizontal grid line above the origin crosses both
// walls, so each row of the wedge is a finite segment and the segments of
// consecutive rows inside one component overlap.
namespace acute {

// Sweeps the agent's row segment wall to wall (West end first, then all the
// way East) and reports whether any node of it has a free South port.
inline Proc explore_horizontal(Agent& a, bool& open_south) {
  auto g = a.label("explore-horizontal");
  open_south = a.free(Port::S);
  while (a.free(Port::W)) {
    co_await a.move(Port::W);
    if (a.free(Port::S)) open_south = true;
  }
  while (a.free(Port::E)) {
    co_await a.move(Port::E);
    if (a.free(Port::S)) open_south = true;
  }
}

// Descends row by row to the bottom of the component.
inline Proc explore_south(Agent& a) {
  auto g = a.label("explore-south");
  bool open_south = false;
  co_await explore_horizontal(a, open_south);
  while (open_south) {
    while (!a.free(Port::S)) co_await a.move(Port::W);
    co_await a.move(Port::S);
    co_await explore_horizontal(a, open_south);
  }
}

// Climbs row by row indefinitely. Returns only when no row lies above the
// current one within the component (both N and W blocked at the West end),
// which happens exactly when a finite component has been fully explored.
inline Proc explore_north(Agent& a) {
  auto g = a.label("explore-north");
  for (;;) {
    bool open_south = false;
    co_await explore_horizontal(a, open_south);
    while (!a.free(Port::N)) {
      if (!a.free(Port::W)) co_return;
      co_await a.move(Port::W);
    }
    co_await a.move(Port::N);
  }
}

}  // namespace acute

inline Proc explore_acute_walled(Agent& a) {
  co_await acute::explore_south(a);
  co_await acute::explore_north(a);
}

// Obtuse small walled wedges in canonical orientation: h1 points down-left
// (x < 0, y <= 0) and h2 up-right (x >= 0, y > 0). Then N and W are free at
// every wedge node, while E and S can hit a wall; all procedures below lean on
// that: vertical climbs and westward runs are unguarded, the rest is guarded.
namespace obtuse {

// Slope of the cutting line L as (x, y) plus the Below-the-Chain overshoot Y
// and the precomputed bottom-triangle scripts, one per vertical residue class.
struct ObtuseParams {
  i64 x = 1;
  i64 y = 1;
  i64 Y = 0;
  i64 capE = 1;
  std::vector<VisitScript> bottom;
};

// From a cardinal node, explores the staircase of its line upward until an
// eastward run can no longer cover a full step, then walks back down to the
// topmost cardinal node sweeping the reachable part of the unfinished box.
inline Proc explore_staircase_up(Agent& a, i64 x, i64 y) {
  auto g = a.label("explore-staircase-up");
  i64 count = x;
  while (count == x) {
    for (i64 i = 0; i < y; ++i) {
      if (!a.free(Port::N))
        throw std::runtime_error("staircase climb hit a wall; wedge is not in canonical orientation");
      co_await a.move(Port::N);
    }
    count = 0;
    while (a.free(Port::E) && count < x) {
      co_await a.move(Port::E);
      ++count;
    }
  }
  while (count > 0) {
    co_await a.move(Port::W);
    --count;
  }
  for (i64 i = 0; i < y; ++i) {
    co_await a.move(Port::S);
    i64 sweep = 0;
    while (a.free(Port::E) && sweep < x) {
      co_await a.move(Port::E);
      ++sweep;
    }
    while (sweep > 0) {
      co_await a.move(Port::W);
      --sweep;
    }
  }
}

// Alternates climbing the current staircase and descending it toward the wall
// h1. Each full downward step tests the port East at the cardinal node
// reached: the first free one shifts the whole staircase one line closer to
// the origin. Stops on the line from whose staircase no East move is found,
// ending at the cardinal node where the descent turned around.
inline Proc explore_down(Agent& a, i64 x, i64 y) {
  auto g = a.label("explore-down");
  bool done = false;
  i64 count = 0;
  while (!done) {
    co_await explore_staircase_up(a, x, y);
    bool flag = false;
    count = y;
    while (count == y && !flag) {
      for (i64 i = 0; i < x; ++i) co_await a.move(Port::W);
      count = 0;
      while (a.free(Port::S) && count < y) {
        co_await a.move(Port::S);
        ++count;
      }
      if (count == y) {
        if (a.free(Port::E)) {
          co_await a.move(Port::E);
          flag = true;
        }
      } else {
        done = true;
      }
    }
  }
  for (i64 i = 0; i < count; ++i) co_await a.move(Port::N);
  for (i64 i = 0; i < x; ++i) co_await a.move(Port::E);
}

// x nodes West and back.
inline Proc horizontal_trip(Agent& a, i64 x) {
  auto g = a.label("horizontal-trip");
  i64 countW = 0;
  while (countW < x) {
    co_await a.move(Port::W);
    ++countW;
  }
  while (countW > 0) {
    co_await a.move(Port::E);
    --countW;
  }
}

// Explores the box whose North-East corner is the current node, row by row
// going South along the East column. complete reports whether all y downward
// steps were free; either way the agent finishes x steps West of the column
// it descended, i.e. at the South-West corner of the explored part.
inline Proc explore_box(Agent& a, i64 x, i64 y, i64& countS, bool& complete) {
  auto g = a.label("explore-box");
  co_await horizontal_trip(a, x);
  countS = 0;
  while (a.free(Port::S) && countS < y) {
    co_await a.move(Port::S);
    co_await horizontal_trip(a, x);
    ++countS;
  }
  complete = countS == y;
  i64 countW = 0;
  while (countW < x) {
    co_await a.move(Port::W);
    ++countW;
  }
}

// Continues an incomplete box down its West column as far as the boundary
// allows, sweeping East on every extra row. A sweep normally ends at a wall;
// capE caps it for rows that have no wall to the East (possible in semi-walled
// wedges just above the apex, where everything past the box is covered by the
// complete boxes higher up the chain). The cap is loose enough never to cut a
// sweep short of a wall it would reach.
inline Proc finish_box(Agent& a, i64 y, i64 capE, i64& countS) {
  auto g = a.label("finish-box");
  while (countS < y && a.free(Port::S)) {
    co_await a.move(Port::S);
    ++countS;
    i64 countE = 0;
    while (a.free(Port::E) && countE < capE) {
      co_await a.move(Port::E);
      ++countE;
    }
    while (countE > 0) {
      co_await a.move(Port::W);
      --countE;
    }
  }
}

// Box by box down the line through the starting node. A box can be cut on its
// East column by either boundary: near the top of the line the far boundary
// h2 undercuts it, near the bottom the wall h1 does. The two cases look alike
// from inside a box, but they differ one box-width West: if the descent there
// still completes y rows, the agent stands on the next cardinal node of the
// line and the chain continues; if it is interrupted too, the line has met
// the wall h1 and the chain is done. endS reports how far the last descent
// got, so the caller can climb back to the last node on the line.
inline Proc explore_chain(Agent& a, i64 x, i64 y, i64 capE, i64& endS) {
  auto g = a.label("explore-chain");
  for (;;) {
    bool complete = true;
    i64 countS = 0;
    while (complete) co_await explore_box(a, x, y, countS, complete);
    co_await finish_box(a, y, capE, countS);
    endS = countS;
    if (countS < y) break;
  }
}

// Covers the sliver between the last box of a chain and the point where the
// chain's line meets the wall h1: Y steps West, then straight down to the
// wall sweeping East to the wall on every row, then back. Afterwards climbs
// climbN nodes North and climbE nodes East, which returns the agent from the
// chain's lowest point to the last node on the chain's line.
inline Proc below_the_chain(Agent& a, i64 Y, i64 climbN, i64 climbE) {
  auto g = a.label("below-the-chain");
  for (i64 i = 0; i < Y; ++i) co_await a.move(Port::W);
  i64 countS = 0;
  while (a.free(Port::S)) {
    co_await a.move(Port::S);
    ++countS;
    i64 countE = 0;
    while (a.free(Port::E)) {
      co_await a.move(Port::E);
      ++countE;
    }
    while (countE > 0) {
      co_await a.move(Port::W);
      --countE;
    }
  }
  for (i64 i = 0; i < countS; ++i) co_await a.move(Port::N);
  for (i64 i = 0; i < Y; ++i) co_await a.move(Port::E);
  for (i64 i = 0; i < climbN; ++i) co_await a.move(Port::N);
  for (i64 i = 0; i < climbE; ++i) co_await a.move(Port::E);
}

// Forever: chain of boxes down to the wall, the sliver below it, the
// staircase back up, one step North onto the next line. The return trip after
// the sliver climbs from the chain's lowest point back to the last node on
// the line (up the column the chain just descended, then East along the top
// row of the last box), so the staircase always runs on the chain's own line
// and reaches its top; the chain line therefore advances by exactly one line
// per turn. The North step is the only move this procedure makes itself, so
// trace events labelled "explore-up" mark the turns of the loop.
inline Proc explore_up(Agent& a, i64 x, i64 y, i64 Y, i64 capE) {
  auto g = a.label("explore-up");
  for (;;) {
    i64 endS = 0;
    co_await explore_chain(a, x, y, capE, endS);
    co_await below_the_chain(a, Y, endS, x);
    co_await explore_staircase_up(a, x, y);
    co_await a.move(Port::N);
  }
}

}  // namespace obtuse

inline Proc explore_obtuse_small_walled(Agent& a, obtuse::ObtuseParams p) {
  co_await obtuse::explore_down(a, p.x, p.y);
  {
    auto g = a.label("explore-bottom-triangles");
    for (const VisitScript& s : p.bottom) co_await run_visit(a, s);
  }
  co_await obtuse::explore_up(a, p.x, p.y, p.Y, p.capE);
}

}  // namespace wedge
