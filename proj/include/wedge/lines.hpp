#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "wedge/geometry.hpp"

namespace wedge {

// Grid direction with positive components; slope = y/x.
struct Frac {
  i64 x = 1;
  i64 y = 1;
  friend bool operator==(const Frac&, const Frac&) = default;
  Rat slope() const { return Rat(y, x); }
};

inline Rat slope_of(Vec v) {
  if (v.x == 0) throw std::domain_error("vertical direction has no slope");
  return Rat(v.y, v.x);
}

// First mediant-descent node with slope in the open interval (lo, hi);
// hi absent means unbounded above. This is the unique admissible fraction
// minimizing x + y (every other admissible fraction is a descendant).
inline Frac minimal_fraction_between(Rat lo, std::optional<Rat> hi) {
  if (hi && *hi <= lo) throw std::domain_error("empty slope interval");
  if (hi && *hi <= Rat(0)) throw std::domain_error("empty slope interval");
  i64 lx = 1, ly = 0;  // 0/1
  i64 rx = 0, ry = 1;  // 1/0
  for (int iter = 0; iter < 1 << 20; ++iter) {
    i64 x = lx + rx, y = ly + ry;
    if ((i128)y * lo.den <= (i128)lo.num * x) {  // y/x <= lo: too shallow
      lx = x;
      ly = y;
      continue;
    }
    if (hi && (i128)y * hi->den >= (i128)hi->num * x) {  // y/x >= hi: too steep
      rx = x;
      ry = y;
      continue;
    }
    return {x, y};
  }
  throw std::logic_error("fraction search did not converge");
}

namespace detail {

// Open slope interval of directions u (with positive components) satisfying
// cross(h, u) < 0, intersected onto (lo, hi).
inline void constrain_slopes(Vec h, Rat& lo, std::optional<Rat>& hi, bool& feasible) {
  if (h.x > 0) {
    Rat b(h.y, h.x);
    if (!hi || *hi > b) hi = b;
  } else if (h.x < 0) {
    Rat b(h.y, h.x);
    if (b > lo) lo = b;
  } else {
    if (h.y < 0) feasible = false;  // cross((0,-1),u) = x > 0 for all admissible u
  }
  if (hi && (*hi <= lo || *hi <= Rat(0))) feasible = false;
}

}  // namespace detail

// Direction (x,y), x,y > 0, such that the full line through any wedge node
// with this direction meets both boundary rays. Deterministic: the unique
// minimal x+y admissible fraction.
inline Frac choose_cutting_line(const Wedge& w) {
  if (wedge_size(w) != WedgeSize::Small)
    throw std::domain_error("cutting line requires a small wedge");
  Rat lo(0);
  std::optional<Rat> hi;
  bool feasible = true;
  detail::constrain_slopes(w.h1.dir, lo, hi, feasible);
  detail::constrain_slopes(w.h2.dir, lo, hi, feasible);
  if (!feasible) throw std::domain_error("no admissible cutting direction in this orientation");
  return minimal_fraction_between(lo, hi);
}

// For a large walled wedge in canonical orientation (both boundary directions
// with positive components), returns directions whose slopes lie strictly
// between slope(L) and the slope of h1 resp. h2. Minimal-fraction tie-break as
// in choose_cutting_line.
inline std::pair<Frac, Frac> choose_flanking_lines(const Wedge& w, Frac L) {
  if (w.kind != WedgeKind::Walled || wedge_size(w) != WedgeSize::Large)
    throw std::domain_error("flanking lines require a large walled wedge");
  if (w.h1.dir.x <= 0 || w.h1.dir.y <= 0 || w.h2.dir.x <= 0 || w.h2.dir.y <= 0)
    throw std::domain_error("flanking lines require canonical orientation");
  Rat sL = L.slope();
  auto flank = [&](Vec h) {
    Rat sh = slope_of(h);
    if (sh == sL) throw std::domain_error("cutting slope equals boundary slope");
    if (sh < sL) return minimal_fraction_between(sh, sL);
    return minimal_fraction_between(sL, sh);
  };
  return {flank(w.h1.dir), flank(w.h2.dir)};
}

}  // namespace wedge
