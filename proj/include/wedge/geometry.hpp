#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wedge/rational.hpp"

namespace wedge {

enum class Port : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr std::array<Port, 4> kPorts{Port::N, Port::E, Port::S, Port::W};
constexpr const char* kPortChars = "NESW";

inline char port_char(Port p) { return kPortChars[static_cast<int>(p)]; }

inline Port port_from_char(char c) {
  switch (c) {
    case 'N': return Port::N;
    case 'E': return Port::E;
    case 'S': return Port::S;
    case 'W': return Port::W;
  }
  throw std::invalid_argument(std::string("bad port '") + c + "'");
}

inline Port opposite(Port p) {
  switch (p) {
    case Port::N: return Port::S;
    case Port::E: return Port::W;
    case Port::S: return Port::N;
    case Port::W: return Port::E;
  }
  throw std::logic_error("bad port");
}

struct PortSet {
  std::uint8_t bits = 0;

  static PortSet all() { return PortSet{0b1111}; }
  static PortSet none() { return PortSet{0}; }

  bool contains(Port p) const { return (bits >> static_cast<int>(p)) & 1u; }
  void add(Port p) { bits |= std::uint8_t(1u << static_cast<int>(p)); }
  void remove(Port p) { bits &= std::uint8_t(~(1u << static_cast<int>(p))); }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  std::string str() const {
    std::string s;
    for (int i = 0; i < 4; ++i)
      if ((bits >> i) & 1u) s += kPortChars[i];
    return s;
  }
  static PortSet parse(std::string_view s) {
    PortSet r;
    for (char c : s) r.add(port_from_char(c));
    return r;
  }

  friend bool operator==(const PortSet&, const PortSet&) = default;
};

struct Node {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

struct NodeHash {
  size_t operator()(const Node& n) const {
    std::uint64_t h = std::uint64_t(n.x) * 0x9e3779b97f4a7c15ull;
    h ^= std::uint64_t(n.y) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return size_t(h);
  }
};

inline Node step(Node n, Port p) {
  switch (p) {
    case Port::N: return {n.x, n.y + 1};
    case Port::E: return {n.x + 1, n.y};
    case Port::S: return {n.x, n.y - 1};
    case Port::W: return {n.x - 1, n.y};
  }
  throw std::logic_error("bad port");
}

// Integer direction vector.
struct Vec {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const Vec&, const Vec&) = default;
};

inline i64 cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
inline i64 dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }

inline Vec normalized_dir(Vec v) {
  if (v.x == 0 && v.y == 0) throw std::invalid_argument("zero direction");
  i64 g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
  return {v.x / g, v.y / g};
}

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct HalfLine {
  Point origin;
  Vec dir;  // gcd-normalized, nonzero

  static HalfLine make(Point origin, Vec dir) { return {origin, normalized_dir(dir)}; }
};

enum class WedgeKind { Walled, SemiWalled, Free };
enum class WedgeSize { Small, Large };

inline std::string kind_str(WedgeKind k) {
  switch (k) {
    case WedgeKind::Walled: return "walled";
    case WedgeKind::SemiWalled: return "semi-walled";
    case WedgeKind::Free: return "free";
  }
  throw std::logic_error("bad kind");
}

inline WedgeKind kind_from_str(std::string_view s) {
  if (s == "walled") return WedgeKind::Walled;
  if (s == "semi-walled" || s == "semi") return WedgeKind::SemiWalled;
  if (s == "free") return WedgeKind::Free;
  throw std::invalid_argument("bad wedge kind '" + std::string(s) + "'");
}

// Region swept clockwise from h1 to h2, both half-lines included.
// SemiWalled: h1 is the wall, h2 is free.
struct Wedge {
  HalfLine h1;
  HalfLine h2;
  WedgeKind kind = WedgeKind::Walled;

  static Wedge make(Point origin, Vec d1, Vec d2, WedgeKind kind) {
    return {HalfLine::make(origin, d1), HalfLine::make(origin, d2), kind};
  }
  const Point& origin() const { return h1.origin; }
};

inline WedgeSize wedge_size(const Wedge& w) {
  i64 c = cross(w.h1.dir, w.h2.dir);
  if (c < 0) return WedgeSize::Small;                      // angle in (0, pi)
  if (c > 0) return WedgeSize::Large;                      // angle in (pi, 2pi)
  return WedgeSize::Large;                                 // pi (opposite) or 2pi (same)
}

namespace detail {

// (n - origin), scaled by the positive lcm of the origin's denominators.
struct IVec {
  i128 x;
  i128 y;
};

inline IVec rel_scaled(const Point& o, Node n) {
  i64 b = o.x.den, d = o.y.den;
  i64 g = std::gcd(b, d);
  i128 l = (i128)(b / g) * d;
  return {((i128)n.x * b - o.x.num) * (l / b), ((i128)n.y * d - o.y.num) * (l / d)};
}

inline int cross_sign(Vec a, IVec b) { return sgn((i128)a.x * b.y - (i128)a.y * b.x); }
inline int dot_sign(Vec a, IVec b) { return sgn((i128)a.x * b.x + (i128)a.y * b.y); }

// Direction d (nonzero) lies in the closed clockwise cone from h1 to h2.
inline bool cone_contains(Vec h1, Vec h2, IVec d) {
  i64 c12 = cross(h1, h2);
  int c1 = cross_sign(h1, d);
  int c2 = cross_sign(h2, d);
  if (c12 < 0) return c1 <= 0 && c2 >= 0;
  if (c12 > 0) return !(c2 < 0 && c1 > 0);
  if (dot(h1, h2) > 0) return true;  // identical boundaries: whole plane
  return c1 <= 0;                    // straight angle: closed half-plane
}

}  // namespace detail

enum class Side { OnLine, Left, Right, OffRay };

inline Side point_side(const HalfLine& h, const Point& p) {
  Rat vx = p.x - h.origin.x;
  Rat vy = p.y - h.origin.y;
  int c = detail::sgn((i128)h.dir.x * vy.num * vx.den - (i128)h.dir.y * vx.num * vy.den);
  if (c > 0) return Side::Left;
  if (c < 0) return Side::Right;
  int t = detail::sgn((i128)h.dir.x * vx.num * vy.den + (i128)h.dir.y * vy.num * vx.den);
  return t >= 0 ? Side::OnLine : Side::OffRay;
}

inline bool node_in_wedge(const Wedge& w, Node n) {
  detail::IVec d = detail::rel_scaled(w.origin(), n);
  if (d.x == 0 && d.y == 0) return true;
  return detail::cone_contains(w.h1.dir, w.h2.dir, d);
}

// Closed ray intersects the closed segment [u,v] as point sets.
inline bool segment_blocked(const HalfLine& h, Node u, Node v) {
  detail::IVec U = detail::rel_scaled(h.origin, u);
  detail::IVec V = detail::rel_scaled(h.origin, v);
  i128 cu = (i128)h.dir.x * U.y - (i128)h.dir.y * U.x;
  i128 cv = (i128)h.dir.x * V.y - (i128)h.dir.y * V.x;
  if ((cu > 0 && cv > 0) || (cu < 0 && cv < 0)) return false;
  i128 tu = (i128)h.dir.x * U.x + (i128)h.dir.y * U.y;
  i128 tv = (i128)h.dir.x * V.x + (i128)h.dir.y * V.y;
  if (cu == 0 && cv == 0) return tu >= 0 || tv >= 0;  // collinear overlap
  if (cu == 0) return tu >= 0;
  if (cv == 0) return tv >= 0;
  i128 numr = cu * tv - cv * tu;  // ray parameter of the crossing, times (cu - cv)
  i128 denr = cu - cv;
  return numr == 0 || ((numr > 0) == (denr > 0));
}

// A wall blocks a grid edge if the supporting line is properly crossed with the
// crossing point on the closed ray. If the edge merely touches the ray (an
// endpoint on it, or a collinear overlap), wedge membership decides: the edge
// is blocked only when it links an inside node with an outside one. This keeps
// nodes lying exactly on a wall connected to the interior.
inline bool wall_blocks_edge(const Wedge& w, const HalfLine& h, Node u, Node v) {
  detail::IVec U = detail::rel_scaled(h.origin, u);
  detail::IVec V = detail::rel_scaled(h.origin, v);
  i128 cu = (i128)h.dir.x * U.y - (i128)h.dir.y * U.x;
  i128 cv = (i128)h.dir.x * V.y - (i128)h.dir.y * V.x;
  if ((cu > 0 && cv > 0) || (cu < 0 && cv < 0)) return false;
  i128 tu = (i128)h.dir.x * U.x + (i128)h.dir.y * U.y;
  i128 tv = (i128)h.dir.x * V.x + (i128)h.dir.y * V.y;
  if (cu != 0 && cv != 0) {
    i128 numr = cu * tv - cv * tu;
    i128 denr = cu - cv;
    return numr == 0 || ((numr > 0) == (denr > 0));
  }
  bool touches;
  if (cu == 0 && cv == 0) touches = tu >= 0 || tv >= 0;
  else if (cu == 0) touches = tu >= 0;
  else touches = tv >= 0;
  if (!touches) return false;
  return node_in_wedge(w, u) != node_in_wedge(w, v);
}

inline bool edge_blocked(const Wedge& w, Node u, Node v) {
  if (w.kind == WedgeKind::Free) return false;
  if (wall_blocks_edge(w, w.h1, u, v)) return true;
  if (w.kind == WedgeKind::Walled && wall_blocks_edge(w, w.h2, u, v)) return true;
  return false;
}

inline PortSet free_ports(const Wedge& w, Node n) {
  PortSet s = PortSet::all();
  if (w.kind == WedgeKind::Free) return s;
  for (Port p : kPorts)
    if (edge_blocked(w, n, step(n, p))) s.remove(p);
  return s;
}

// Precomputed-scale port tests for tight simulation loops. Results are
// identical to free_ports / node_in_wedge.
class PortOracle {
 public:
  explicit PortOracle(const Wedge& w) : w_(w) {
    walls_ = w.kind == WedgeKind::Walled ? 2 : w.kind == WedgeKind::SemiWalled ? 1 : 0;
    init(wall_[0], w.h1);
    init(wall_[1], w.h2);
  }

  bool in_wedge(Node n) const {
    detail::IVec d = rel(wall_[0], n);
    if (d.x == 0 && d.y == 0) return true;
    return detail::cone_contains(w_.h1.dir, w_.h2.dir, d);
  }

  PortSet free(Node n) const {
    PortSet s = PortSet::all();
    if (walls_ == 0) return s;
    for (int wi = 0; wi < walls_; ++wi) {
      const Wall& h = wall_[wi];
      detail::IVec U = rel(h, n);
      i128 cu = (i128)h.dir.x * U.y - (i128)h.dir.y * U.x;
      i128 tu = (i128)h.dir.x * U.x + (i128)h.dir.y * U.y;
      for (Port p : kPorts) {
        if (!s.contains(p)) continue;
        Node m = step(n, p);
        detail::IVec V = rel(h, m);
        i128 cv = (i128)h.dir.x * V.y - (i128)h.dir.y * V.x;
        if ((cu > 0 && cv > 0) || (cu < 0 && cv < 0)) continue;
        i128 tv = (i128)h.dir.x * V.x + (i128)h.dir.y * V.y;
        bool blocked;
        if (cu != 0 && cv != 0) {
          i128 numr = cu * tv - cv * tu;
          i128 denr = cu - cv;
          blocked = numr == 0 || ((numr > 0) == (denr > 0));
        } else {
          bool touches;
          if (cu == 0 && cv == 0) touches = tu >= 0 || tv >= 0;
          else if (cu == 0) touches = tu >= 0;
          else touches = tv >= 0;
          blocked = touches && in_wedge(n) != in_wedge(m);
        }
        if (blocked) s.remove(p);
      }
    }
    return s;
  }

 private:
  struct Wall {
    i128 ox = 0, oy = 0;
    i64 scale = 1;
    Vec dir{1, 0};
  };

  void init(Wall& wl, const HalfLine& h) {
    i64 b = h.origin.x.den, d = h.origin.y.den;
    i64 g = std::gcd(b, d);
    wl.scale = b / g * d;
    wl.ox = (i128)h.origin.x.num * (wl.scale / b);
    wl.oy = (i128)h.origin.y.num * (wl.scale / d);
    wl.dir = h.dir;
  }
  detail::IVec rel(const Wall& wl, Node n) const {
    return {(i128)n.x * wl.scale - wl.ox, (i128)n.y * wl.scale - wl.oy};
  }

  Wedge w_;
  Wall wall_[2];
  int walls_ = 0;
};

}  // namespace wedge
