#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wedge/world.hpp"

namespace wedge {

// Grid symmetry: an optional reflection across the main diagonal
// ((x,y) -> (y,x)) followed by `rot` counterclockwise quarter turns.
struct SymmetryMap {
  int rot = 0;  // 0..3
  bool flip = false;

  static SymmetryMap identity() { return {}; }

  Vec apply(Vec v) const {
    if (flip) std::swap(v.x, v.y);
    for (int i = 0; i < rot; ++i) v = Vec{-v.y, v.x};
    return v;
  }
  Node apply(Node n) const {
    if (flip) std::swap(n.x, n.y);
    for (int i = 0; i < rot; ++i) n = Node{-n.y, n.x};
    return n;
  }
  Point apply(Point p) const {
    if (flip) std::swap(p.x, p.y);
    for (int i = 0; i < rot; ++i) p = Point{-p.y, p.x};
    return p;
  }
  Port apply(Port q) const {
    Node n = apply(step(Node{0, 0}, q));
    for (Port c : kPorts)
      if (step(Node{0, 0}, c) == n) return c;
    throw std::logic_error("port image is not a port");
  }
  PortSet apply(PortSet s) const {
    PortSet r;
    for (Port q : kPorts)
      if (s.contains(q)) r.add(apply(q));
    return r;
  }

  // Reflections are involutions; rotations invert by negating the angle.
  SymmetryMap inverse() const { return flip ? *this : SymmetryMap{(4 - rot) % 4, false}; }

  // Map equal to applying *this first, then `after`.
  SymmetryMap then(SymmetryMap after) const {
    int r = after.rot + (after.flip ? 4 - rot : rot);
    return {r % 4, flip != after.flip};
  }

  bool orientation_reversing() const { return flip; }

  // Image of a wedge. A reflection reverses the sweep orientation, so the
  // boundaries swap slots to keep the region clockwise from h1. That would
  // move a semi-walled wedge's wall out of slot 1, which the wedge model
  // cannot express.
  Wedge apply_wedge(const Wedge& w) const {
    if (flip && w.kind == WedgeKind::SemiWalled)
      throw std::logic_error("cannot reflect a semi-walled wedge");
    HalfLine a{apply(w.h1.origin), apply(w.h1.dir)};
    HalfLine b{apply(w.h2.origin), apply(w.h2.dir)};
    if (flip) std::swap(a, b);
    return Wedge{a, b, w.kind};
  }

  friend bool operator==(const SymmetryMap&, const SymmetryMap&) = default;
};

struct UnclassifiableWedge : std::domain_error {
  explicit UnclassifiableWedge(const std::string& what) : std::domain_error(what) {}
};

// Reference orientations the exploration strategies are written for.
enum class Form {
  SmallWalledAcute,    // both boundaries point strictly North
  SmallWalledObtuse,   // h1 in [180, 270), h2 in (0, 90] degrees
  SmallSemiAdjacent,   // wall strictly up-left, free boundary points North
  SmallSemiOpposite,   // wall strictly down-left, free boundary strictly up-right
  SmallFreeAdjacent,   // h1 strictly up-left, h2 points North
  SmallFreeOpposite,   // h1 strictly down-left, h2 strictly up-right
  LargeWalled,         // both boundaries strictly up-right
  LargeSemi,           // wall strictly up-right
  LargeFree,           // any orientation
};

inline std::string form_str(Form f) {
  switch (f) {
    case Form::SmallWalledAcute: return "small-walled-acute";
    case Form::SmallWalledObtuse: return "small-walled-obtuse";
    case Form::SmallSemiAdjacent: return "small-semi-adjacent";
    case Form::SmallSemiOpposite: return "small-semi-opposite";
    case Form::SmallFreeAdjacent: return "small-free-adjacent";
    case Form::SmallFreeOpposite: return "small-free-opposite";
    case Form::LargeWalled: return "large-walled";
    case Form::LargeSemi: return "large-semi";
    case Form::LargeFree: return "large-free";
  }
  throw std::logic_error("bad form");
}

inline Form form_from_str(std::string_view s) {
  for (Form f : {Form::SmallWalledAcute, Form::SmallWalledObtuse, Form::SmallSemiAdjacent,
                 Form::SmallSemiOpposite, Form::SmallFreeAdjacent, Form::SmallFreeOpposite,
                 Form::LargeWalled, Form::LargeSemi, Form::LargeFree})
    if (form_str(f) == s) return f;
  throw std::invalid_argument("bad form '" + std::string(s) + "'");
}

inline WedgeKind form_kind(Form f) {
  switch (f) {
    case Form::SmallWalledAcute:
    case Form::SmallWalledObtuse:
    case Form::LargeWalled: return WedgeKind::Walled;
    case Form::SmallSemiAdjacent:
    case Form::SmallSemiOpposite:
    case Form::LargeSemi: return WedgeKind::SemiWalled;
    default: return WedgeKind::Free;
  }
}

inline WedgeSize form_size(Form f) {
  switch (f) {
    case Form::LargeWalled:
    case Form::LargeSemi:
    case Form::LargeFree: return WedgeSize::Large;
    default: return WedgeSize::Small;
  }
}

struct CanonicalWedge {
  Form form;
  Wedge wedge;          // input rotated into the form's reference orientation
  SymmetryMap to_real;  // canonical coordinates -> input coordinates
};

// Tries to rotate w into the reference orientation of form f. Rotations
// suffice: reflections would unseat a semi-walled wedge's wall, and every
// orientation a reflection could fix is already covered by another form.
inline std::optional<CanonicalWedge> try_form(const Wedge& w, Form f) {
  if (w.kind != form_kind(f) || wedge_size(w) != form_size(f)) return std::nullopt;
  for (int k = 0; k < 4; ++k) {
    SymmetryMap m{k, false};
    Wedge c = m.apply_wedge(w);
    Vec a = c.h1.dir;
    Vec b = c.h2.dir;
    bool ok = false;
    switch (f) {
      case Form::SmallWalledAcute: ok = a.y > 0 && b.y > 0; break;
      case Form::SmallWalledObtuse: ok = a.x < 0 && a.y <= 0 && b.x >= 0 && b.y > 0; break;
      case Form::SmallSemiAdjacent: ok = a.x < 0 && a.y > 0 && b.y > 0; break;
      // Opposite admits the axis limit cases: horizontal wall, vertical free
      // boundary, and (horizontal wall only) a free boundary pointing up-left,
      // which the controller handles by widening it to vertical.
      case Form::SmallSemiOpposite:
        ok = a.x < 0 && a.y <= 0 && b.y > 0 && (b.x >= 0 || a.y == 0);
        break;
      case Form::SmallFreeAdjacent: ok = a.x < 0 && a.y > 0 && b.y > 0; break;
      case Form::SmallFreeOpposite: ok = a.x < 0 && a.y < 0 && b.x > 0 && b.y > 0; break;
      case Form::LargeWalled: ok = a.x > 0 && a.y > 0 && b.x > 0 && b.y > 0; break;
      case Form::LargeSemi: ok = a.x > 0 && a.y > 0; break;
      case Form::LargeFree: ok = true; break;
    }
    if (ok) return CanonicalWedge{f, c, m.inverse()};
  }
  return std::nullopt;
}

// Picks the orientation form for a wedge, preferring the simpler strategy
// when several apply. Throws UnclassifiableWedge if no rotation fits any
// form for the wedge's class (possible for boundaries on or straddling grid
// axes in unlucky ways).
inline CanonicalWedge canonicalize(const Wedge& w) {
  auto pick = [&](std::initializer_list<Form> forms) -> CanonicalWedge {
    for (Form f : forms)
      if (auto c = try_form(w, f)) return *c;
    throw UnclassifiableWedge(
        "no supported orientation for this " + kind_str(w.kind) + " wedge");
  };
  if (wedge_size(w) == WedgeSize::Small) {
    switch (w.kind) {
      case WedgeKind::Walled:
        return pick({Form::SmallWalledAcute, Form::SmallWalledObtuse});
      case WedgeKind::SemiWalled:
        return pick({Form::SmallSemiAdjacent, Form::SmallSemiOpposite});
      case WedgeKind::Free:
        return pick({Form::SmallFreeAdjacent, Form::SmallFreeOpposite});
    }
  } else {
    switch (w.kind) {
      case WedgeKind::Walled: return pick({Form::LargeWalled});
      case WedgeKind::SemiWalled: return pick({Form::LargeSemi});
      case WedgeKind::Free: return pick({Form::LargeFree});
    }
  }
  throw std::logic_error("bad wedge kind");
}

// Drives a controller written for the canonical orientation on the real
// wedge by permuting ports through the symmetry map.
class RemappedController : public Controller {
 public:
  RemappedController(std::unique_ptr<Controller> inner, SymmetryMap to_real)
      : inner_(std::move(inner)), map_(to_real) {}

  std::optional<AgentOutput> next(const Observation& obs) override {
    PortSet f;
    for (Port q : kPorts)
      if (obs.free.contains(map_.apply(q))) f.add(q);
    auto out = inner_->next(Observation{f, obs.full, obs.carried});
    if (!out) return std::nullopt;
    return AgentOutput{map_.apply(out->port), out->leave_full, out->carried_next};
  }
  std::string_view proc() const override { return inner_->proc(); }
  int pebbles() const override { return inner_->pebbles(); }

 private:
  std::unique_ptr<Controller> inner_;
  SymmetryMap map_;
};

}  // namespace wedge
