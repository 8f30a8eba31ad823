#pragma once

#include <algorithm>
#include <vector>

#include "wedge/coro.hpp"

namespace wedge {

// Shortest free-grid path from a to b; among the shortest paths the
// lexicographically first under port order N < E < S < W, which is the one
// with its moves sorted by port.
inline std::vector<Port> lex_shortest_path(Node a, Node b) {
  std::vector<Port> p;
  for (i64 i = a.y; i < b.y; ++i) p.push_back(Port::N);
  for (i64 i = a.x; i < b.x; ++i) p.push_back(Port::E);
  for (i64 i = b.y; i < a.y; ++i) p.push_back(Port::S);
  for (i64 i = b.x; i < a.x; ++i) p.push_back(Port::W);
  return p;
}

inline std::vector<Port> reverse_moves(const std::vector<Port>& walked) {
  std::vector<Port> r;
  r.reserve(walked.size());
  for (auto it = walked.rbegin(); it != walked.rend(); ++it) r.push_back(opposite(*it));
  return r;
}

// Precomputed script visiting every node of sigma from an anchor node: one
// outbound path per target, each walked there and back. The script carries no
// wall knowledge; execution truncates a leg at a blocked port and retraces.
struct VisitScript {
  Node anchor;
  std::vector<std::vector<Port>> legs;
};

inline VisitScript visit_set(Node a, std::vector<Node> sigma) {
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  VisitScript s{a, {}};
  for (Node b : sigma)
    if (b != a) s.legs.push_back(lex_shortest_path(a, b));
  return s;
}

// Wall-aware variant. In a region bounded by at most two walls meeting at a
// reflex-free corner (every wedge class except large walled), any node
// admitting a Manhattan-length path admits a coordinate-monotone one, so the
// lex-first shortest in-region path is built greedily: at every node take the
// smallest port that moves toward the target and is free.
inline std::vector<Port> lex_shortest_path_in_wedge(const Wedge& w, Node a, Node b) {
  std::vector<Port> path;
  Node cur = a;
  while (cur != b) {
    PortSet f = free_ports(w, cur);
    bool advanced = false;
    for (Port p : kPorts) {
      bool toward = (p == Port::N && b.y > cur.y) || (p == Port::E && b.x > cur.x) ||
                    (p == Port::S && b.y < cur.y) || (p == Port::W && b.x < cur.x);
      if (!toward || !f.contains(p)) continue;
      path.push_back(p);
      cur = step(cur, p);
      advanced = true;
      break;
    }
    if (!advanced) throw std::logic_error("no monotone path inside the wedge; target unreachable");
  }
  return path;
}

inline VisitScript visit_set(const Wedge& w, Node a, std::vector<Node> sigma) {
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  VisitScript s{a, {}};
  for (Node b : sigma)
    if (b != a) s.legs.push_back(lex_shortest_path_in_wedge(w, a, b));
  return s;
}

// The full move sequence of an unobstructed execution.
inline std::vector<Port> flatten(const VisitScript& s) {
  std::vector<Port> out;
  for (const auto& leg : s.legs) {
    out.insert(out.end(), leg.begin(), leg.end());
    auto back = reverse_moves(leg);
    out.insert(out.end(), back.begin(), back.end());
  }
  return out;
}

// Runs the script: a leg stops at the first blocked port and the agent
// retraces the prefix it walked, ending every leg back on the anchor.
inline Proc run_visit(Agent& a, VisitScript s) {
  auto g = a.label("visit");
  for (const auto& leg : s.legs) {
    size_t walked = 0;
    for (Port p : leg) {
      if (!a.free(p)) break;
      co_await a.move(p);
      ++walked;
    }
    while (walked > 0) co_await a.move(opposite(leg[--walked]));
  }
}

}  // namespace wedge
