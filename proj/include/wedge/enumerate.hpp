#pragma once

#include <algorithm>
#include <vector>

#include "wedge/geometry.hpp"

namespace wedge {

// Wedge nodes within a Chebyshev ball, with the connected-component partition
// induced by unblocked edges that stay inside the ball.
struct BallNodes {
  std::vector<Node> nodes;      // sorted by (x, y)
  std::vector<int> component;   // parallel to nodes
  int components = 0;

  int index_of(Node n) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || !(*it == n)) return -1;
    return int(it - nodes.begin());
  }
  int component_of(Node n) const {
    int i = index_of(n);
    return i < 0 ? -1 : component[i];
  }
};

inline BallNodes enumerate_wedge_nodes(const Wedge& w, Node center, i64 radius) {
  BallNodes out;
  for (i64 x = center.x - radius; x <= center.x + radius; ++x)
    for (i64 y = center.y - radius; y <= center.y + radius; ++y)
      if (node_in_wedge(w, {x, y})) out.nodes.push_back({x, y});
  out.component.assign(out.nodes.size(), -1);
  std::vector<int> stack;
  for (size_t seed = 0; seed < out.nodes.size(); ++seed) {
    if (out.component[seed] >= 0) continue;
    int id = out.components++;
    out.component[seed] = id;
    stack.assign(1, int(seed));
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      Node u = out.nodes[i];
      for (Port p : kPorts) {
        Node v = step(u, p);
        int j = out.index_of(v);
        if (j < 0 || out.component[j] >= 0) continue;
        if (edge_blocked(w, u, v)) continue;
        out.component[j] = id;
        stack.push_back(j);
      }
    }
  }
  return out;
}

}  // namespace wedge
