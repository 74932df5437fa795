#ifndef PATHCRYSTAL_CLOSURE_HPP
#define PATHCRYSTAL_CLOSURE_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "pathcrystal/crystal.hpp"
#include "pathcrystal/path.hpp"

namespace pathcrystal {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosureOptions {
  std::size_t node_cap = 1'000'000;
};

// Reads the node cap from the CRYSTAL_CAP environment variable when set.
ClosureOptions closure_defaults();

// Closure result over a concrete node type.  Nodes are sorted by their
// canonical order; edges are (from, color, to) index triples meaning
// lower_color(nodes[from]) = nodes[to], sorted.
template <class Node>
struct Closure {
  std::vector<Node> nodes;
  std::vector<std::tuple<int, int, int>> edges;
};

// Breadth-first closure of `seeds` under the requested operators.  Every
// discovered edge is recorded in lowering orientation.  Throws
// BudgetExceeded past the node cap.
template <class Node, class ApplyFn>
Closure<Node> close_under(const std::vector<Node>& seeds,
                          const std::vector<std::pair<int, Dir>>& ops,
                          ApplyFn&& apply_op, const ClosureOptions& opt) {
  std::map<Node, int> seen;
  std::deque<Node> queue;
  for (const Node& s : seeds)
    if (seen.emplace(s, 0).second) queue.push_back(s);
  std::vector<std::pair<std::pair<Node, Node>, int>> raw_edges;
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    for (auto& [i, dir] : ops) {
      std::optional<Node> next = apply_op(i, dir, cur);
      if (!next) continue;
      if (seen.emplace(*next, 0).second) {
        if (seen.size() > opt.node_cap)
          throw BudgetExceeded("closure exceeded the node cap");
        queue.push_back(*next);
      }
      if (dir == Dir::lower_op)
        raw_edges.push_back({{cur, *next}, i});
      else
        raw_edges.push_back({{*next, cur}, i});
    }
  }
  Closure<Node> out;
  for (auto& [node, idx] : seen) {
    idx = static_cast<int>(out.nodes.size());
    out.nodes.push_back(node);
  }
  for (auto& [pair, i] : raw_edges)
    out.edges.push_back({seen[pair.first], i, seen[pair.second]});
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

// All lowering edges of the full crystal graph restricted to `nodes`:
// for each node and color, an edge is recorded iff the image lies in the set.
template <class Node, class ApplyFn>
Closure<Node> induced_graph(std::vector<Node> nodes, int n, ApplyFn&& apply_op) {
  Closure<Node> out;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::map<Node, int> index;
  for (const Node& x : nodes) {
    index.emplace(x, static_cast<int>(out.nodes.size()));
    out.nodes.push_back(x);
  }
  for (const Node& x : nodes)
    for (int i = 0; i < n; ++i) {
      std::optional<Node> y = apply_op(i, Dir::lower_op, x);
      if (!y) continue;
      auto it = index.find(*y);
      if (it != index.end())
        out.edges.push_back({index[x], i, it->second});
    }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// String-keyed export form: nodes are canonical encodings, sorted.
struct EdgeColoredGraph {
  std::vector<std::string> nodes;
  std::vector<std::tuple<int, int, int>> edges;  // (from, color, to)

  std::string to_dot() const;
  nlohmann::json to_json() const;

  bool operator==(const EdgeColoredGraph&) const = default;
};

template <class Node, class EncodeFn>
EdgeColoredGraph export_graph(const Closure<Node>& c, EncodeFn&& enc) {
  EdgeColoredGraph g;
  std::vector<int> order(c.nodes.size());
  for (std::size_t j = 0; j < c.nodes.size(); ++j) {
    g.nodes.push_back(enc(c.nodes[j]));
    order[j] = static_cast<int>(j);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.nodes[a] < g.nodes[b];
  });
  std::vector<std::string> sorted_nodes;
  std::vector<int> pos(c.nodes.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    pos[order[j]] = static_cast<int>(j);
    sorted_nodes.push_back(g.nodes[order[j]]);
  }
  g.nodes = std::move(sorted_nodes);
  for (auto& [f, i, t] : c.edges) g.edges.push_back({pos[f], i, pos[t]});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// Convenience closure over bare crystal elements with canonical encodings.
EdgeColoredGraph crystal_closure(const std::vector<CrystalElem>& seeds,
                                 const std::vector<std::pair<int, Dir>>& ops,
                                 const ClosureOptions& opt = closure_defaults());

// Same over truncated paths.
EdgeColoredGraph crystal_closure(const std::vector<TruncatedPath>& seeds,
                                 const std::vector<std::pair<int, Dir>>& ops,
                                 const ClosureOptions& opt = closure_defaults());

}  // namespace pathcrystal

#endif
