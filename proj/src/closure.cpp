#include "pathcrystal/closure.hpp"

#include <cstdlib>
#include <sstream>

namespace pathcrystal {

ClosureOptions closure_defaults() {
  ClosureOptions opt;
  if (const char* env = std::getenv("CRYSTAL_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opt.node_cap = v;
  }
  return opt;
}

std::string EdgeColoredGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  rankdir=TB;\n";
  for (std::size_t j = 0; j < nodes.size(); ++j)
    out << "  n" << j << " [label=\"" << nodes[j] << "\"];\n";
  for (auto& [f, i, t] : edges)
    out << "  n" << f << " -> n" << t << " [label=\"" << i << "\"];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json EdgeColoredGraph::to_json() const {
  nlohmann::json j;
  j["nodes"] = nodes;
  j["edges"] = nlohmann::json::array();
  for (auto& [f, i, t] : edges)
    j["edges"].push_back({{"from", f}, {"i", i}, {"to", t}});
  return j;
}

EdgeColoredGraph crystal_closure(const std::vector<CrystalElem>& seeds,
                                 const std::vector<std::pair<int, Dir>>& ops,
                                 const ClosureOptions& opt) {
  auto step = [](int i, Dir d, const CrystalElem& b) { return apply(i, d, b); };
  Closure<CrystalElem> c = close_under(seeds, ops, step, opt);
  return export_graph(c, [](const CrystalElem& b) { return encode(b); });
}

EdgeColoredGraph crystal_closure(const std::vector<TruncatedPath>& seeds,
                                 const std::vector<std::pair<int, Dir>>& ops,
                                 const ClosureOptions& opt) {
  auto step = [](int i, Dir d, const TruncatedPath& p) {
    return tensor_apply(i, d, p);
  };
  Closure<TruncatedPath> c = close_under(seeds, ops, step, opt);
  return export_graph(c, [](const TruncatedPath& p) { return encode(p); });
}

}  // namespace pathcrystal
