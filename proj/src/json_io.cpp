#include "hchroma/json_io.hpp"

#include "hchroma/error.hpp"

namespace hchroma {

using nlohmann::json;

json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

json to_json(const HyperMultigraph& h) {
  return {{"k", h.k()}, {"vertices", h.vertex_count()}, {"hyperedges", h.edge_lists()}};
}

json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [key, coeff] : f.terms()) {
    json classes = json::array();
    for (const auto& c : key) classes.push_back(to_json(c));
    terms.push_back({{"classes", std::move(classes)}, {"coeff", big_json(coeff)}});
  }
  return {{"k", f.k()}, {"basis", to_string(f.basis())}, {"terms", std::move(terms)}};
}

json to_json(const MonomialPoly& poly, const HostGraph& host) {
  json terms = json::array();
  for (const auto& [image, coeff] : poly.terms) {
    json ids = json::array();
    for (Vertex v : image) ids.push_back(host.vertex_json(v));
    terms.push_back({{"image", std::move(ids)}, {"coeff", big_json(coeff)}});
  }
  return {{"graphOrder", poly.graph_order}, {"terms", std::move(terms)}};
}

json to_json(const Embedding& e, const HostGraph& host) {
  json map = json::array();
  for (std::size_t v = 0; v < e.map.size(); ++v) map.push_back({v, host.vertex_json(e.map[v])});
  return {{"mode", to_string(e.mode)}, {"pattern", to_json(e.pattern)}, {"map", std::move(map)}};
}

SimpleGraph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > SimpleGraph::kMaxOrder) throw ParameterError("graph order out of range");
    SimpleGraph g(n);
    for (const auto& e : j.at("edges")) {
      const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParameterError("invalid edge in graph JSON");
      g.add_edge(u, v);
    }
    return g;
  } catch (const json::exception& ex) {
    throw ParameterError(std::string("malformed graph JSON: ") + ex.what());
  }
}

}  // namespace hchroma
