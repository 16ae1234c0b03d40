#pragma once

#include "json.hpp"

#include "hchroma/bigint.hpp"
#include "hchroma/embedding.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/homomorphism.hpp"
#include "hchroma/host.hpp"
#include "hchroma/hypermulti.hpp"
#include "hchroma/symfunc.hpp"

namespace hchroma {

/// Integers are written as decimal strings so any consumer parses them
/// exactly.
inline nlohmann::json big_json(const BigInt& v) { return v.str(); }

/// {"n": n, "edges": [[u, v], ...]} with u < v, sorted.
nlohmann::json to_json(const SimpleGraph& g);
/// {"k": k, "vertices": m, "hyperedges": [[...], ...]}.
nlohmann::json to_json(const HyperMultigraph& h);
/// {"k": k, "basis": "m"|"p", "terms": [{"classes": [...], "coeff": "..."}]}.
nlohmann::json to_json(const SymFunc& f);
/// {"graphOrder": n, "terms": [{"image": [...], "coeff": "..."}]}.
nlohmann::json to_json(const MonomialPoly& poly, const HostGraph& host);
/// {"mode": ..., "pattern": graph, "map": [[v, host-vertex], ...]}.
nlohmann::json to_json(const Embedding& e, const HostGraph& host);

SimpleGraph graph_from_json(const nlohmann::json& j);

}  // namespace hchroma
