#pragma once

#include <string>

#include "json.hpp"
#include "zft/charlib.hpp"
#include "zft/graph.hpp"
#include "zft/propagation.hpp"
#include "zft/throttling.hpp"

namespace zft {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"pt": int | "inf", "rounds": [[v,...],...], "forces": [{"src","dst","kind","step"},...]}
nlohmann::json schedule_to_json(const Schedule& s);

nlohmann::json throttling_to_json(const ThrottlingResult& r);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json extension_to_json(const Extension& e);

// "0,3,6" -> vertex set; "" -> empty set; validates range against n
VertexSet parse_vertex_list(const std::string& csv, int n);

}  // namespace zft
