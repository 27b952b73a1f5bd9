#include "zft/jsonio.hpp"

#include <sstream>
#include <stdexcept>

namespace zft {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  json j{{"n", g.order()}, {"edges", std::move(edges)}, {"graph6", write_graph6(g)}};
  if (g.labeled()) {
    json labels = json::object();
    for (EdgeLabel l : {EdgeLabel::Path, EdgeLabel::Complete}) {
      json arr = json::array();
      for (const Edge& e : g.edges_with_label(l)) arr.push_back({e.first, e.second});
      labels[l == EdgeLabel::Path ? "path" : "complete"] = std::move(arr);
    }
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

json schedule_to_json(const Schedule& s) {
  json j;
  if (s.pt)
    j["pt"] = *s.pt;
  else
    j["pt"] = "inf";
  json rounds = json::array();
  for (VertexSet r : s.rounds) rounds.push_back(set_to_vector(r));
  j["rounds"] = std::move(rounds);
  json forces = json::array();
  for (const TimedForce& tf : s.forces)
    forces.push_back({{"src", tf.force.source},
                      {"dst", tf.force.target},
                      {"kind", kind_name(tf.force.kind)},
                      {"step", tf.step}});
  j["forces"] = std::move(forces);
  return j;
}

json throttling_to_json(const ThrottlingResult& r) {
  json j = schedule_to_json(r.schedule);
  j["value"] = r.value;
  j["witness"] = set_to_vector(r.witness);
  j["sets_examined"] = r.sets_examined;
  j["sets_pruned"] = r.sets_pruned;
  return j;
}

json witness_to_json(const Witness& w) {
  json contracted = json::array();
  for (const Edge& e : w.contracted) contracted.push_back({e.first, e.second});
  json deleted = json::array();
  for (const Edge& e : w.deleted) deleted.push_back({e.first, e.second});
  return json{{"a", w.a},
              {"b", w.b},
              {"contracted", std::move(contracted)},
              {"deleted", std::move(deleted)},
              {"order", w.order == WitnessOrder::ContractThenDelete ? "contract_then_delete"
                                                                    : "delete_then_contract"}};
}

json extension_to_json(const Extension& e) {
  json pos = json::array();
  for (const auto& [row, col] : e.array_position) pos.push_back({row, col});
  return json{{"graph", graph_to_json(e.graph)},
              {"rows", e.rows},
              {"cols", e.cols},
              {"positions", std::move(pos)},
              {"origin", e.origin},
              {"tau", e.tau}};
}

VertexSet parse_vertex_list(const std::string& csv, int n) {
  VertexSet s = 0;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad vertex '" + item + "'");
    if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (s & bit(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated");
    s |= bit(v);
  }
  return s;
}

}  // namespace zft
