#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zft/graph.hpp"
#include "zft/propagation.hpp"
#include "zft/rules.hpp"

namespace zft {

inline constexpr int kEmbedMaxN = 9;    // spanning-subgraph embedding guard
inline constexpr int kObtainMaxT = 6;   // obtainability enumeration guard
inline constexpr int kCatalogMaxT = 4;  // catalog enumeration guard

// Copies of each vertex arranged in a |B| x (pt+1) array. Vertex v occupies
// one column per round it is active (blue and not yet spent; an unspent chain
// end stays active through round pt). Array cell (row, col) is vertex
// col*rows + row, the same numbering complete_path_product uses, so the array
// graph is literally a spanning subgraph of K_rows x P_cols on shared ids.
struct Extension {
  Graph graph;
  int rows = 0;  // |B|
  int cols = 0;  // pt + 1
  std::vector<std::pair<int, int>> array_position;  // array vertex -> (row, col)
  std::vector<int> origin;                          // array vertex -> vertex of G
  std::vector<int> tau;                             // vertex of G -> copy count
};

// F must be a pt-optimal force set for (g, blue) under plain Z whose forces
// all execute; its chains then cover V(g) as disjoint induced paths.
Extension build_extension(const Graph& g, VertexSet blue, const ForceSet& f);

struct ChainContraction {
  Graph graph;         // g/e
  VertexSet blue = 0;  // B/e
  ForceSet forces;     // F/e
  VertexMap map;
};

// e must carry a force of f. Drops that force and relabels the rest through
// the contraction map; checks that the result still forces and that its
// replay is no slower than f's.
ChainContraction contract_chain_edge(const Graph& g, VertexSet blue, const ForceSet& f, Edge e);

enum class WitnessOrder { ContractThenDelete, DeleteThenContract };

// Recipe turning K_a x P_{b+1} into the query graph. Both edge lists use
// product vertex ids; deletions are applied to the images of their endpoints
// when contraction happens first.
struct Witness {
  int a = 0;
  int b = 0;
  std::vector<Edge> contracted;
  std::vector<Edge> deleted;
  WitnessOrder order = WitnessOrder::ContractThenDelete;
};

Graph replay_witness(const Witness& w);

// Is g isomorphic to a spanning subgraph of h? `required` edges of h must be
// present in the image. sigma_out (optional) receives the embedding g -> h.
bool spanning_subgraph_embedding(const Graph& g, const Graph& h,
                                 const std::vector<Edge>& required = {},
                                 std::vector<int>* sigma_out = nullptr);

// Membership tests behind the two finiteness characterizations:
// floor: contract path edges of K_a x P_{b+1}, then delete any edges.
// standard: delete complete edges of K_a x P_{b+1}, then contract path edges.
// Splits a + b = t range over a >= 1, b >= 0; |contracted| = a(b+1) - n.
std::optional<Witness> obtainable_floor(const Graph& g, int t);
std::optional<Witness> obtainable_standard(const Graph& g, int t);

struct Catalog {
  int t = 0;
  std::vector<std::string> all;    // canonical graph6 of every G with th <= t
  std::vector<std::string> exact;  // the subset with th == t
};

Catalog catalog(RuleId rule, int t);  // rule is Z or FloorZ

struct ContractionClass {
  Graph graph;          // contraction of the base, representative of its iso class
  Edge contracted;      // base edge producing it
  EdgeLabel label;      // class of that edge in the product
  int th = 0;           // floor throttling number
  std::vector<int> degrees;  // descending
  std::string canonical;
};

struct NonMonotoneSearch {
  Graph base;  // K_3 x P_3
  int base_th = 0;
  std::vector<ContractionClass> classes;  // single-edge contractions up to iso
  int witness_index = -1;  // class with th > base_th, fewest edges
};

// Exhibits a minor of K_3 x P_3 whose floor throttling number exceeds the
// base's; edge deletions cannot help (they never raise the value), so
// single-edge contractions exhaust the candidates.
NonMonotoneSearch find_non_monotone_minor();

}  // namespace zft
