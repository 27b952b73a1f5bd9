#pragma once

// Simple graphs on at most 32 vertices, stored as per-vertex neighbor bitmasks.
// Edges built from a complete-by-path Cartesian product carry a class label
// (path edge vs complete edge) that survives deletions and contractions.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zft {

using VertexSet = std::uint32_t;
using Edge = std::pair<int, int>;  // normalized: first < second

inline constexpr int kMaxVertices = 32;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet full_set(int n) {
  return n == 0 ? 0 : (n == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1);
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

// Iterate set bits low to high.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

inline std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet vector_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

enum class EdgeLabel { Path, Complete };

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Thrown when an input exceeds a documented search guard. Callers that want
// bigger instances must pass an explicit override; nothing is truncated.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
    adj_.fill(0);
  }

  int order() const { return n_; }
  int size() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += popcount(adj_[v]);
    return m / 2;
  }
  VertexSet vertex_mask() const { return full_set(n_); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & bit(v)) != 0;
  }
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return popcount(neighbors(v)); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self loops not supported");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  void add_edge(int u, int v, EdgeLabel label) {
    add_edge(u, v);
    labels_[make_edge(u, v)] = label;
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    labels_.erase(make_edge(u, v));
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for_each_vertex(adj_[u] & ~full_set(u + 1), [&](int v) { out.push_back({u, v}); });
    return out;
  }

  bool labeled() const { return !labels_.empty(); }
  std::optional<EdgeLabel> label(int u, int v) const {
    auto it = labels_.find(make_edge(u, v));
    if (it == labels_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<Edge, EdgeLabel>& labels() const { return labels_; }
  void clear_labels() { labels_.clear(); }
  std::vector<Edge> edges_with_label(EdgeLabel want) const {
    std::vector<Edge> out;
    for (const auto& [e, l] : labels_)
      if (l == want) out.push_back(e);
    return out;
  }

  std::vector<int> degree_sequence() const;  // descending

  // Upper-triangle adjacency bits in column-major (graph6) order:
  // pair (i,j), i<j, has index j*(j-1)/2 + i. Requires n <= 10 so the key
  // fits in 45 bits.
  std::uint64_t edge_bits() const;
  static Graph from_edge_bits(int n, std::uint64_t bits);

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::map<Edge, EdgeLabel> labels_;
};

// Old-to-new vertex renumbering produced by deletions and contractions.
// Deleted vertices map to -1; everything else maps onto 0..new_order-1.
struct VertexMap {
  std::vector<int> to_new;
  int new_order = 0;

  int operator()(int old) const { return to_new.at(old); }
  static VertexMap identity(int n) {
    VertexMap m;
    m.new_order = n;
    m.to_new.resize(n);
    for (int i = 0; i < n; ++i) m.to_new[i] = i;
    return m;
  }
  // first, then second.
  static VertexMap compose(const VertexMap& first, const VertexMap& second) {
    VertexMap m;
    m.new_order = second.new_order;
    m.to_new.resize(first.to_new.size());
    for (std::size_t i = 0; i < first.to_new.size(); ++i) {
      int mid = first.to_new[i];
      m.to_new[i] = mid < 0 ? -1 : second.to_new.at(mid);
    }
    return m;
  }
};

// Generators. Vertices are numbered along the traversal; star and wheel put
// the hub at 0; wheel takes the total order (hub plus rim).
Graph path_graph(int n);
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);
Graph star_graph(int n);
Graph wheel_graph(int n);     // n >= 4
Graph empty_graph(int n);
Graph generate(const std::string& kind, int n);

// K_a box P_cols with vertex (i,j) -> j*a + i; row edges labeled Path,
// column-clique edges labeled Complete.
Graph complete_path_product(int a, int cols);

Graph delete_edge(const Graph& g, Edge e);
std::pair<Graph, VertexMap> delete_vertex(const Graph& g, int v);
Graph disjoint_union(const Graph& g, const Graph& h);

// Contract edge e=uv into min(u,v); the merged vertex keeps all other
// neighbors of both ends. A surviving edge keeps the Path label only if every
// pre-image under the merge was a path edge.
std::pair<Graph, VertexMap> contract_edge(const Graph& g, Edge e);

std::vector<Edge> non_edges(const Graph& g);

inline constexpr int kMaxSupergraphNonEdges = 24;

// All graphs obtained by adding a subset of the non-edges (labels dropped).
// Refuses outright when 2^(#non-edges) would exceed 2^24.
template <typename F>
void for_each_spanning_supergraph(const Graph& g, F&& f,
                                  int max_non_edges = kMaxSupergraphNonEdges) {
  auto missing = non_edges(g);
  if (static_cast<int>(missing.size()) > max_non_edges)
    throw GuardError("spanning supergraph enumeration: too many non-edges (" +
                     std::to_string(missing.size()) + " > " + std::to_string(max_non_edges) + ")");
  Graph base = g;
  base.clear_labels();
  std::uint32_t count = std::uint32_t{1} << missing.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Graph h = base;
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (mask >> i & 1) h.add_edge(missing[i].first, missing[i].second);
    f(h);
  }
}

std::uint64_t spanning_supergraph_count(const Graph& g);

// Components of the subgraph induced on `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertex_mask());
}
bool is_connected(const Graph& g);

int independence_number(const Graph& g);

inline constexpr int kMaxCanonicalVertices = 10;

// Canonical form: the graph6 string of the lexicographically least upper
// triangle over all vertex relabelings. Exhaustive with pruning; n <= 10.
std::string canonical_form(const Graph& g, int max_n = kMaxCanonicalVertices);
bool is_isomorphic(const Graph& g, const Graph& h, int max_n = kMaxCanonicalVertices);

// graph6, n <= 32 subset of the standard format.
std::string write_graph6(const Graph& g);
Graph parse_graph6(const std::string& s);

}  // namespace zft
