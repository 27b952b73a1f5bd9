#include "zft/graph.hpp"

#include <algorithm>
#include <numeric>

namespace zft {

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::uint64_t Graph::edge_bits() const {
  if (n_ > kMaxCanonicalVertices) throw GuardError("edge_bits: order exceeds 10");
  std::uint64_t bits = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (adj_[i] & bit(j)) bits |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
  return bits;
}

Graph Graph::from_edge_bits(int n, std::uint64_t bits) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits >> (j * (j - 1) / 2 + i) & 1) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
  Graph g = star_graph(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v == n - 1 ? 1 : v + 1);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph generate(const std::string& kind, int n) {
  if (n < 1) throw std::invalid_argument("generate needs n >= 1");
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "complete") return complete_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "wheel") return wheel_graph(n);
  if (kind == "empty") return empty_graph(n);
  throw std::invalid_argument("unknown graph kind: " + kind);
}

Graph complete_path_product(int a, int cols) {
  if (a < 1 || cols < 1) throw std::invalid_argument("product needs a >= 1, cols >= 1");
  if (a * cols > kMaxVertices) throw std::invalid_argument("product exceeds 32 vertices");
  Graph g(a * cols);
  auto id = [a](int i, int j) { return j * a + i; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j + 1 < cols; ++j) g.add_edge(id(i, j), id(i, j + 1), EdgeLabel::Path);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < a; ++i)
      for (int i2 = i + 1; i2 < a; ++i2) g.add_edge(id(i, j), id(i2, j), EdgeLabel::Complete);
  return g;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("delete_edge: no such edge");
  Graph out = g;
  out.remove_edge(e.first, e.second);
  return out;
}

std::pair<Graph, VertexMap> delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertex: no such vertex");
  VertexMap m;
  m.new_order = g.order() - 1;
  m.to_new.resize(g.order());
  for (int w = 0; w < g.order(); ++w) m.to_new[w] = w < v ? w : (w == v ? -1 : w - 1);
  Graph out(g.order() - 1);
  for (auto [x, y] : g.edges()) {
    if (x == v || y == v) continue;
    auto l = g.label(x, y);
    if (l)
      out.add_edge(m(x), m(y), *l);
    else
      out.add_edge(m(x), m(y));
  }
  return {out, m};
}

namespace {

bool fully_labeled(const Graph& g) {
  return static_cast<int>(g.labels().size()) == g.size();
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxVertices)
    throw std::invalid_argument("disjoint_union exceeds 32 vertices");
  Graph out(g.order() + h.order());
  // labels must partition the result's edges, so keep them only when every
  // edge of both parts carries one
  bool keep_labels = fully_labeled(g) && fully_labeled(h);
  for (auto [x, y] : g.edges()) {
    auto l = g.label(x, y);
    if (l && keep_labels)
      out.add_edge(x, y, *l);
    else
      out.add_edge(x, y);
  }
  int off = g.order();
  for (auto [x, y] : h.edges()) {
    auto l = h.label(x, y);
    if (l && keep_labels)
      out.add_edge(x + off, y + off, *l);
    else
      out.add_edge(x + off, y + off);
  }
  if (!keep_labels) out.clear_labels();
  return out;
}

std::pair<Graph, VertexMap> contract_edge(const Graph& g, Edge e) {
  int u = std::min(e.first, e.second), v = std::max(e.first, e.second);
  if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: no such edge");
  VertexMap m;
  m.new_order = g.order() - 1;
  m.to_new.resize(g.order());
  for (int w = 0; w < g.order(); ++w) m.to_new[w] = w < v ? w : (w == v ? u : w - 1);

  Graph out(g.order() - 1);
  bool track = g.labeled();
  // Path label survives only if every pre-image of a merged edge is a path edge.
  std::map<Edge, bool> all_path;
  for (auto [x, y] : g.edges()) {
    if (make_edge(x, y) == make_edge(u, v)) continue;
    int nx = m(x), ny = m(y);
    if (nx == ny) continue;
    if (!out.has_edge(nx, ny)) out.add_edge(nx, ny);
    if (track) {
      bool is_path = g.label(x, y) == EdgeLabel::Path;
      auto key = make_edge(nx, ny);
      auto it = all_path.find(key);
      all_path[key] = (it == all_path.end()) ? is_path : (it->second && is_path);
    }
  }
  if (track) {
    Graph relabeled = out;
    for (auto& [key, p] : all_path)
      relabeled.add_edge(key.first, key.second, p ? EdgeLabel::Path : EdgeLabel::Complete);
    out = relabeled;
  }
  return {out, m};
}

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.push_back({u, v});
  return out;
}

std::uint64_t spanning_supergraph_count(const Graph& g) {
  return std::uint64_t{1} << non_edges(g).size();
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> comps;
  VertexSet left = within & g.vertex_mask();
  while (left) {
    VertexSet comp = bit(first_vertex(left));
    for (;;) {
      VertexSet grow = comp;
      for_each_vertex(comp, [&](int v) { grow |= g.neighbors(v) & within; });
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

namespace {

int mis_search(const Graph& g, VertexSet cand) {
  if (!cand) return 0;
  // branch on a max-degree candidate: either take it or exclude it
  int pick = -1, best_deg = -1;
  for_each_vertex(cand, [&](int v) {
    int d = popcount(g.neighbors(v) & cand);
    if (d > best_deg) {
      best_deg = d;
      pick = v;
    }
  });
  if (best_deg == 0) return popcount(cand);  // remaining candidates are pairwise non-adjacent
  int with = 1 + mis_search(g, cand & ~(g.neighbors(pick) | bit(pick)));
  int without = mis_search(g, cand & ~bit(pick));
  return std::max(with, without);
}

}  // namespace

int independence_number(const Graph& g) { return mis_search(g, g.vertex_mask()); }

namespace {

// Branch and bound over vertex orderings minimizing the packed upper-triangle
// key; chunk k contributes the adjacency bits of the k-th placed vertex to the
// previously placed ones.
struct Canonicalizer {
  const Graph& g;
  int n;
  int total_bits;
  std::uint64_t best = ~std::uint64_t{0};
  std::array<int, kMaxCanonicalVertices> placed{};

  explicit Canonicalizer(const Graph& graph) : g(graph), n(graph.order()) {
    total_bits = n * (n - 1) / 2;
  }

  std::uint64_t chunk_of(int v, int k) const {
    std::uint64_t c = 0;
    for (int j = 0; j < k; ++j)
      if (g.neighbors(v) & bit(placed[j])) c |= std::uint64_t{1} << (k - 1 - j);
    return c;
  }

  void rec(int k, std::uint64_t partial, int bits_used, VertexSet used) {
    if (k == n) {
      best = std::min(best, partial);
      return;
    }
    struct Cand {
      std::uint64_t chunk;
      int v;
    };
    std::vector<Cand> cands;
    for (int v = 0; v < n; ++v)
      if (!(used & bit(v))) cands.push_back({chunk_of(v, k), v});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.chunk != b.chunk ? a.chunk < b.chunk : a.v < b.v;
    });
    for (const auto& c : cands) {
      std::uint64_t next = (partial << k) | c.chunk;
      int used_bits = bits_used + k;
      int rem = total_bits - used_bits;
      if (best != ~std::uint64_t{0}) {
        std::uint64_t floor = next << rem;
        if (floor > best) break;      // candidates are sorted, the rest only grow
        if (floor == best) continue;  // subtree cannot improve on the incumbent
      }
      placed[k] = c.v;
      rec(k + 1, next, used_bits, used | bit(c.v));
    }
  }

  std::uint64_t run() {
    if (n == 0) return 0;
    rec(0, 0, 0, 0);
    return best;
  }
};

// Key bit order above is (pair index descending); graph6 wants colex ascending
// with earlier pairs first. Both orders agree: pair (i,j) colex index p gets
// key bit (total-1-p), so the numeric minimum is the lexicographic minimum of
// the graph6 bit stream.
Graph graph_from_key(int n, std::uint64_t key) {
  Graph g(n);
  int total = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int p = j * (j - 1) / 2 + i;
      if (key >> (total - 1 - p) & 1) g.add_edge(i, j);
    }
  return g;
}

}  // namespace

std::string canonical_form(const Graph& g, int max_n) {
  if (g.order() > max_n)
    throw GuardError("canonical_form: order " + std::to_string(g.order()) + " exceeds guard " +
                     std::to_string(max_n));
  if (g.order() > kMaxCanonicalVertices)
    throw GuardError("canonical_form: order exceeds hard cap 10");
  Canonicalizer c(g);
  return write_graph6(graph_from_key(g.order(), c.run()));
}

bool is_isomorphic(const Graph& g, const Graph& h, int max_n) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g, max_n) == canonical_form(h, max_n);
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int total = n * (n - 1) / 2;
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  if (total % 6 != 0) {
    chunk <<= 6 - total % 6;
    out.push_back(static_cast<char>(63 + chunk));
  }
  return out;
}

Graph parse_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  if (s[0] == '~') throw std::invalid_argument("graph6: orders above 32 not supported");
  int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("graph6: malformed header byte");
  if (n > kMaxVertices) throw std::invalid_argument("graph6: orders above 32 not supported");
  int total = n * (n - 1) / 2;
  std::size_t need = 1 + (total + 5) / 6;
  if (s.size() != need) throw std::invalid_argument("graph6: wrong length for stated order");
  Graph g(n);
  int at = 0;
  for (std::size_t c = 1; c < s.size(); ++c) {
    int val = static_cast<unsigned char>(s[c]) - 63;
    if (val < 0 || val > 63) throw std::invalid_argument("graph6: byte out of range");
    for (int b = 5; b >= 0; --b, ++at) {
      int on = val >> b & 1;
      if (at >= total) {
        if (on) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (on) {
        // invert colex index: find j with j(j-1)/2 <= at < j(j+1)/2
        int j = 1;
        while ((j + 1) * j / 2 <= at) ++j;
        int i = at - j * (j - 1) / 2;
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

}  // namespace zft
