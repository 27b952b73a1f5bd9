#include "zft/charlib.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "zft/enumerate.hpp"
#include "zft/throttling.hpp"

namespace zft {

namespace {

// Replay f from blue under plain Z; demand completion with every force used.
Schedule replay_all(const Graph& g, VertexSet blue, const ForceSet& f, const char* who) {
  Schedule s = propagate_force_set(RuleId::Z, g, blue, f);
  if (!s.pt)
    throw std::invalid_argument(std::string(who) + ": force set does not finish from B");
  if (s.forces.size() != f.forces.size())
    throw std::invalid_argument(std::string(who) + ": some forces never execute");
  return s;
}

}  // namespace

Extension build_extension(const Graph& g, VertexSet blue, const ForceSet& f) {
  Schedule sched = replay_all(g, blue, f, "build_extension");
  auto best = pt_of_set(RuleId::Z, g, blue);
  if (*sched.pt != *best.pt)
    throw std::invalid_argument("build_extension: force set is not pt-optimal for B");

  int n = g.order();
  int pt = *sched.pt;
  std::vector<int> t_blue(n, 0), t_force(n, -1), next(n, -1);
  for (const TimedForce& tf : sched.forces) {
    t_blue[tf.force.target] = tf.step;
    t_force[tf.force.source] = tf.step;
    next[tf.force.source] = tf.force.target;
  }

  Extension ext;
  ext.rows = popcount(blue);
  ext.cols = pt + 1;
  ext.graph = Graph(ext.rows * ext.cols);
  ext.array_position.assign(ext.rows * ext.cols, {-1, -1});
  ext.origin.assign(ext.rows * ext.cols, -1);
  ext.tau.assign(n, 0);
  for (int v = 0; v < n; ++v)
    ext.tau[v] = t_force[v] >= 0 ? t_force[v] - t_blue[v] : pt - t_blue[v] + 1;

  auto cell = [&](int row, int col) { return col * ext.rows + row; };

  std::vector<int> row_of(n, -1);
  int row = 0;
  for_each_vertex(blue, [&](int root) {
    int col = 0;
    for (int v = root; v != -1; v = next[v]) {
      row_of[v] = row;
      if (col != t_blue[v]) throw std::logic_error("build_extension: chain column drift");
      for (int k = 0; k < ext.tau[v]; ++k) {
        int id = cell(row, col + k);
        ext.array_position[id] = {row, col + k};
        ext.origin[id] = v;
      }
      col += ext.tau[v];
    }
    if (col != ext.cols) throw std::logic_error("build_extension: short chain row");
    ++row;
  });

  for (int r = 0; r < ext.rows; ++r)
    for (int c = 0; c + 1 < ext.cols; ++c)
      ext.graph.add_edge(cell(r, c), cell(r, c + 1), EdgeLabel::Path);

  // Each non-chain edge of g lands in the first column where both ends have a
  // copy; the later end becomes blue while the earlier is still active, so
  // that column exists and the edge is vertical.
  for (auto [u, v] : g.edges()) {
    if (next[u] == v || next[v] == u) continue;
    if (row_of[u] == row_of[v])
      throw std::logic_error("build_extension: chord inside a forcing chain");
    int c = std::max(t_blue[u], t_blue[v]);
    ext.graph.add_edge(cell(row_of[u], c), cell(row_of[v], c), EdgeLabel::Complete);
  }
  return ext;
}

ChainContraction contract_chain_edge(const Graph& g, VertexSet blue, const ForceSet& f,
                                     Edge e) {
  Schedule before = replay_all(g, blue, f, "contract_chain_edge");
  Edge key = make_edge(e.first, e.second);
  int carried = -1;
  for (std::size_t i = 0; i < f.forces.size(); ++i) {
    const Force& fo = f.forces[i];
    if (fo.kind == ForceKind::Standard && make_edge(fo.source, fo.target) == key)
      carried = static_cast<int>(i);
  }
  if (carried < 0)
    throw std::invalid_argument("contract_chain_edge: edge carries no force of F");

  auto [h, m] = contract_edge(g, key);
  ChainContraction out;
  out.graph = std::move(h);
  out.map = std::move(m);
  for_each_vertex(blue, [&](int x) { out.blue |= bit(out.map(x)); });
  for (std::size_t i = 0; i < f.forces.size(); ++i) {
    if (static_cast<int>(i) == carried) continue;
    const Force& fo = f.forces[i];
    out.forces.forces.push_back({out.map(fo.source), out.map(fo.target), fo.kind});
  }

  Schedule after = propagate_force_set(RuleId::Z, out.graph, out.blue, out.forces);
  if (!after.pt || *after.pt > *before.pt)
    throw std::logic_error("contract_chain_edge: contracted replay violates the bound");
  return out;
}

bool spanning_subgraph_embedding(const Graph& g, const Graph& h,
                                 const std::vector<Edge>& required,
                                 std::vector<int>* sigma_out) {
  int n = g.order();
  if (h.order() != n) return false;
  if (n > kEmbedMaxN)
    throw GuardError("embedding search: order " + std::to_string(n) + " exceeds guard " +
                     std::to_string(kEmbedMaxN));
  if (g.size() > h.size()) return false;
  {
    auto dg = g.degree_sequence();
    auto dh = h.degree_sequence();
    for (int i = 0; i < n; ++i)
      if (dg[i] > dh[i]) return false;
  }

  // place high-degree, well-connected g vertices first
  std::vector<int> order;
  {
    VertexSet placed = 0;
    for (int step = 0; step < n; ++step) {
      int pick = -1, pick_adj = -1, pick_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (placed & bit(v)) continue;
        int adj = popcount(g.neighbors(v) & placed);
        if (adj > pick_adj || (adj == pick_adj && g.degree(v) > pick_deg)) {
          pick = v;
          pick_adj = adj;
          pick_deg = g.degree(v);
        }
      }
      order.push_back(pick);
      placed |= bit(pick);
    }
  }

  std::vector<int> sigma(n, -1), inv(n, -1);
  VertexSet used = 0;
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) {
      for (auto [x, y] : required)
        if (!g.has_edge(inv[x], inv[y])) return false;
      return true;
    }
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used & bit(w)) continue;
      if (h.degree(w) < g.degree(v)) continue;
      bool ok = true;
      for_each_vertex(g.neighbors(v), [&](int u) {
        if (sigma[u] >= 0 && !h.has_edge(sigma[u], w)) ok = false;
      });
      if (!ok) continue;
      sigma[v] = w;
      inv[w] = v;
      used |= bit(w);
      if (self(self, k + 1)) return true;
      sigma[v] = -1;
      inv[w] = -1;
      used &= ~bit(w);
    }
    return false;
  };
  if (!rec(rec, 0)) return false;
  if (sigma_out) *sigma_out = sigma;
  return true;
}

namespace {

// Cutting each row path of K_a x P_cols into consecutive intervals is exactly
// a choice of path-edge contractions; `blocks` intervals total survive.
// fn(lens) returns false to stop the enumeration.
template <typename F>
bool for_each_row_partition(int a, int cols, int blocks, F&& fn) {
  std::vector<std::vector<int>> lens(a);
  auto rec = [&](auto&& self, int r, int col_left, int blocks_left) -> bool {
    if (r == a) return blocks_left == 0 ? fn(lens) : true;
    if (col_left == 0) return self(self, r + 1, cols, blocks_left);
    int min_more = 1 + (a - r - 1);
    int max_more = col_left + (a - r - 1) * cols;
    if (blocks_left < min_more || blocks_left > max_more) return true;
    for (int len = 1; len <= col_left; ++len) {
      lens[r].push_back(len);
      bool go = self(self, r, col_left - len, blocks_left - 1);
      lens[r].pop_back();
      if (!go) return false;
    }
    return true;
  };
  return rec(rec, 0, cols, blocks);
}

struct Quotient {
  Graph graph;          // one vertex per interval; Path between row neighbors,
  std::vector<int> row;  // Complete between overlapping intervals of two rows
  std::vector<int> lo, hi;
};

Quotient build_quotient(int a, const std::vector<std::vector<int>>& lens) {
  Quotient q;
  int nblocks = 0;
  for (const auto& l : lens) nblocks += static_cast<int>(l.size());
  q.graph = Graph(nblocks);
  int id = 0;
  for (int r = 0; r < a; ++r) {
    int c = 0, prev = -1;
    for (int len : lens[r]) {
      q.row.push_back(r);
      q.lo.push_back(c);
      q.hi.push_back(c + len - 1);
      if (prev >= 0) q.graph.add_edge(prev, id, EdgeLabel::Path);
      prev = id;
      c += len;
      ++id;
    }
  }
  for (int i = 0; i < nblocks; ++i)
    for (int j = i + 1; j < nblocks; ++j) {
      if (q.row[i] == q.row[j]) continue;
      if (std::max(q.lo[i], q.lo[j]) <= std::min(q.hi[i], q.hi[j]))
        q.graph.add_edge(i, j, EdgeLabel::Complete);
    }
  return q;
}

int product_id(int a, int row, int col) { return col * a + row; }

std::vector<Edge> contracted_edges(int a, const std::vector<std::vector<int>>& lens) {
  std::vector<Edge> out;
  for (int r = 0; r < a; ++r) {
    int c = 0;
    for (int len : lens[r]) {
      for (int k = 0; k + 1 < len; ++k)
        out.push_back({product_id(a, r, c + k), product_id(a, r, c + k + 1)});
      c += len;
    }
  }
  return out;
}

// Edges of the quotient not hit by the embedding image, as product-id pairs.
// Floor witnesses delete one representative per missed edge; standard
// witnesses delete the whole column class behind a missed vertical edge.
std::vector<Edge> missed_edges(const Graph& g, const Quotient& q, int a,
                               const std::vector<int>& sigma, bool whole_class) {
  std::set<Edge> image;
  for (auto [u, v] : g.edges()) image.insert(make_edge(sigma[u], sigma[v]));
  std::vector<Edge> out;
  for (auto [i, j] : q.graph.edges()) {
    if (image.count(make_edge(i, j))) continue;
    if (q.row[i] == q.row[j]) {
      int left = q.hi[i] < q.hi[j] ? i : j;
      int right = left == i ? j : i;
      out.push_back({product_id(a, q.row[i], q.hi[left]), product_id(a, q.row[i], q.lo[right])});
      continue;
    }
    int from = std::max(q.lo[i], q.lo[j]);
    int to = whole_class ? std::min(q.hi[i], q.hi[j]) : from;
    for (int c = from; c <= to; ++c)
      out.push_back({product_id(a, q.row[i], c), product_id(a, q.row[j], c)});
  }
  return out;
}

void check_obtainable_args(const Graph& g, int t) {
  if (g.order() == 0) throw std::invalid_argument("obtainability test: empty graph");
  if (t < 1) throw std::invalid_argument("obtainability test: t must be positive");
  if (t > kObtainMaxT)
    throw GuardError("obtainability test: t " + std::to_string(t) + " exceeds guard " +
                     std::to_string(kObtainMaxT));
}

}  // namespace

std::optional<Witness> obtainable_floor(const Graph& g, int t) {
  check_obtainable_args(g, t);
  int n = g.order();
  if (n > order_upper_bound(t)) return std::nullopt;
  if (n > kEmbedMaxN)
    throw GuardError("obtainability test: order " + std::to_string(n) + " exceeds guard " +
                     std::to_string(kEmbedMaxN));
  for (int a = 1; a <= t; ++a) {
    int b = t - a, cols = b + 1;
    if (a * cols < n) continue;
    std::optional<Witness> found;
    for_each_row_partition(a, cols, n, [&](const std::vector<std::vector<int>>& lens) {
      Quotient q = build_quotient(a, lens);
      std::vector<int> sigma;
      if (!spanning_subgraph_embedding(g, q.graph, {}, &sigma)) return true;
      Witness w;
      w.a = a;
      w.b = b;
      w.order = WitnessOrder::ContractThenDelete;
      w.contracted = contracted_edges(a, lens);
      w.deleted = missed_edges(g, q, a, sigma, false);
      found = std::move(w);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Witness> obtainable_standard(const Graph& g, int t) {
  check_obtainable_args(g, t);
  int n = g.order();
  if (n > order_upper_bound(t)) return std::nullopt;
  if (n > kEmbedMaxN)
    throw GuardError("obtainability test: order " + std::to_string(n) + " exceeds guard " +
                     std::to_string(kEmbedMaxN));
  for (int a = 1; a <= t; ++a) {
    int b = t - a, cols = b + 1;
    if (a * cols < n) continue;
    std::optional<Witness> found;
    for_each_row_partition(a, cols, n, [&](const std::vector<std::vector<int>>& lens) {
      Quotient q = build_quotient(a, lens);
      std::vector<int> sigma;
      // row edges survive: only complete edges of the product may be deleted
      if (!spanning_subgraph_embedding(g, q.graph, q.graph.edges_with_label(EdgeLabel::Path),
                                       &sigma))
        return true;
      Witness w;
      w.a = a;
      w.b = b;
      w.order = WitnessOrder::DeleteThenContract;
      w.contracted = contracted_edges(a, lens);
      w.deleted = missed_edges(g, q, a, sigma, true);
      found = std::move(w);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

Graph replay_witness(const Witness& w) {
  if (w.a < 1 || w.b < 0) throw std::invalid_argument("replay_witness: bad array shape");
  Graph p = complete_path_product(w.a, w.b + 1);
  VertexMap m = VertexMap::identity(p.order());

  auto contract_all = [&]() {
    for (Edge e : w.contracted) {
      int x = m(e.first), y = m(e.second);
      if (x < 0 || y < 0 || x == y)
        throw std::invalid_argument("replay_witness: degenerate contraction");
      auto [h, step] = contract_edge(p, make_edge(x, y));
      p = std::move(h);
      m = VertexMap::compose(m, step);
    }
  };
  auto delete_all = [&]() {
    for (Edge e : w.deleted) {
      int x = m(e.first), y = m(e.second);
      if (x < 0 || y < 0 || x == y || !p.has_edge(x, y))
        throw std::invalid_argument("replay_witness: deleting a missing edge");
      p.remove_edge(x, y);
    }
  };

  if (w.order == WitnessOrder::ContractThenDelete) {
    contract_all();
    delete_all();
  } else {
    delete_all();
    contract_all();
  }
  return p;
}

namespace {

std::set<std::string> catalog_set(RuleId rule, int t) {
  std::set<std::string> out;
  for (int a = 1; a <= t; ++a) {
    int b = t - a, cols = b + 1;
    for (int blocks = a; blocks <= a * cols; ++blocks) {
      for_each_row_partition(a, cols, blocks, [&](const std::vector<std::vector<int>>& lens) {
        Quotient q = build_quotient(a, lens);
        std::vector<Edge> removable = rule == RuleId::FloorZ
                                          ? q.graph.edges()
                                          : q.graph.edges_with_label(EdgeLabel::Complete);
        std::uint32_t count = std::uint32_t{1} << removable.size();
        for (std::uint32_t mask = 0; mask < count; ++mask) {
          Graph h = q.graph;
          for (std::size_t i = 0; i < removable.size(); ++i)
            if (mask >> i & 1) h.remove_edge(removable[i].first, removable[i].second);
          out.insert(canonical_form(h));
        }
        return true;
      });
    }
  }
  return out;
}

}  // namespace

Catalog catalog(RuleId rule, int t) {
  if (rule != RuleId::Z && rule != RuleId::FloorZ)
    throw std::invalid_argument("catalog: only the standard rule and its floor are cataloged");
  if (t < 1) throw std::invalid_argument("catalog: t must be positive");
  if (t > kCatalogMaxT)
    throw GuardError("catalog: t " + std::to_string(t) + " exceeds guard " +
                     std::to_string(kCatalogMaxT));
  std::set<std::string> cur = catalog_set(rule, t);
  std::set<std::string> prev;
  if (t > 1) prev = catalog_set(rule, t - 1);
  Catalog c;
  c.t = t;
  c.all.assign(cur.begin(), cur.end());
  for (const std::string& s : cur)
    if (!prev.count(s)) c.exact.push_back(s);
  return c;
}

NonMonotoneSearch find_non_monotone_minor() {
  NonMonotoneSearch res;
  res.base = complete_path_product(3, 3);
  res.base_th = throttling_number(RuleId::FloorZ, res.base).value;

  std::map<std::string, ContractionClass> classes;
  for (Edge e : res.base.edges()) {
    auto [h, m] = contract_edge(res.base, e);
    (void)m;
    std::string key = canonical_form(h);
    if (classes.count(key)) continue;
    ContractionClass c;
    c.graph = std::move(h);
    c.contracted = e;
    c.label = res.base.label(e.first, e.second).value();
    c.th = throttling_number(RuleId::FloorZ, c.graph).value;
    c.degrees = c.graph.degree_sequence();
    c.canonical = key;
    classes.emplace(key, std::move(c));
  }
  for (auto& [key, c] : classes) res.classes.push_back(std::move(c));

  // Deleting edges never raises the value (subgraph monotone), so a witness
  // exists iff one already appears among the bare contractions; report the
  // sparsest.
  int best = -1;
  for (std::size_t i = 0; i < res.classes.size(); ++i) {
    const ContractionClass& c = res.classes[i];
    if (c.th <= res.base_th) continue;
    if (best < 0 || c.graph.size() < res.classes[best].graph.size())
      best = static_cast<int>(i);
  }
  if (best < 0)
    throw std::logic_error("find_non_monotone_minor: no contraction exceeds the base value");
  res.witness_index = best;
  return res;
}

}  // namespace zft
