#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "zft/enumerate.hpp"
#include "zft/graph.hpp"

using namespace zft;

TEST_CASE("vertex set helpers") {
  CHECK(bit(0) == 1u);
  CHECK(bit(5) == 32u);
  CHECK(full_set(0) == 0u);
  CHECK(full_set(3) == 0b111u);
  CHECK(full_set(32) == ~VertexSet{0});
  CHECK(popcount(0b1011u) == 3);
  CHECK(first_vertex(0b1000u) == 3);
  CHECK(set_to_vector(0b10101u) == std::vector<int>{0, 2, 4});
  CHECK(vector_to_set({1, 3}) == 0b1010u);
}

TEST_CASE("generator orders and sizes") {
  CHECK(path_graph(1).size() == 0);
  CHECK(path_graph(6).size() == 5);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(complete_graph(5).size() == 10);
  CHECK(star_graph(6).size() == 5);
  CHECK(star_graph(6).degree(0) == 5);
  CHECK(wheel_graph(7).size() == 12);  // hub degree 6, rim C_6
  CHECK(wheel_graph(7).degree(0) == 6);
  CHECK(empty_graph(4).size() == 0);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(wheel_graph(3), std::invalid_argument);
  CHECK(path_graph(0).order() == 0);  // bare generators allow the empty graph
  CHECK_THROWS_AS(generate("path", 0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(33), std::invalid_argument);
}

TEST_CASE("generate dispatches by kind") {
  CHECK(generate("path", 4) == path_graph(4));
  CHECK(generate("cycle", 4) == cycle_graph(4));
  CHECK(generate("complete", 4) == complete_graph(4));
  CHECK(generate("star", 4) == star_graph(4));
  CHECK(generate("wheel", 4) == wheel_graph(4));
  CHECK(generate("empty", 4) == empty_graph(4));
  CHECK_THROWS_AS(generate("torus", 4), std::invalid_argument);
}

TEST_CASE("complete by path product layout and labels") {
  Graph g = complete_path_product(3, 4);  // K_3 rows, 4 columns
  CHECK(g.order() == 12);
  // row edges: 3 per column step; clique edges: C(3,2) per column
  CHECK(g.edges_with_label(EdgeLabel::Path).size() == 3u * 3u);
  CHECK(g.edges_with_label(EdgeLabel::Complete).size() == 4u * 3u);
  CHECK(g.size() == 9 + 12);
  // (i,j) -> j*3 + i: vertex 4 = (1,1) sees its row mates 1 and 7 by path edges
  CHECK(g.label(1, 4) == EdgeLabel::Path);
  CHECK(g.label(4, 7) == EdgeLabel::Path);
  CHECK(g.label(3, 4) == EdgeLabel::Complete);
  CHECK(g.label(4, 5) == EdgeLabel::Complete);
  CHECK(!g.has_edge(0, 4));  // no diagonals
  CHECK(complete_path_product(1, 5) == path_graph(5));
}

TEST_CASE("graph6 frozen strings and roundtrip") {
  CHECK(write_graph6(path_graph(1)) == "@");
  CHECK(write_graph6(complete_graph(2)) == "A_");
  CHECK(write_graph6(empty_graph(2)) == "A?");
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  CHECK(write_graph6(path_graph(3)) == "Bg");
  CHECK(parse_graph6("Bw") == complete_graph(3));
  for (const Graph& g : {path_graph(7), cycle_graph(9), complete_path_product(3, 3),
                         star_graph(6), empty_graph(1), complete_graph(12)}) {
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());
  }
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);      // truncated
  CHECK_THROWS_AS(parse_graph6("B\x01\x01"), std::invalid_argument);  // bad chars
}

TEST_CASE("edge bits roundtrip") {
  for (const Graph& g : {path_graph(5), cycle_graph(6), complete_graph(4)}) {
    CHECK(Graph::from_edge_bits(g.order(), g.edge_bits()) == g);
  }
}

TEST_CASE("delete and contract track vertex maps") {
  // deleting the middle of P_3 leaves 2K_1
  auto [h, m] = delete_vertex(path_graph(3), 1);
  CHECK(h == empty_graph(2));
  CHECK(m(0) == 0);
  CHECK(m(1) == -1);
  CHECK(m(2) == 1);

  // contracting one edge of C_4 gives the triangle
  auto [t, mc] = contract_edge(cycle_graph(4), {0, 1});
  CHECK(is_isomorphic(t, complete_graph(3)));
  CHECK(mc(0) == mc(1));

  auto [p2, mp] = contract_edge(path_graph(3), {0, 1});
  CHECK(p2 == complete_graph(2));
  CHECK(mp(2) == 1);

  CHECK_THROWS_AS(contract_edge(path_graph(3), Edge{0, 2}), std::invalid_argument);
}

TEST_CASE("contracting a path edge of the product hits the pinned degrees") {
  Graph g = complete_path_product(3, 3);
  auto [h, m] = contract_edge(g, {0, 3});  // a row edge
  CHECK(h.order() == 8);
  CHECK(h.degree_sequence() == std::vector<int>{5, 4, 4, 3, 3, 3, 3, 3});
  (void)m;
}

TEST_CASE("contraction keeps a path label only when every preimage is a path edge") {
  Graph g = complete_path_product(2, 3);  // ladder K_2 x P_3
  auto [h, m] = contract_edge(g, {0, 2});  // contract a row edge
  // merged vertex m(0) still reaches column 2 by a pure row edge
  CHECK(h.label(m(0), m(4)) == EdgeLabel::Path);
  CHECK(h.label(m(0), m(3)) == EdgeLabel::Complete);

  // mixed preimages demote to Complete
  Graph t(3);
  t.add_edge(0, 1, EdgeLabel::Path);
  t.add_edge(0, 2, EdgeLabel::Path);
  t.add_edge(1, 2, EdgeLabel::Complete);
  auto [k2, mt] = contract_edge(t, {0, 1});
  CHECK(k2.label(mt(0), mt(2)) == EdgeLabel::Complete);
}

TEST_CASE("maps survive deletion and contraction on every small graph") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      for (int v = 0; v < n; ++v) {
        auto [h, m] = delete_vertex(g, v);
        CHECK(h.order() == n - 1);
        CHECK(m(v) == -1);
        for (auto [a, b] : g.edges())
          if (a != v && b != v) CHECK(h.has_edge(m(a), m(b)));
        CHECK(h.size() == g.size() - g.degree(v));
      }
      for (Edge e : g.edges()) {
        auto [h, m] = contract_edge(g, e);
        CHECK(h.order() == n - 1);
        CHECK(m(e.first) == m(e.second));
        for (auto [a, b] : g.edges())
          if (Edge{a, b} != e) CHECK(h.has_edge(m(a), m(b)));
      }
    }
  }
}

TEST_CASE("disjoint union shifts the second block") {
  Graph g = disjoint_union(complete_graph(2), path_graph(3));
  CHECK(g.order() == 5);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 3));
  CHECK(g.has_edge(3, 4));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937 rng(20240817);
  for (const Graph& g : {path_graph(6), cycle_graph(7), star_graph(6),
                         complete_path_product(3, 3), disjoint_union(cycle_graph(4), path_graph(3))}) {
    std::string canon = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h(g.order());
      for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
      CHECK(canonical_form(h) == canon);
      CHECK(is_isomorphic(g, h));
    }
  }
  CHECK(!is_isomorphic(path_graph(4), star_graph(4)));
  CHECK_THROWS_AS(canonical_form(path_graph(11)), GuardError);
  // the 10-vertex cap holds even under an explicit override
  CHECK_THROWS_AS(canonical_form(path_graph(11), 11), GuardError);
}

TEST_CASE("iso class representatives are pairwise distinct") {
  const int counts[] = {1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    const auto& reps = graphs_up_to_iso(n);
    CHECK((int)reps.size() == counts[n - 1]);
    std::set<std::string> canon;
    for (const Graph& g : reps) canon.insert(canonical_form(g));
    CHECK(canon.size() == reps.size());
  }
  const int conn[] = {1, 1, 2, 6, 21};
  for (int n = 1; n <= 5; ++n)
    CHECK((int)connected_graphs_up_to_iso(n).size() == conn[n - 1]);
}

TEST_CASE("components and connectivity") {
  Graph g = disjoint_union(path_graph(3), complete_graph(2));
  auto comps = connected_components(g);
  CHECK(comps.size() == 2);
  CHECK((comps[0] | comps[1]) == g.vertex_mask());
  CHECK(!is_connected(g));
  CHECK(is_connected(cycle_graph(5)));
  CHECK(is_connected(path_graph(1)));
  // induced restriction: drop the middle of the path
  auto sub = connected_components(g, g.vertex_mask() & ~bit(1));
  CHECK(sub.size() == 3);
}

TEST_CASE("independence number matches brute force on all small graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      int best = 0;
      for (VertexSet s = 0; s <= full_set(n); ++s) {
        bool ok = true;
        for (auto [a, b] : g.edges())
          if ((s & bit(a)) && (s & bit(b))) ok = false;
        if (ok) best = std::max(best, popcount(s));
        if (s == full_set(n)) break;
      }
      CHECK(independence_number(g) == best);
    }
  }
  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(star_graph(6)) == 5);
}

TEST_CASE("spanning supergraphs enumerate every superset of the edges") {
  Graph g = path_graph(3);  // one non-edge
  CHECK(non_edges(g).size() == 1);
  CHECK(spanning_supergraph_count(g) == 2);
  int seen = 0;
  for_each_spanning_supergraph(g, [&](const Graph& h) {
    ++seen;
    for (auto [a, b] : g.edges()) CHECK(h.has_edge(a, b));
  });
  CHECK(seen == 2);
  CHECK(spanning_supergraph_count(empty_graph(4)) == 64);
  CHECK_THROWS_AS(for_each_spanning_supergraph(empty_graph(8), [](const Graph&) {}),
                  GuardError);
}

TEST_CASE("subset enumeration is ordered and stoppable") {
  std::vector<VertexSet> seen;
  for_each_subset_of_size(4, 2, [&](VertexSet s) {
    seen.push_back(s);
    return true;
  });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == (bit(0) | bit(1)));
  CHECK(seen.back() == (bit(2) | bit(3)));
  int stops = 0;
  for_each_subset_of_size(5, 2, [&](VertexSet) { return ++stops < 3; });
  CHECK(stops == 3);
}
