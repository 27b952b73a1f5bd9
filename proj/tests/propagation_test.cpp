#include <algorithm>
#include <vector>

#include "doctest.h"
#include "zft/enumerate.hpp"
#include "zft/propagation.hpp"
#include "zft/throttling.hpp"

using namespace zft;

TEST_CASE("force set validation") {
  Graph g = path_graph(4);
  CHECK_NOTHROW(validate_force_set({{{0, 1, ForceKind::Standard}, {1, 2, ForceKind::Standard}}}, g));
  // duplicate targets
  CHECK_THROWS_AS(validate_force_set({{{0, 1, ForceKind::Standard}, {2, 1, ForceKind::Standard}}}, g),
                  std::invalid_argument);
  // two hops from one source
  CHECK_THROWS_AS(validate_force_set({{{0, 2, ForceKind::Hop}, {0, 3, ForceKind::Hop}}}, g),
                  std::invalid_argument);
  // self forces must have source == target, others must not
  CHECK_THROWS_AS(validate_force_set({{{0, 1, ForceKind::SelfLoop}}}, g), std::invalid_argument);
  CHECK_THROWS_AS(validate_force_set({{{1, 1, ForceKind::Standard}}}, g), std::invalid_argument);
  CHECK_THROWS_AS(validate_force_set({{{0, 7, ForceKind::Standard}}}, g), std::invalid_argument);
}

TEST_CASE("replay runs synchronous rounds") {
  Graph p3 = path_graph(3);
  ForceSet f{{{0, 1, ForceKind::Standard}, {1, 2, ForceKind::Standard}}};
  Schedule s = propagate_force_set(RuleId::Z, p3, bit(0), f);
  REQUIRE(s.pt == 2);
  REQUIRE(s.rounds.size() == 3);
  CHECK(s.rounds[0] == bit(0));
  CHECK(s.rounds[1] == bit(1));
  CHECK(s.rounds[2] == bit(2));
  REQUIRE(s.forces.size() == 2);
  CHECK(s.forces[0] == TimedForce{{0, 1, ForceKind::Standard}, 1});
  CHECK(s.forces[1] == TimedForce{{1, 2, ForceKind::Standard}, 2});
  CHECK(s.final_coloring() == full_set(3));
  CHECK(final_coloring(RuleId::Z, p3, bit(0), f) == full_set(3));

  // a force set that never finishes reports no pt but keeps partial progress
  Schedule stuck = propagate_force_set(RuleId::Z, p3, bit(0), ForceSet{{{0, 1, ForceKind::Standard}}});
  CHECK(!stuck.pt.has_value());
  CHECK(stuck.final_coloring() == (bit(0) | bit(1)));
}

TEST_CASE("a force only replays when its rule admits it") {
  // the second hop must wait until its source is blue and out of white neighbors
  Graph g = empty_graph(3);
  ForceSet f{{{0, 1, ForceKind::Hop}, {1, 2, ForceKind::Hop}}};
  Schedule s = propagate_force_set(RuleId::FloorZ, g, bit(0), f);
  REQUIRE(s.pt == 2);
  CHECK(s.forces[0].step == 1);
  CHECK(s.forces[1].step == 2);

  // hop sources spend themselves: reusing one stalls forever
  ForceSet bad{{{0, 1, ForceKind::Hop}, {0, 2, ForceKind::Hop}}};
  CHECK_THROWS_AS(propagate_force_set(RuleId::FloorZ, g, bit(0), bad), std::invalid_argument);
}

TEST_CASE("closure propagation times on paths, stars, cycles") {
  for (int n = 2; n <= 7; ++n) {
    Graph p = path_graph(n);
    CHECK(pt_of_set(RuleId::Z, p, bit(0)).pt == n - 1);
  }
  // four blue leaves of K_{1,5}: hub after one round, last leaf after two
  Graph star = star_graph(6);
  CHECK(pt_of_set(RuleId::Z, star, 0b011110).pt == 2);

  Graph p9 = path_graph(9);
  CHECK(!pt_of_set(RuleId::Z, p9, vector_to_set({1, 4, 7})).pt.has_value());
  CHECK(pt_of_set(RuleId::Z, p9, vector_to_set({0, 5, 6})).pt == 2);

  // full blue finishes instantly; anything less takes a round
  CHECK(pt_of_set(RuleId::Z, path_graph(4), full_set(4)).pt == 0);
  CHECK(pt_of_set(RuleId::FloorZ, path_graph(4), full_set(4)).pt == 0);
  CHECK(pt_of_set(RuleId::Zloop, complete_graph(3), full_set(3) & ~bit(0)).pt == 1);
}

TEST_CASE("closure witness replays to the reported pt") {
  for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(5)}) {
    for (RuleId rule : {RuleId::Z, RuleId::Zplus, RuleId::Zloop}) {
      for (VertexSet blue = 1; blue < g.vertex_mask(); blue += 3) {
        PtResult r = pt_of_set(rule, g, blue);
        if (!r.pt) continue;
        Schedule replay = propagate_force_set(rule, g, blue, r.witness);
        CHECK(replay.pt == r.pt);
      }
    }
  }
}

TEST_CASE("standard pt equals the best replay over all assignments") {
  // oracle: each non-seed vertex picks a forcing neighbor or stays unassigned;
  // replay every assignment and keep the best finish
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      for (VertexSet blue = 1; blue <= g.vertex_mask(); ++blue) {
        auto whites = set_to_vector(g.vertex_mask() & ~blue);
        std::optional<int> best;
        std::vector<int> choice(whites.size(), -1);
        for (;;) {
          ForceSet f;
          for (std::size_t i = 0; i < whites.size(); ++i)
            if (choice[i] >= 0) f.forces.push_back({choice[i], whites[i], ForceKind::Standard});
          bool ok = true;
          for (const Force& fo : f.forces)
            if (!g.has_edge(fo.source, fo.target)) ok = false;
          if (ok) {
            Schedule s = propagate_force_set(RuleId::Z, g, blue, f);
            if (s.pt && (!best || *s.pt < *best)) best = s.pt;
          }
          std::size_t i = 0;
          while (i < whites.size() && choice[i] == n - 1) choice[i++] = -1;
          if (i == whites.size()) break;
          ++choice[i];
        }
        CHECK(pt_of_set(RuleId::Z, g, blue).pt == best);
      }
    }
  }
}

TEST_CASE("snake schedule covers a long cycle in four rounds") {
  Graph c25 = cycle_graph(25);
  VertexSet b = full_set(5);
  ForceSet f;
  auto add = [&](int s, int t, ForceKind k) { f.forces.push_back({s, t, k}); };
  add(0, 24, ForceKind::Standard);
  add(4, 5, ForceKind::Standard);
  add(1, 6, ForceKind::Hop);
  add(2, 7, ForceKind::Hop);
  add(3, 8, ForceKind::Hop);
  add(8, 9, ForceKind::Standard);
  add(24, 23, ForceKind::Standard);
  add(5, 10, ForceKind::Hop);
  add(6, 11, ForceKind::Hop);
  add(7, 12, ForceKind::Hop);
  add(12, 13, ForceKind::Standard);
  add(23, 22, ForceKind::Standard);
  add(9, 14, ForceKind::Hop);
  add(10, 15, ForceKind::Hop);
  add(11, 16, ForceKind::Hop);
  add(22, 21, ForceKind::Standard);
  add(16, 17, ForceKind::Standard);
  add(13, 18, ForceKind::Hop);
  add(14, 19, ForceKind::Hop);
  add(15, 20, ForceKind::Hop);
  Schedule s = propagate_force_set(RuleId::FloorZ, c25, b, f);
  REQUIRE(s.pt == 4);
  CHECK(s.final_coloring() == full_set(25));
  // five seeds, four rounds: matches the square-root bound exactly
  CHECK(5 + *s.pt == sqrt_lower_bound(25));
}

TEST_CASE("floor search finds hops and respects limits") {
  CHECK(pt_of_set(RuleId::FloorZ, empty_graph(2), bit(0)).pt == 1);
  CHECK(pt_of_set(RuleId::FloorZ, path_graph(4), bit(0) | bit(2)).pt == 2);
  // blue leaf hops around the star while the hub never forces
  CHECK(pt_of_set(RuleId::FloorZ, star_graph(6), bit(0) | bit(1)).pt == 4);
  // hop chain through an empty graph: one new vertex per round
  CHECK(pt_of_set(RuleId::FloorZ, empty_graph(3), bit(0)).pt == 2);

  PtOptions limited;
  limited.round_limit = 2;
  CHECK(!pt_of_set(RuleId::FloorZ, path_graph(6), bit(0), limited).pt.has_value());

  CHECK_THROWS_AS(pt_of_set(RuleId::FloorZ, path_graph(13), bit(0)), GuardError);
  PtOptions wide;
  wide.max_n = 13;
  CHECK(pt_of_set(RuleId::FloorZ, path_graph(13), bit(0), wide).pt == 12);

  PtResult r = pt_of_set(RuleId::FloorZ, cycle_graph(9), full_set(3));
  REQUIRE(r.pt.has_value());
  CHECK(r.nodes_explored > 0);
  CHECK(propagate_force_set(RuleId::FloorZ, cycle_graph(9), full_set(3), r.witness).pt == r.pt);
}

TEST_CASE("supergraph route matches direct floor search") {
  CHECK(pt_via_supergraphs(RuleId::Z, empty_graph(2), bit(0)) == 1);
  CHECK(!pt_via_supergraphs(RuleId::Z, empty_graph(2), 0).has_value());
  CHECK_THROWS_AS(pt_via_supergraphs(RuleId::FloorZ, path_graph(3), bit(0)),
                  std::invalid_argument);
}

TEST_CASE("forcing sets and forcing numbers") {
  CHECK(is_forcing_set(RuleId::Z, path_graph(4), bit(0)));
  CHECK(!is_forcing_set(RuleId::Z, path_graph(4), bit(1)));
  CHECK(!is_forcing_set(RuleId::FloorZ, path_graph(4), bit(1)));
  CHECK(is_forcing_set(RuleId::FloorZ, empty_graph(3), bit(0)));
  CHECK(!is_forcing_set(RuleId::Z, empty_graph(3), bit(0)));

  ForcingNumberResult path = forcing_number(RuleId::Z, path_graph(5));
  CHECK(path.number == 1);
  CHECK(path.pt == 4);
  CHECK(path.witness == bit(0));

  ForcingNumberResult c4 = forcing_number(RuleId::Z, cycle_graph(4));
  CHECK(c4.number == 2);
  CHECK(c4.pt == 1);
  CHECK(c4.witness == (bit(0) | bit(1)));  // opposite pairs are stuck

  CHECK(forcing_number(RuleId::Z, complete_graph(4)).number == 3);
  CHECK(forcing_number(RuleId::Z, empty_graph(3)).number == 3);
  CHECK(forcing_number(RuleId::FloorZ, empty_graph(3)).number == 1);

  // an isolated vertex forces itself under the loop rule: empty set suffices
  ForcingNumberResult k1 = forcing_number(RuleId::Zloop, path_graph(1));
  CHECK(k1.number == 0);
  CHECK(k1.pt == 1);
}
