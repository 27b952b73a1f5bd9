#include <optional>
#include <vector>

#include "doctest.h"
#include "zft/enumerate.hpp"
#include "zft/throttling.hpp"

using namespace zft;

TEST_CASE("closed form values for paths and cycles") {
  const int path[] = {1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7};
  for (int n = 1; n <= 16; ++n) CHECK(path_throttling_formula(n) == path[n - 1]);

  const int cyc[] = {3, 3, 4, 4, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7};
  for (int n = 3; n <= 16; ++n) CHECK(cycle_throttling_formula(n) == cyc[n - 3]);

  // hops erase the cycle premium: the floor value matches the path value
  for (int n = 3; n <= 16; ++n) CHECK(floor_cycle_formula(n) == path_throttling_formula(n));

  CHECK_THROWS_AS(path_throttling_formula(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle_throttling_formula(2), std::invalid_argument);
}

TEST_CASE("bounds in exact integer arithmetic") {
  CHECK(sqrt_lower_bound(1) == 1);
  CHECK(sqrt_lower_bound(25) == 9);
  CHECK(sqrt_lower_bound(26) == 10);
  const int orders[] = {1, 2, 4, 6, 9, 12};
  for (int t = 1; t <= 6; ++t) CHECK(order_upper_bound(t) == orders[t - 1]);
  // consistency: a path of the bounding order still throttles within t
  for (int t = 1; t <= 6; ++t) CHECK(path_throttling_formula(order_upper_bound(t)) == t);
  CHECK_THROWS_AS(sqrt_lower_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(order_upper_bound(0), std::invalid_argument);

  CHECK(alpha_upper_bound(star_graph(6)) == 5);     // n=6, alpha=5
  CHECK(alpha_upper_bound(complete_graph(4)) == 4); // alpha=1
  CHECK(alpha_upper_bound(path_graph(9)) == 8);     // alpha=5
}

TEST_CASE("throttling of a fixed seed set") {
  Graph p9 = path_graph(9);
  CHECK(th_of_set(RuleId::Z, p9, vector_to_set({0, 5, 6})) == 5);
  CHECK(!th_of_set(RuleId::Z, p9, vector_to_set({1, 4, 7})).has_value());
  CHECK(th_of_set(RuleId::Z, complete_graph(5), full_set(5)) == 5);
  CHECK(th_of_set(RuleId::FloorZ, empty_graph(3), bit(0)) == 3);
}

TEST_CASE("pinned throttling numbers") {
  CHECK(throttling_number(RuleId::Z, path_graph(9)).value == 5);
  CHECK(throttling_number(RuleId::Z, path_graph(9)).witness == vector_to_set({0, 5, 6}));
  CHECK(throttling_number(RuleId::Z, cycle_graph(16)).value == 7);
  CHECK(throttling_number(RuleId::Z, star_graph(6)).value == 6);
  CHECK(throttling_number(RuleId::FloorZ, star_graph(6)).value == 5);
  CHECK(throttling_number(RuleId::FloorZ, cycle_graph(9)).value == 5);
  CHECK(throttling_number(RuleId::FloorZ, path_graph(6)).value == 4);
  // paths and cycles meet their formulas
  for (int n = 1; n <= 10; ++n)
    CHECK(throttling_number(RuleId::Z, path_graph(n)).value == path_throttling_formula(n));
  for (int n = 3; n <= 10; ++n)
    CHECK(throttling_number(RuleId::Z, cycle_graph(n)).value == cycle_throttling_formula(n));
}

TEST_CASE("removing one clique edge keeps the throttling number at n") {
  for (int n = 3; n <= 6; ++n) {
    Graph g = complete_graph(n);
    g.remove_edge(n - 2, n - 1);
    CHECK(throttling_number(RuleId::Z, g).value == n);
  }
}

TEST_CASE("result invariants: witness, forces, counters") {
  ThrottlingResult r = throttling_number(RuleId::Z, path_graph(9));
  REQUIRE(r.schedule.pt.has_value());
  CHECK(r.value == popcount(r.witness) + *r.schedule.pt);
  CHECK(th_of_set(RuleId::Z, path_graph(9), r.witness) == r.value);
  CHECK(r.sets_examined > 0);
  CHECK(r.sets_pruned > 0);  // P_9 admits plenty of hopeless small seeds

  ThrottlingResult fr = throttling_number(RuleId::FloorZ, cycle_graph(8));
  REQUIRE(fr.schedule.pt.has_value());
  CHECK(fr.value == popcount(fr.witness) + *fr.schedule.pt);
  Schedule replay = propagate_force_set(RuleId::FloorZ, cycle_graph(8), fr.witness, fr.forces);
  CHECK(replay.pt == fr.schedule.pt);
}

TEST_CASE("search agrees with the unpruned minimum on every small graph") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      for (RuleId rule : {RuleId::Z, RuleId::Zplus, RuleId::Zloop, RuleId::FloorZ,
                          RuleId::FloorZplus, RuleId::FloorZloop}) {
        std::optional<int> best;
        for (VertexSet b = 0; b <= g.vertex_mask(); ++b) {
          auto th = th_of_set(rule, g, b);
          if (th && (!best || *th < *best)) best = th;
        }
        REQUIRE(best.has_value());  // B = V always finishes
        CHECK(throttling_number(rule, g).value == *best);
      }
    }
  }
}

TEST_CASE("guards refuse oversized searches unless overridden") {
  CHECK_THROWS_AS(throttling_number(RuleId::Z, path_graph(17)), GuardError);
  CHECK_THROWS_AS(throttling_number(RuleId::FloorZ, path_graph(11)), GuardError);
  CHECK(throttling_number(RuleId::Z, path_graph(17), 17).value ==
        path_throttling_formula(17));
}

TEST_CASE("best supergraph value matches the direct floor search") {
  CHECK(th_via_supergraphs(empty_graph(2)) == 2);
  CHECK(th_via_supergraphs(path_graph(5)) == 4);
  for (const Graph& g : {path_graph(6), cycle_graph(6), star_graph(5), empty_graph(4)}) {
    CHECK(th_via_supergraphs(g) == throttling_number(RuleId::FloorZ, g).value);
  }
}
