#pragma once

#include <cstdint>
#include <optional>

#include "zft/graph.hpp"
#include "zft/propagation.hpp"
#include "zft/rules.hpp"

namespace zft {

inline constexpr int kThrottleMaxN = 16;       // closure-rule search guard
inline constexpr int kFloorThrottleMaxN = 10;  // floor-rule search guard

// th(G;B) = |B| + pt(G;B); absent when B never finishes.
std::optional<int> th_of_set(RuleId rule, const Graph& g, VertexSet blue, PtOptions opts = {});

struct ThrottlingResult {
  int value = 0;
  VertexSet witness = 0;
  ForceSet forces;        // optimal force set from the witness
  Schedule schedule;      // its replay; value == popcount(witness) + *schedule.pt
  std::uint64_t sets_examined = 0;
  std::uint64_t sets_pruned = 0;  // subsets skipped wholesale by lower bounds
};

// Exact min of |B| + pt over all B, size-ascending with branch-and-bound.
// Witness is the first optimum in (|B|, lex) order. For Z and FloorZ every
// vertex forces at most once, so the forces from a size-k seed form at most k
// chains each growing by at most one vertex per round: pt >= ceil((n-k)/k).
// Other rules branch (one source can force repeatedly), leaving only pt >= 1.
// max_n = 0 picks the rule default (16 closure / 10 floor).
ThrottlingResult throttling_number(RuleId rule, const Graph& g, int max_n = 0);

// min over spanning supergraphs H of th under plain Z on H; independent
// oracle for throttling_number(FloorZ, g).
int th_via_supergraphs(const Graph& g);

int path_throttling_formula(int n);   // smallest t with (t+1)^2 >= 4n, n >= 1
int cycle_throttling_formula(int n);  // n >= 3
int floor_cycle_formula(int n);       // same value as the path formula, n >= 3

int sqrt_lower_bound(int n);   // ceil(2 sqrt n - 1) in exact integer arithmetic
int order_upper_bound(int t);  // largest order a graph with floor throttling <= t can have

int alpha_upper_bound(const Graph& g);  // n - alpha + ceil(2 sqrt alpha - 1)

}  // namespace zft
