#pragma once

// Propagation of force sets and optimal propagation time.
//
// A force set replays deterministically: each synchronous round executes every
// force whose conditions hold given the blue set and the spent set implied by
// earlier rounds. pt(G;B) minimizes the replay length over force sets. For Z,
// Zplus and Zloop the greedy closure (execute everything admissible each
// round) realizes that minimum; for the floor rules the choice of hop targets
// and of deferring a force matters, so the minimum is found by breadth-first
// search over (blue, spent) states where one transition is one round.

#include <cstdint>
#include <optional>
#include <vector>

#include "zft/graph.hpp"
#include "zft/rules.hpp"

namespace zft {

struct ForceSet {
  std::vector<Force> forces;

  bool operator==(const ForceSet&) const = default;
};

// Throws on duplicate targets or two hops from one source (no chronological
// ordering can realize either).
void validate_force_set(const ForceSet& f, const Graph& g);

struct TimedForce {
  Force force;
  int step = 0;  // 1-based round

  bool operator==(const TimedForce&) const = default;
};

struct Schedule {
  std::optional<int> pt;            // empty when the coloring never completes
  std::vector<VertexSet> rounds;    // rounds[0] = B, rounds[t] = targets of round t
  std::vector<TimedForce> forces;   // executed forces in (step, source) order

  VertexSet final_coloring() const {
    VertexSet s = 0;
    for (VertexSet r : rounds) s |= r;
    return s;
  }
};

Schedule propagate_force_set(RuleId rule, const Graph& g, VertexSet blue, const ForceSet& f);
VertexSet final_coloring(RuleId rule, const Graph& g, VertexSet blue, const ForceSet& f);

inline constexpr int kFloorSearchMaxN = 12;

struct PtOptions {
  // Stop a floor search once depth exceeds this many rounds; pt above the
  // limit reports as empty. No effect on the closure rules.
  std::optional<int> round_limit;
  int max_n = kFloorSearchMaxN;
};

struct PtResult {
  std::optional<int> pt;
  ForceSet witness;       // achieves pt when pt is present
  Schedule schedule;      // replay of the witness
  std::uint64_t nodes_explored = 0;
};

PtResult pt_of_set(RuleId rule, const Graph& g, VertexSet blue, PtOptions opts = {});

// Oracle route: min over spanning supergraphs H of pt under the (non-floor)
// base rule on H. Empty when no supergraph completes.
std::optional<int> pt_via_supergraphs(RuleId base, const Graph& g, VertexSet blue);

bool is_forcing_set(RuleId rule, const Graph& g, VertexSet blue);

struct ForcingNumberResult {
  int number = 0;                // least size of a forcing set
  std::optional<int> pt;        // least pt over minimum forcing sets
  VertexSet witness = 0;        // lexicographically least achieving both
};

ForcingNumberResult forcing_number(RuleId rule, const Graph& g);

}  // namespace zft
