#include "zft/propagation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "zft/enumerate.hpp"

namespace zft {

void validate_force_set(const ForceSet& f, const Graph& g) {
  VertexSet targets = 0;
  VertexSet hop_sources = 0;
  for (const Force& fo : f.forces) {
    if (fo.source < 0 || fo.source >= g.order() || fo.target < 0 || fo.target >= g.order())
      throw std::invalid_argument("force set: vertex out of range");
    if (fo.kind == ForceKind::SelfLoop && fo.source != fo.target)
      throw std::invalid_argument("force set: self force must have source == target");
    if (fo.kind != ForceKind::SelfLoop && fo.source == fo.target)
      throw std::invalid_argument("force set: source == target only for self forces");
    if (targets & bit(fo.target))
      throw std::invalid_argument("force set: duplicate targets");
    targets |= bit(fo.target);
    if (fo.kind == ForceKind::Hop) {
      // a hop needs an unspent source and spends it, so no source hops twice
      if (hop_sources & bit(fo.source))
        throw std::invalid_argument("force set: two hop forces from one source");
      hop_sources |= bit(fo.source);
    }
  }
}

namespace {

bool force_round_order(const Force& a, const Force& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return a.kind < b.kind;
}

}  // namespace

Schedule propagate_force_set(RuleId rule, const Graph& g, VertexSet blue, const ForceSet& f) {
  if (blue & ~g.vertex_mask()) throw std::invalid_argument("blue set out of range");
  validate_force_set(f, g);
  Schedule sched;
  sched.rounds.push_back(blue);
  ForcingState s{blue, 0};
  std::vector<char> done(f.forces.size(), 0);
  int step = 0;
  for (;;) {
    auto adm = admissible_forces(rule, g, s);
    std::vector<Force> round;
    for (std::size_t i = 0; i < f.forces.size(); ++i) {
      if (done[i]) continue;
      if (std::find(adm.begin(), adm.end(), f.forces[i]) != adm.end()) {
        round.push_back(f.forces[i]);
        done[i] = 1;
      }
    }
    if (round.empty()) break;
    ++step;
    std::sort(round.begin(), round.end(), force_round_order);
    VertexSet covered = 0;
    for (const Force& fo : round) {
      s.blue |= bit(fo.target);
      s.spent |= bit(fo.source);
      covered |= bit(fo.target);
      sched.forces.push_back({fo, step});
    }
    sched.rounds.push_back(covered);
  }
  if (s.blue == g.vertex_mask()) sched.pt = step;
  return sched;
}

VertexSet final_coloring(RuleId rule, const Graph& g, VertexSet blue, const ForceSet& f) {
  return propagate_force_set(rule, g, blue, f).final_coloring();
}

namespace {

// Greedy synchronous closure: every admissible target is forced each round.
// For Z/Zplus/Zloop this realizes the minimum replay length, with one recorded
// force per target so the witness is a valid force set.
PtResult closure_pt(RuleId rule, const Graph& g, VertexSet blue) {
  PtResult res;
  Schedule sched;
  sched.rounds.push_back(blue);
  ForcingState s{blue, 0};
  int step = 0;
  while (s.blue != g.vertex_mask()) {
    auto adm = admissible_forces(rule, g, s);
    if (adm.empty()) break;
    std::sort(adm.begin(), adm.end(), [](const Force& a, const Force& b) {
      if (a.target != b.target) return a.target < b.target;
      if (a.kind != b.kind) return a.kind < b.kind;
      return a.source < b.source;
    });
    ++step;
    VertexSet covered = 0;
    std::vector<Force> round;
    for (const Force& fo : adm) {
      if (covered & bit(fo.target)) continue;
      covered |= bit(fo.target);
      round.push_back(fo);
    }
    std::sort(round.begin(), round.end(), force_round_order);
    for (const Force& fo : round) {
      s.blue |= bit(fo.target);
      s.spent |= bit(fo.source);
      res.witness.forces.push_back(fo);
      sched.forces.push_back({fo, step});
    }
    sched.rounds.push_back(covered);
    res.nodes_explored++;
  }
  if (s.blue == g.vertex_mask()) sched.pt = step;
  res.pt = sched.pt;
  res.schedule = std::move(sched);
  if (!res.pt) res.witness.forces.clear();
  return res;
}

// One BFS transition = one synchronous round. Every white vertex whose
// neighbors are all blue self-forces eagerly under FloorZloop: deferring a
// self, or routing the vertex through someone else's force instead, can be
// exchanged force-for-force into the eager schedule without getting slower
// (whoever would have forced it keeps their force and is hop-eligible no
// later). Every other white target independently stays white, takes one of
// its standard/psd sources, or is covered by a hop, and hop-capable actors
// are interchangeable so only the set of hoppers used matters.
struct FloorSearch {
  RuleId rule;
  const Graph& g;
  std::optional<int> limit;
  VertexSet mask;
  std::uint64_t nodes = 0;

  struct Rec {
    std::uint64_t parent = 0;
    int depth = 0;
    std::vector<Force> round;
  };
  std::unordered_map<std::uint64_t, Rec> seen;

  static std::uint64_t key(ForcingState s) {
    return std::uint64_t(s.blue) | (std::uint64_t(s.spent) << 32);
  }

  FloorSearch(RuleId r, const Graph& graph, std::optional<int> lim)
      : rule(r), g(graph), limit(lim), mask(graph.vertex_mask()) {}

  template <typename F>
  void for_each_round(ForcingState s, F&& emit) {
    VertexSet white = mask & ~s.blue;
    VertexSet selfs = 0;
    VertexSet hoppers = 0;
    std::vector<std::pair<int, int>> pairs;

    switch (rule) {
      case RuleId::FloorZ:
        for_each_vertex(s.blue & ~s.spent, [&](int v) {
          VertexSet wn = g.neighbors(v) & white;
          if (wn == 0)
            hoppers |= bit(v);
          else if (popcount(wn) == 1)
            pairs.push_back({v, first_vertex(wn)});
        });
        break;
      case RuleId::FloorZplus: {
        auto comps = connected_components(g, white);
        for_each_vertex(s.blue, [&](int v) {
          for (VertexSet comp : comps) {
            VertexSet wn = g.neighbors(v) & comp;
            if (popcount(wn) == 1) pairs.push_back({v, first_vertex(wn)});
          }
        });
        for_each_vertex(s.blue & ~s.spent, [&](int v) {
          if ((g.neighbors(v) & white) == 0) hoppers |= bit(v);
        });
        break;
      }
      case RuleId::FloorZloop:
        for_each_vertex(s.blue, [&](int v) {
          VertexSet wn = g.neighbors(v) & white;
          if (popcount(wn) == 1) pairs.push_back({v, first_vertex(wn)});
        });
        for_each_vertex(white, [&](int w) {
          if ((g.neighbors(w) & white) == 0) selfs |= bit(w);
        });
        for_each_vertex(s.blue & ~s.spent, [&](int v) {
          if ((g.neighbors(v) & white) == 0) hoppers |= bit(v);
        });
        break;
      default:
        throw std::logic_error("floor search on a non-floor rule");
    }

    std::vector<int> choice_targets = set_to_vector(white & ~selfs);
    std::vector<std::vector<int>> sources(choice_targets.size());
    for (auto [src, tgt] : pairs) {
      auto it = std::lower_bound(choice_targets.begin(), choice_targets.end(), tgt);
      if (it != choice_targets.end() && *it == tgt)
        sources[it - choice_targets.begin()].push_back(src);
    }
    std::vector<int> hop_list = set_to_vector(hoppers);

    std::vector<Force> round;
    std::vector<int> hop_targets;
    for_each_vertex(selfs, [&](int w) { round.push_back({w, w, ForceKind::SelfLoop}); });

    auto finish = [&](auto&& self_ref, std::size_t h_left, std::size_t h_from,
                      VertexSet new_blue, VertexSet new_spent) -> void {
      if (h_left == 0) {
        if (round.empty()) return;  // a round must execute at least one force
        emit(ForcingState{new_blue, new_spent}, round);
        return;
      }
      for (std::size_t i = h_from; i + h_left <= hop_list.size(); ++i) {
        int v = hop_list[i];
        int w = hop_targets[hop_targets.size() - h_left];
        round.push_back({v, w, ForceKind::Hop});
        self_ref(self_ref, h_left - 1, i + 1, new_blue, new_spent | bit(v));
        round.pop_back();
      }
    };

    auto assign = [&](auto&& self_ref, std::size_t ti, VertexSet new_blue,
                      VertexSet new_spent) -> void {
      if (ti == choice_targets.size()) {
        finish(finish, hop_targets.size(), 0, new_blue, new_spent);
        return;
      }
      int w = choice_targets[ti];
      // stays white
      self_ref(self_ref, ti + 1, new_blue, new_spent);
      // one of its standard sources forces it
      for (int src : sources[ti]) {
        round.push_back({src, w, ForceKind::Standard});
        self_ref(self_ref, ti + 1, new_blue | bit(w), new_spent | bit(src));
        round.pop_back();
      }
      // covered by a hop
      if (!hop_list.empty() && hop_targets.size() < hop_list.size()) {
        hop_targets.push_back(w);
        self_ref(self_ref, ti + 1, new_blue | bit(w), new_spent);
        hop_targets.pop_back();
      }
    };

    assign(assign, 0, s.blue | selfs, s.spent | selfs);
  }

  PtResult run(VertexSet blue) {
    PtResult res;
    ForcingState start{blue, 0};
    seen[key(start)] = {key(start), 0, {}};
    if (blue == mask) {
      res.pt = 0;
      res.schedule = propagate_force_set(rule, g, blue, res.witness);
      return res;
    }
    std::deque<ForcingState> queue{start};
    std::optional<std::uint64_t> goal;
    while (!queue.empty() && !goal) {
      ForcingState s = queue.front();
      queue.pop_front();
      int depth = seen[key(s)].depth;
      if (limit && depth >= *limit) continue;
      ++nodes;
      for_each_round(s, [&](ForcingState s2, const std::vector<Force>& round) {
        if (goal) return;
        std::uint64_t k2 = key(s2);
        if (seen.count(k2)) return;
        seen[k2] = {key(s), depth + 1, round};
        if (s2.blue == mask) {
          goal = k2;
          return;
        }
        queue.push_back(s2);
      });
    }
    res.nodes_explored = nodes;
    if (!goal) return res;  // pt empty: unreachable, or beyond the round limit

    std::vector<std::vector<Force>> rounds;
    std::uint64_t at = *goal;
    while (seen[at].parent != at) {
      rounds.push_back(seen[at].round);
      at = seen[at].parent;
    }
    std::reverse(rounds.begin(), rounds.end());
    for (const auto& r : rounds)
      res.witness.forces.insert(res.witness.forces.end(), r.begin(), r.end());
    res.schedule = propagate_force_set(rule, g, blue, res.witness);
    res.pt = res.schedule.pt;
    if (!res.pt || *res.pt != static_cast<int>(rounds.size()))
      throw std::logic_error("floor search witness replay disagrees with search depth");
    return res;
  }
};

}  // namespace

PtResult pt_of_set(RuleId rule, const Graph& g, VertexSet blue, PtOptions opts) {
  if (blue & ~g.vertex_mask()) throw std::invalid_argument("blue set out of range");
  if (!is_floor(rule)) return closure_pt(rule, g, blue);
  if (g.order() > opts.max_n)
    throw GuardError("floor propagation search: order " + std::to_string(g.order()) +
                     " exceeds guard " + std::to_string(opts.max_n));
  if (opts.round_limit && *opts.round_limit < 0) return {};
  FloorSearch search(rule, g, opts.round_limit);
  return search.run(blue);
}

std::optional<int> pt_via_supergraphs(RuleId base, const Graph& g, VertexSet blue) {
  if (is_floor(base))
    throw std::invalid_argument("pt_via_supergraphs expects a non-floor base rule");
  std::optional<int> best;
  for_each_spanning_supergraph(g, [&](const Graph& h) {
    auto r = closure_pt(base, h, blue);
    if (r.pt && (!best || *r.pt < *best)) best = r.pt;
  });
  return best;
}

bool is_forcing_set(RuleId rule, const Graph& g, VertexSet blue) {
  return pt_of_set(rule, g, blue).pt.has_value();
}

ForcingNumberResult forcing_number(RuleId rule, const Graph& g) {
  int n = g.order();
  for (int k = 0; k <= n; ++k) {
    ForcingNumberResult best;
    bool found = false;
    for_each_subset_of_size(n, k, [&](VertexSet s) {
      auto r = pt_of_set(rule, g, s);
      if (r.pt && (!found || *r.pt < *best.pt)) {
        best = {k, r.pt, s};
        found = true;
      }
      return true;
    });
    if (found) return best;
  }
  return {0, 0, 0};  // n == 0: the empty set forces the empty graph
}

}  // namespace zft
