#include "zft/throttling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "zft/enumerate.hpp"

namespace zft {

std::optional<int> th_of_set(RuleId rule, const Graph& g, VertexSet blue, PtOptions opts) {
  auto r = pt_of_set(rule, g, blue, opts);
  if (!r.pt) return std::nullopt;
  return popcount(blue) + *r.pt;
}

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / i;
  return r;
}

}  // namespace

ThrottlingResult throttling_number(RuleId rule, const Graph& g, int max_n) {
  int guard = max_n > 0 ? max_n : (is_floor(rule) ? kFloorThrottleMaxN : kThrottleMaxN);
  if (g.order() > guard)
    throw GuardError("throttling search: order " + std::to_string(g.order()) +
                     " exceeds guard " + std::to_string(guard));
  int n = g.order();
  ThrottlingResult best;
  best.value = n;  // B = V forces with pt 0
  best.witness = g.vertex_mask();
  bool chain_bound = rule == RuleId::Z || rule == RuleId::FloorZ;

  bool improved = false;
  for (int k = 0; k <= n; ++k) {
    if (k >= best.value) {
      for (int rest = k; rest <= n; ++rest) best.sets_pruned += binom(n, rest);
      break;
    }
    long long lb;
    if (chain_bound)
      lb = k == 0 ? std::numeric_limits<long long>::max() : k + (n - k + k - 1) / k;
    else
      lb = k + (k < n ? 1 : 0);
    if (lb >= best.value) {
      best.sets_pruned += binom(n, k);
      continue;
    }
    PtOptions opts;
    opts.max_n = std::max(n, kFloorSearchMaxN);
    opts.round_limit = best.value - k - 1;  // only strict improvements matter
    for_each_subset_of_size(n, k, [&](VertexSet s) {
      ++best.sets_examined;
      opts.round_limit = best.value - k - 1;
      auto r = pt_of_set(rule, g, s, opts);
      if (r.pt && k + *r.pt < best.value) {
        best.value = k + *r.pt;
        best.witness = s;
        best.forces = std::move(r.witness);
        best.schedule = std::move(r.schedule);
        improved = true;
      }
      return k < best.value;  // bail out of this size class once |B| alone ties it
    });
  }
  if (!improved) {
    auto r = pt_of_set(rule, g, best.witness);
    best.forces = std::move(r.witness);
    best.schedule = std::move(r.schedule);
  }
  return best;
}

int th_via_supergraphs(const Graph& g) {
  int best = g.order();
  for_each_spanning_supergraph(g, [&](const Graph& h) {
    int v = throttling_number(RuleId::Z, h).value;
    if (v < best) best = v;
  });
  return best;
}

namespace {

int isqrt(int n) {
  int m = 0;
  while ((m + 1) * (m + 1) <= n) ++m;
  return m;
}

}  // namespace

int sqrt_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("sqrt_lower_bound: n must be positive");
  int r = isqrt(4 * n);
  return r * r == 4 * n ? r - 1 : r;
}

int order_upper_bound(int t) {
  if (t < 1) throw std::invalid_argument("order_upper_bound: t must be positive");
  return (t + 1) * (t + 1) / 4;
}

int path_throttling_formula(int n) { return sqrt_lower_bound(n); }

int cycle_throttling_formula(int n) {
  if (n < 3) throw std::invalid_argument("cycle_throttling_formula: n must be at least 3");
  int m = isqrt(n);
  int r = n - m * m;
  if (r == 0) return m % 2 == 0 ? 2 * m - 1 : 2 * m;
  return r <= m ? 2 * m : 2 * m + 1;
}

int floor_cycle_formula(int n) {
  if (n < 3) throw std::invalid_argument("floor_cycle_formula: n must be at least 3");
  return sqrt_lower_bound(n);
}

int alpha_upper_bound(const Graph& g) {
  if (g.order() == 0) return 0;
  int a = independence_number(g);
  return g.order() - a + sqrt_lower_bound(a);
}

}  // namespace zft
