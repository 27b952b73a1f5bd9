#pragma once

// Exhaustive enumeration helpers shared by searches and tests.

#include <cstdint>
#include <vector>

#include "zft/graph.hpp"

namespace zft {

// k-subsets of {0..n-1} in lexicographic order of the sorted vertex lists,
// passed as bitmasks. Stops early when fn returns false.
template <typename F>
bool for_each_subset_of_size(int n, int k, F&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    VertexSet s = 0;
    for (int v : idx) s |= bit(v);
    if (!fn(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    if (k == 0) return true;
  }
}

// All labeled graphs on n vertices (n <= 8: 2^28 would already be silly).
template <typename F>
void for_each_labeled_graph(int n, F&& fn) {
  if (n > 8) throw GuardError("labeled graph enumeration capped at n <= 8");
  std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t bits = 0; bits < count; ++bits) fn(Graph::from_edge_bits(n, bits));
}

// One representative per isomorphism class on n vertices (the least edge-bit
// encoding). Cached per n; n <= 7 keeps the scan under a few seconds.
const std::vector<Graph>& graphs_up_to_iso(int n);

std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace zft
