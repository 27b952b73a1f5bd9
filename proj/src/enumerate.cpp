#include "zft/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace zft {

namespace {

// Permutation action on upper-triangle bit positions, precomputed per n.
struct PermTables {
  int n;
  int bits;
  std::vector<std::vector<std::uint8_t>> maps;  // per permutation, old pos -> new pos

  explicit PermTables(int order) : n(order), bits(order * (order - 1) / 2) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto pair_index = [](int i, int j) {
      if (i > j) std::swap(i, j);
      return j * (j - 1) / 2 + i;
    };
    do {
      std::vector<std::uint8_t> m(bits);
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) m[pair_index(i, j)] = pair_index(perm[i], perm[j]);
      maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool is_min_mask(std::uint64_t mask) const {
    for (const auto& m : maps) {
      std::uint64_t t = 0;
      std::uint64_t rest = mask;
      while (rest) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        t |= std::uint64_t{1} << m[p];
      }
      if (t < mask) return false;
    }
    return true;
  }
};

}  // namespace

const std::vector<Graph>& graphs_up_to_iso(int n) {
  if (n < 0 || n > 7) throw GuardError("graphs_up_to_iso capped at n <= 7");
  static std::map<int, std::vector<Graph>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Graph> out;
  if (n == 0) {
    out.push_back(Graph(0));
  } else {
    PermTables tables(n);
    std::uint64_t count = std::uint64_t{1} << tables.bits;
    for (std::uint64_t mask = 0; mask < count; ++mask)
      if (tables.is_min_mask(mask)) out.push_back(Graph::from_edge_bits(n, mask));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (const Graph& g : graphs_up_to_iso(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace zft
