#ifndef RAMPART_TESTS_HELPERS_HPP
#define RAMPART_TESTS_HELPERS_HPP

#include <random>
#include <utility>
#include <vector>

#include "rampart/ramified.hpp"
#include "rampart/set_partition.hpp"

namespace testutil {

using rampart::Ground;
using rampart::Poset;
using rampart::RamifiedPartition;
using rampart::SetPartition;

inline SetPartition random_partition(std::mt19937& rng, Ground g) {
  std::vector<int> label(g.size());
  int mx = 0;
  for (int i = 0; i < g.size(); ++i) {
    label[i] = std::uniform_int_distribution<int>(0, mx)(rng);
    if (label[i] == mx) ++mx;
  }
  return SetPartition::from_labels(label, g);
}

// Random refinement of `coarse`: split each block independently.
inline SetPartition random_refinement(std::mt19937& rng, const SetPartition& coarse) {
  std::vector<int> label(coarse.ground().size());
  int next = 0;
  for (const auto& blk : coarse.blocks()) {
    int mx = 0;
    std::vector<int> sub(blk.size());
    for (std::size_t i = 0; i < blk.size(); ++i) {
      sub[i] = std::uniform_int_distribution<int>(0, mx)(rng);
      if (sub[i] == mx) ++mx;
    }
    for (std::size_t i = 0; i < blk.size(); ++i) label[blk[i]] = next + sub[i];
    next += mx;
  }
  return SetPartition::from_labels(label, coarse.ground());
}

inline RamifiedPartition random_chain2(std::mt19937& rng, int n) {
  SetPartition outer = random_partition(rng, Ground::dbl(n));
  SetPartition inner = random_refinement(rng, outer);
  return RamifiedPartition::make({inner, outer}, Poset::chain(2));
}

// Independent composition oracle: dense reachability closure on 3n nodes.
inline std::pair<SetPartition, int> compose_oracle(const SetPartition& a,
                                                   const SetPartition& b) {
  int n = a.ground().m, N = 3 * n;
  std::vector<std::vector<char>> adj(N, std::vector<char>(N, 0));
  for (int i = 0; i < N; ++i) adj[i][i] = 1;
  auto connect = [&](const std::vector<std::vector<int>>& blocks, int shift) {
    for (const auto& blk : blocks)
      for (int x : blk)
        for (int y : blk) adj[x + shift][y + shift] = 1;
  };
  connect(a.blocks(), 0);
  connect(b.blocks(), n);
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      if (adj[i][k])
        for (int j = 0; j < N; ++j)
          if (adj[k][j]) adj[i][j] = 1;
  auto cls = [&](int i) {
    for (int j = 0; j < N; ++j)
      if (adj[i][j]) return j;  // smallest reachable = class id
    return i;
  };
  std::vector<int> lab(2 * n);
  for (int i = 0; i < n; ++i) {
    lab[i] = cls(i);
    lab[n + i] = cls(2 * n + i);
  }
  int middle_only = 0;
  for (int i = n; i < 2 * n; ++i) {
    if (cls(i) != i) continue;
    bool outside = false;
    for (int j = 0; j < N; ++j)
      if (adj[i][j] && (j < n || j >= 2 * n)) outside = true;
    if (!outside) ++middle_only;
  }
  return {SetPartition::from_labels(lab, a.ground()), middle_only};
}

}  // namespace testutil

#endif
