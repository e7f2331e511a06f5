#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "bram/graph.hpp"
#include "bram/rng.hpp"

namespace bram {

/// Random tree with m edges (uniform-attachment), 2-colored by depth parity
/// into a bipartite graph. Deterministic for a fixed seed.
inline BipartiteGraph random_tree_bipartite(int m, std::uint64_t seed) {
  if (m < 1) throw std::domain_error("random_tree_bipartite requires m >= 1");
  Rng rng(seed);
  std::vector<int> parent(m + 1, -1), depth(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    parent[i] = int(rng.next_below(std::uint64_t(i)));
    depth[i] = depth[parent[i]] + 1;
  }
  std::vector<int> side_index(m + 1, -1);
  int left = 0, right = 0;
  for (int v = 0; v <= m; ++v) side_index[v] = depth[v] % 2 == 0 ? left++ : right++;
  BipartiteGraph g(left, right);
  for (int v = 1; v <= m; ++v) {
    int u = parent[v];
    if (depth[v] % 2 == 1)
      g.add_edge(side_index[u], side_index[v]);
    else
      g.add_edge(side_index[v], side_index[u]);
  }
  return g;
}

/// G(L,R,p)-style random bipartite graph.
inline BipartiteGraph random_bipartite(int left, int right, double edge_prob, std::uint64_t seed) {
  if (left < 0 || right < 0) throw std::domain_error("sides must be >= 0");
  if (!(edge_prob >= 0.0) || !(edge_prob <= 1.0))
    throw std::domain_error("edge probability must be in [0,1]");
  Rng rng(seed);
  BipartiteGraph g(left, right);
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v)
      if (rng.next_unit() < edge_prob) g.add_edge(u, v);
  return g;
}

/// 2-coloring of K_{N,N} whose red class is a uniform random perfect
/// matching (hence C_4-free); everything else is blue.
inline EdgeColoring random_matching_coloring(int n, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("random_matching_coloring requires N >= 1");
  Rng rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_below(std::uint64_t(i) + 1)]);
  EdgeColoring c(n, 2, 1);
  for (int i = 0; i < n; ++i) c.set_color(i, perm[i], 0);
  return c;
}

/// Uniform random total coloring.
inline EdgeColoring random_coloring(int n, int colors, std::uint64_t seed) {
  Rng rng(seed);
  EdgeColoring c(n, colors);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) c.set_color(u, v, int(rng.next_below(std::uint64_t(colors))));
  return c;
}

}  // namespace bram
