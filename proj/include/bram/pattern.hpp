#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bram/common.hpp"
#include "bram/graph.hpp"

namespace bram {

enum class WitnessKind { Biclique, Cycle, Generic };

/// Explicit witness for a pattern found in a host graph. Every claimed edge
/// re-checks against the host edge set in O(pattern edges).
struct PatternWitness {
  WitnessKind kind = WitnessKind::Generic;

  // Biclique: the two vertex sets, ascending.
  std::vector<int> left;
  std::vector<int> right;

  // Cycle: vertices in traversal order; even positions are left indices,
  // odd positions right indices, and the closing edge returns to cycle[0].
  std::vector<int> cycle;

  // Generic copy: pattern-left/right vertex -> host vertex (-1 for pattern
  // vertices that were ignored as isolated). With flipped=false, map_left
  // lands on host-left and map_right on host-right; flipped swaps the sides.
  std::vector<int> map_left;
  std::vector<int> map_right;
  bool flipped = false;
};

inline bool verify_biclique(const BipartiteGraph& host, const PatternWitness& w) {
  if (w.kind != WitnessKind::Biclique) return false;
  for (int u : w.left)
    for (int v : w.right) {
      if (u < 0 || u >= host.left_size() || v < 0 || v >= host.right_size()) return false;
      if (!host.has_edge(u, v)) return false;
    }
  std::vector<int> l = w.left, r = w.right;
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return std::adjacent_find(l.begin(), l.end()) == l.end() &&
         std::adjacent_find(r.begin(), r.end()) == r.end();
}

inline bool verify_cycle(const BipartiteGraph& host, const PatternWitness& w, int two_t) {
  if (w.kind != WitnessKind::Cycle) return false;
  if (int(w.cycle.size()) != two_t || two_t < 4 || two_t % 2 != 0) return false;
  std::vector<int> lefts, rights;
  for (int i = 0; i < two_t; ++i) {
    int a = w.cycle[i], b = w.cycle[(i + 1) % two_t];
    int u = (i % 2 == 0) ? a : b;  // left endpoint of edge i
    int v = (i % 2 == 0) ? b : a;
    if (u < 0 || u >= host.left_size() || v < 0 || v >= host.right_size()) return false;
    if (!host.has_edge(u, v)) return false;
    (i % 2 == 0 ? lefts : rights).push_back(w.cycle[i]);
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  return std::adjacent_find(lefts.begin(), lefts.end()) == lefts.end() &&
         std::adjacent_find(rights.begin(), rights.end()) == rights.end();
}

inline bool verify_copy(const BipartiteGraph& host, const BipartiteGraph& pattern,
                        const PatternWitness& w) {
  if (w.kind != WitnessKind::Generic) return false;
  if (int(w.map_left.size()) != pattern.left_size() ||
      int(w.map_right.size()) != pattern.right_size())
    return false;
  std::vector<int> used_l, used_r;
  for (int a = 0; a < pattern.left_size(); ++a)
    if (w.map_left[a] >= 0) (w.flipped ? used_r : used_l).push_back(w.map_left[a]);
  for (int b = 0; b < pattern.right_size(); ++b)
    if (w.map_right[b] >= 0) (w.flipped ? used_l : used_r).push_back(w.map_right[b]);
  std::sort(used_l.begin(), used_l.end());
  std::sort(used_r.begin(), used_r.end());
  if (std::adjacent_find(used_l.begin(), used_l.end()) != used_l.end()) return false;
  if (std::adjacent_find(used_r.begin(), used_r.end()) != used_r.end()) return false;
  for (auto [a, b] : pattern.edges_lex()) {
    int x = w.map_left[a], y = w.map_right[b];
    if (x < 0 || y < 0) return false;
    int u = w.flipped ? y : x;
    int v = w.flipped ? x : y;
    if (u < 0 || u >= host.left_size() || v < 0 || v >= host.right_size()) return false;
    if (!host.has_edge(u, v)) return false;
  }
  return true;
}

struct BicliqueSearchResult {
  std::optional<PatternWitness> witness;
  bool exhausted = true;  // false when the node budget ran out first
  std::uint64_t nodes = 0;
};

namespace detail {

inline bool biclique_rec(const BipartiteGraph& g, int s, int start, std::vector<int>& chosen,
                         const BitRow& inter, BicliqueSearchResult& out,
                         std::uint64_t node_limit) {
  if (++out.nodes > node_limit) {
    out.exhausted = false;
    return true;  // stop descending
  }
  if (int(chosen.size()) == s) {
    PatternWitness w;
    w.kind = WitnessKind::Biclique;
    w.left = chosen;
    for (int v = inter.find_first(); v >= 0 && int(w.right.size()) < s; v = inter.find_next(v))
      w.right.push_back(v);
    out.witness = std::move(w);
    return true;
  }
  int need = s - int(chosen.size());
  for (int u = start; u + need <= g.left_size(); ++u) {
    BitRow ni = inter;
    if (chosen.empty())
      ni = g.row(u);
    else
      ni &= g.row(u);
    if (ni.count() < s) continue;
    chosen.push_back(u);
    if (biclique_rec(g, s, u + 1, chosen, ni, out, node_limit)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Biclique search with a node budget. Left subsets are scanned in
/// lexicographic order with intersection-popcount pruning, so the witness
/// returned is the lexicographically least (left set, then right set).
inline BicliqueSearchResult find_biclique_budgeted(const BipartiteGraph& g, int s,
                                                   std::uint64_t node_limit = kNoLimit) {
  if (s < 1) throw std::invalid_argument("biclique side must be >= 1");
  BicliqueSearchResult out;
  std::vector<int> chosen;
  BitRow inter(g.right_size());
  detail::biclique_rec(g, s, 0, chosen, inter, out, node_limit);
  return out;
}

/// Whether g contains K_{s,s}; witness is the lexicographically least pair.
inline std::optional<PatternWitness> find_biclique(const BipartiteGraph& g, int s) {
  return find_biclique_budgeted(g, s).witness;
}

namespace detail {

/// Depth-bounded DFS for a cycle of exactly two_t vertices starting at left
/// vertex `a`; all other left vertices on the path must exceed `a`, so each
/// cycle is generated from its least left vertex only.
inline bool cycle_rec(const BipartiteGraph& g, int two_t, int a, std::vector<int>& path,
                      std::vector<char>& visl, std::vector<char>& visr) {
  int depth = int(path.size());
  if (depth == two_t) return g.has_edge(a, path.back());
  if (depth % 2 == 1) {
    // last placed vertex is left: place a right vertex
    int u = path.back();
    const BitRow& r = g.row(u);
    for (int w = r.find_first(); w >= 0; w = r.find_next(w)) {
      if (visr[w]) continue;
      if (depth == two_t - 1 && !g.has_edge(a, w)) continue;  // must close
      visr[w] = 1;
      path.push_back(w);
      if (cycle_rec(g, two_t, a, path, visl, visr)) return true;
      path.pop_back();
      visr[w] = 0;
    }
  } else {
    // last placed vertex is right: place a left vertex > a
    int w = path.back();
    for (int u = a + 1; u < g.left_size(); ++u) {
      if (visl[u] || !g.has_edge(u, w)) continue;
      visl[u] = 1;
      path.push_back(u);
      if (cycle_rec(g, two_t, a, path, visl, visr)) return true;
      path.pop_back();
      visl[u] = 0;
    }
  }
  return false;
}

}  // namespace detail

/// Cycle of exactly two_t vertices (two_t even, >= 4), or nothing.
inline std::optional<PatternWitness> find_even_cycle(const BipartiteGraph& g, int two_t) {
  if (two_t < 4 || two_t % 2 != 0)
    throw std::invalid_argument("cycle length must be even and >= 4");
  if (two_t / 2 > std::min(g.left_size(), g.right_size())) return std::nullopt;
  std::vector<char> visl(g.left_size(), 0), visr(g.right_size(), 0);
  for (int a = 0; a < g.left_size(); ++a) {
    std::vector<int> path{a};
    visl[a] = 1;
    if (detail::cycle_rec(g, two_t, a, path, visl, visr)) {
      PatternWitness w;
      w.kind = WitnessKind::Cycle;
      w.cycle = std::move(path);
      return w;
    }
    visl[a] = 0;
  }
  return std::nullopt;
}

namespace detail {

struct CopySearch {
  const BipartiteGraph* host;         // oriented host (transposed when flipped)
  const BipartiteGraph* pattern;
  std::vector<std::pair<int, int>> order;  // (side, index); side 0 = pattern left
  std::vector<int> map_l, map_r;
  std::vector<char> used_l, used_r;

  bool assign(std::size_t k) {
    if (k == order.size()) return true;
    auto [side, a] = order[k];
    auto& mp = side == 0 ? map_l : map_r;
    auto& used = side == 0 ? used_l : used_r;
    int limit = side == 0 ? host->left_size() : host->right_size();
    for (int w = 0; w < limit; ++w) {
      if (used[w]) continue;
      if (!consistent(side, a, w)) continue;
      mp[a] = w;
      used[w] = 1;
      if (assign(k + 1)) return true;
      used[w] = 0;
      mp[a] = -1;
    }
    return false;
  }

  bool consistent(int side, int a, int w) const {
    if (side == 0) {
      for (int b = pattern->row(a).find_first(); b >= 0; b = pattern->row(a).find_next(b))
        if (map_r[b] >= 0 && !host->has_edge(w, map_r[b])) return false;
    } else {
      for (int u = 0; u < pattern->left_size(); ++u)
        if (pattern->has_edge(u, a) && map_l[u] >= 0 && !host->has_edge(map_l[u], w)) return false;
    }
    return true;
  }
};

/// Pattern vertex order: BFS from the highest-degree vertex of each
/// component, so each placement after the first is edge-constrained.
inline std::vector<std::pair<int, int>> copy_order(const BipartiteGraph& p) {
  int L = p.left_size(), R = p.right_size();
  auto deg = [&](int side, int i) { return side == 0 ? p.left_degree(i) : p.right_degree(i); };
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < L; ++i)
    if (p.left_degree(i) > 0) all.emplace_back(0, i);
  for (int i = 0; i < R; ++i)
    if (p.right_degree(i) > 0) all.emplace_back(1, i);
  std::stable_sort(all.begin(), all.end(), [&](auto x, auto y) {
    return deg(x.first, x.second) > deg(y.first, y.second);
  });
  std::vector<std::pair<int, int>> order;
  std::vector<char> seen_l(L, 0), seen_r(R, 0);
  for (auto root : all) {
    if ((root.first == 0 ? seen_l : seen_r)[root.second]) continue;
    std::vector<std::pair<int, int>> queue{root};
    (root.first == 0 ? seen_l : seen_r)[root.second] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto [side, i] = queue[h];
      order.push_back(queue[h]);
      if (side == 0) {
        for (int b = p.row(i).find_first(); b >= 0; b = p.row(i).find_next(b))
          if (!seen_r[b]) {
            seen_r[b] = 1;
            queue.emplace_back(1, b);
          }
      } else {
        for (int u = 0; u < L; ++u)
          if (p.has_edge(u, i) && !seen_l[u]) {
            seen_l[u] = 1;
            queue.emplace_back(0, u);
          }
      }
    }
  }
  return order;
}

inline std::optional<PatternWitness> copy_in_orientation(const BipartiteGraph& host,
                                                         const BipartiteGraph& pattern,
                                                         bool flipped) {
  BipartiteGraph t;
  const BipartiteGraph* h = &host;
  if (flipped) {
    t = host.transposed();
    h = &t;
  }
  CopySearch cs;
  cs.host = h;
  cs.pattern = &pattern;
  cs.order = copy_order(pattern);
  cs.map_l.assign(pattern.left_size(), -1);
  cs.map_r.assign(pattern.right_size(), -1);
  cs.used_l.assign(h->left_size(), 0);
  cs.used_r.assign(h->right_size(), 0);
  if (!cs.assign(0)) return std::nullopt;
  PatternWitness w;
  w.kind = WitnessKind::Generic;
  w.map_left = std::move(cs.map_l);
  w.map_right = std::move(cs.map_r);
  w.flipped = flipped;
  return w;
}

}  // namespace detail

/// Injection of the pattern into the host mapping pattern edges onto host
/// edges. Both global orientations are tried (hosts are side-symmetric).
/// Isolated pattern vertices are ignored; their map entries stay -1.
inline std::optional<PatternWitness> find_subgraph_copy(const BipartiteGraph& host,
                                                        const BipartiteGraph& pattern) {
  if (auto w = detail::copy_in_orientation(host, pattern, false)) return w;
  if (auto w = detail::copy_in_orientation(host, pattern, true)) return w;
  return std::nullopt;
}

/// Does adding nothing further, g contain a K_{s,s} whose edge set includes
/// (u,v)? Used for incremental checks where (u,v) is the newest edge.
inline bool biclique_through_edge(const BipartiteGraph& g, int u, int v, int s) {
  if (s < 1) throw std::invalid_argument("biclique side must be >= 1");
  if (!g.has_edge(u, v)) return false;
  // Choose s-1 further left vertices adjacent to v; their common right
  // neighborhood with u must reach s (it always contains v).
  std::vector<int> cands;
  for (int x = 0; x < g.left_size(); ++x)
    if (x != u && g.has_edge(x, v)) cands.push_back(x);
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start, const BitRow& inter) -> bool {
    if (int(pick.size()) == s - 1) return inter.count() >= s;
    for (std::size_t i = start; i + (s - 1 - pick.size()) <= cands.size(); ++i) {
      BitRow ni = inter;
      ni &= g.row(cands[i]);
      if (ni.count() < s) continue;
      pick.push_back(cands[i]);
      if (self(self, i + 1, ni)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0, g.row(u));
}

namespace detail {

inline bool cycle_through_rec(const BipartiteGraph& g, int u0, int target_len,
                              std::vector<char>& visl, std::vector<char>& visr, int cur,
                              bool cur_left, int len) {
  // Walk from the right endpoint back toward u0; `len` edges placed so far
  // (the seed edge counts as one).
  if (len == target_len - 1) {
    // cur must be right-side here (even cycle), and needs an edge to u0.
    return !cur_left && g.has_edge(u0, cur);
  }
  if (cur_left) {
    const BitRow& r = g.row(cur);
    for (int w = r.find_first(); w >= 0; w = r.find_next(w)) {
      if (visr[w]) continue;
      visr[w] = 1;
      if (cycle_through_rec(g, u0, target_len, visl, visr, w, false, len + 1)) return true;
      visr[w] = 0;
    }
  } else {
    for (int x = 0; x < g.left_size(); ++x) {
      if (visl[x] || !g.has_edge(x, cur)) continue;
      visl[x] = 1;
      if (cycle_through_rec(g, u0, target_len, visl, visr, x, true, len + 1)) return true;
      visl[x] = 0;
    }
  }
  return false;
}

}  // namespace detail

/// Does g contain a cycle of exactly two_t vertices through edge (u,v)?
inline bool cycle_through_edge(const BipartiteGraph& g, int u, int v, int two_t) {
  if (two_t < 4 || two_t % 2 != 0)
    throw std::invalid_argument("cycle length must be even and >= 4");
  if (!g.has_edge(u, v)) return false;
  std::vector<char> visl(g.left_size(), 0), visr(g.right_size(), 0);
  visl[u] = 1;
  visr[v] = 1;
  // Path of two_t-1 further edges from v back to u, avoiding reuse of (u,v)
  // (it cannot be reused: both endpoints are marked visited).
  for (int x = 0; x < g.left_size(); ++x) {
    if (visl[x] || !g.has_edge(x, v)) continue;
    visl[x] = 1;
    if (detail::cycle_through_rec(g, u, two_t, visl, visr, x, true, 2)) return true;
    visl[x] = 0;
  }
  return false;
}

/// Does the host contain a copy of the pattern that uses host edge (u,v)?
inline bool copy_through_edge(const BipartiteGraph& host, const BipartiteGraph& pattern, int u,
                              int v) {
  if (!host.has_edge(u, v)) return false;
  auto edges = pattern.edges_lex();
  if (edges.empty()) return false;
  for (int flip = 0; flip < 2; ++flip) {
    BipartiteGraph t;
    const BipartiteGraph* h = &host;
    int hu = u, hv = v;
    if (flip) {
      t = host.transposed();
      h = &t;
      hu = v;
      hv = u;
    }
    for (auto [a, b] : edges) {
      detail::CopySearch cs;
      cs.host = h;
      cs.pattern = &pattern;
      cs.map_l.assign(pattern.left_size(), -1);
      cs.map_r.assign(pattern.right_size(), -1);
      cs.used_l.assign(h->left_size(), 0);
      cs.used_r.assign(h->right_size(), 0);
      if (!cs.consistent(0, a, hu)) continue;
      cs.map_l[a] = hu;
      cs.used_l[hu] = 1;
      if (!cs.consistent(1, b, hv)) continue;
      cs.map_r[b] = hv;
      cs.used_r[hv] = 1;
      auto full = detail::copy_order(pattern);
      cs.order.clear();
      for (auto sv : full)
        if (!(sv.first == 0 && sv.second == a) && !(sv.first == 1 && sv.second == b))
          cs.order.push_back(sv);
      if (cs.assign(0)) return true;
    }
  }
  return false;
}

}  // namespace bram
