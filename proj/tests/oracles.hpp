// Test-side brute-force oracles. These stay independent of the search
// implementations they check: plain enumeration, no pruning, no sharing.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "bram/graph.hpp"

namespace oracles {

using bram::BipartiteGraph;
using bram::EdgeColoring;

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - int(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline bool contains_biclique(const BipartiteGraph& g, int s) {
  if (s > g.left_size() || s > g.right_size()) return false;
  for (const auto& ls : subsets_of_size(g.left_size(), s))
    for (const auto& rs : subsets_of_size(g.right_size(), s)) {
      bool all = true;
      for (int u : ls)
        for (int v : rs)
          if (!g.has_edge(u, v)) {
            all = false;
            break;
          }
      if (all) return true;
    }
  return false;
}

/// Exact-length even cycle by enumerating all alternating vertex sequences.
inline bool contains_cycle(const BipartiteGraph& g, int two_t) {
  int t = two_t / 2;
  if (t > g.left_size() || t > g.right_size()) return false;
  std::vector<int> seq;
  std::vector<char> usedl(g.left_size(), 0), usedr(g.right_size(), 0);
  std::function<bool()> rec = [&]() -> bool {
    int k = int(seq.size());
    if (k == two_t) return g.has_edge(seq[0], seq.back());
    if (k % 2 == 0) {
      for (int u = 0; u < g.left_size(); ++u) {
        if (usedl[u]) continue;
        if (k > 0 && !g.has_edge(u, seq.back())) continue;
        usedl[u] = 1;
        seq.push_back(u);
        if (rec()) return true;
        seq.pop_back();
        usedl[u] = 0;
      }
    } else {
      for (int v = 0; v < g.right_size(); ++v) {
        if (usedr[v]) continue;
        if (!g.has_edge(seq.back(), v)) continue;
        usedr[v] = 1;
        seq.push_back(v);
        if (rec()) return true;
        seq.pop_back();
        usedr[v] = 0;
      }
    }
    return false;
  };
  return rec();
}

/// Subgraph copy by enumerating every injection, both orientations.
inline bool contains_copy(const BipartiteGraph& host, const BipartiteGraph& pattern) {
  auto try_host = [&](const BipartiteGraph& h) {
    int pl = pattern.left_size(), pr = pattern.right_size();
    std::vector<int> ml(pl, -1), mr(pr, -1);
    std::vector<char> ul(h.left_size(), 0), ur(h.right_size(), 0);
    std::function<bool(int)> rec = [&](int a) -> bool {
      if (a == pl + pr) {
        for (auto [x, y] : pattern.edges_lex())
          if (!h.has_edge(ml[x], mr[y])) return false;
        return true;
      }
      bool left = a < pl;
      int limit = left ? h.left_size() : h.right_size();
      for (int w = 0; w < limit; ++w) {
        auto& used = left ? ul : ur;
        if (used[w]) continue;
        used[w] = 1;
        (left ? ml[a] : mr[a - pl]) = w;
        if (rec(a + 1)) return true;
        used[w] = 0;
      }
      return false;
    };
    if (pl > h.left_size() || pr > h.right_size()) return false;
    return rec(0);
  };
  // isolated pattern vertices are irrelevant for containment once the host
  // is large enough on both sides; keep the oracle literal and simple
  return try_host(host) || try_host(host.transposed());
}

/// Max edges over every subgraph of K_{r,r} avoiding `forbidden`. 2^(r^2)
/// masks; keep r <= 4.
inline int z_by_full_enumeration(int r, const std::function<bool(const BipartiteGraph&)>& forbidden) {
  int best = -1;
  for (long long mask = 0; mask < (1LL << (r * r)); ++mask) {
    BipartiteGraph g(r, r);
    for (int i = 0; i < r * r; ++i)
      if (mask >> i & 1) g.add_edge(i / r, i % r);
    if (forbidden(g)) continue;
    best = std::max(best, g.edge_count());
  }
  return best;
}

/// All 2^(N^2) two-colorings in lexicographic (edge-major, red-first) order;
/// returns the first good one, if any.
inline std::optional<EdgeColoring> lex_min_good_coloring(
    const BipartiteGraph& g1, const BipartiteGraph& g2, int n) {
  for (long long mask = 0; mask < (1LL << (n * n)); ++mask) {
    EdgeColoring c(n, 2);
    for (int i = 0; i < n * n; ++i)
      c.set_color(i / n, i % n, int(mask >> (n * n - 1 - i) & 1));
    if (contains_copy(c.color_class(0), g1)) continue;
    if (contains_copy(c.color_class(1), g2)) continue;
    return c;
  }
  return std::nullopt;
}

}  // namespace oracles
