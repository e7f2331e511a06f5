#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bram/bitrow.hpp"

namespace bram {

/// Finite bipartite graph with explicit left/right parts. Vertices are
/// 0-indexed per side; edges are ordered pairs (left, right) with set
/// semantics. Adjacency is one dense bit row per left vertex.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left, int right)
      : left_(check_side(left, "left")), right_(check_side(right, "right")),
        rows_(left, BitRow(right)) {}

  static BipartiteGraph complete(int a, int b) {
    BipartiteGraph g(a, b);
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) g.add_edge(u, v);
    return g;
  }

  static BipartiteGraph from_edges(int left, int right,
                                   const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g(left, right);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int left_size() const { return left_; }
  int right_size() const { return right_; }
  int edge_count() const { return edges_; }

  bool has_edge(int u, int v) const {
    check_vertex(u, v);
    return rows_[u].test(v);
  }

  void add_edge(int u, int v) {
    check_vertex(u, v);
    if (!rows_[u].test(v)) {
      rows_[u].set(v);
      ++edges_;
    }
  }

  void remove_edge(int u, int v) {
    check_vertex(u, v);
    if (rows_[u].test(v)) {
      rows_[u].reset(v);
      --edges_;
    }
  }

  const BitRow& row(int u) const { return rows_[u]; }

  int left_degree(int u) const { return rows_[u].count(); }

  int right_degree(int v) const {
    int d = 0;
    for (const auto& r : rows_) d += r.test(v);
    return d;
  }

  BipartiteGraph transposed() const {
    BipartiteGraph t(right_, left_);
    for (int u = 0; u < left_; ++u)
      for (int v = rows_[u].find_first(); v >= 0; v = rows_[u].find_next(v)) t.add_edge(v, u);
    return t;
  }

  /// Edges in canonical (u,v)-lexicographic order.
  std::vector<std::pair<int, int>> edges_lex() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < left_; ++u)
      for (int v = rows_[u].find_first(); v >= 0; v = rows_[u].find_next(v))
        out.emplace_back(u, v);
    return out;
  }

  bool operator==(const BipartiteGraph&) const = default;

 private:
  static int check_side(int n, const char* which) {
    if (n < 0) throw std::invalid_argument(std::string(which) + " size must be >= 0");
    return n;
  }
  void check_vertex(int u, int v) const {
    if (u < 0 || u >= left_ || v < 0 || v >= right_)
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") outside " + std::to_string(left_) + "x" + std::to_string(right_));
  }

  int left_ = 0, right_ = 0;
  std::vector<BitRow> rows_;
  int edges_ = 0;
};

/// Total assignment of one of num_colors colors to every edge of K_{N,N}.
/// Color 0 is red; the last color is blue / the distinguished color.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int n_host, int num_colors, int fill = 0)
      : n_(n_host), colors_(num_colors), cell_(std::size_t(n_host) * n_host, std::uint8_t(fill)) {
    if (n_host < 0) throw std::invalid_argument("host side must be >= 0");
    if (num_colors < 2) throw std::invalid_argument("num_colors must be >= 2");
    if (fill < 0 || fill >= num_colors) throw std::out_of_range("fill color out of range");
  }

  int host_side() const { return n_; }
  int num_colors() const { return colors_; }
  int blue_color() const { return colors_ - 1; }

  int color(int u, int v) const { return cell_[idx(u, v)]; }
  void set_color(int u, int v, int c) {
    if (c < 0 || c >= colors_) throw std::out_of_range("color index out of range");
    cell_[idx(u, v)] = std::uint8_t(c);
  }

  /// Spanning subgraph of K_{N,N} whose edges carry color i.
  BipartiteGraph color_class(int i) const {
    if (i < 0 || i >= colors_) throw std::out_of_range("color index out of range");
    BipartiteGraph g(n_, n_);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (cell_[idx(u, v)] == i) g.add_edge(u, v);
    return g;
  }

  bool operator==(const EdgeColoring&) const = default;

 private:
  std::size_t idx(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("edge outside host");
    return std::size_t(u) * n_ + v;
  }

  int n_ = 0, colors_ = 2;
  std::vector<std::uint8_t> cell_;
};

}  // namespace bram
