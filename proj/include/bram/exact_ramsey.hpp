#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bram/common.hpp"
#include "bram/graph.hpp"
#include "bram/pattern.hpp"

namespace bram {

struct SearchBudget {
  int n_max = 8;
  std::uint64_t node_limit = kNoLimit;
  std::uint64_t time_limit_ms = 0;  // 0 = no limit
  int workers = 1;
};

enum class SearchStatus { Found, None, Indeterminate };

struct ColoringSearchResult {
  SearchStatus status = SearchStatus::Indeterminate;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

struct BudgetHit {};
struct TaskLost {};  // a lexicographically earlier task already found a witness

/// Backtracking over total colorings of K_{N,N}, edge-major order, colors
/// ascending (so the first witness is the lexicographically least good
/// coloring). Canonical-form pruning keeps only colorings whose color rows
/// and columns are lexicographically non-decreasing; when cycle colors are
/// interchangeable they must additionally appear in first-use order. Every
/// coloring is equivalent to one of this form under the S_N x S_N x color
/// action, and the least good coloring itself has the form, so existence
/// and the returned witness are both preserved.
class ColoringDfs {
 public:
  using ForbiddenThrough = std::function<bool(int c, const BipartiteGraph&, int u, int v)>;
  using VerifyFull = std::function<bool(const std::vector<BipartiteGraph>&)>;

  ColoringDfs(int n, int num_colors, bool cycle_color_symmetry, ForbiddenThrough forbidden)
      : n_(n), colors_(num_colors), cycle_symmetry_(cycle_color_symmetry),
        forbidden_(std::move(forbidden)), coloring_(n, std::max(num_colors, 2)),
        row_state_(n, 0), col_state_(n, 0) {
    classes_.assign(colors_, BipartiteGraph(n, n));
  }

  struct Undo {
    int row = 0, col = 0, max_used = 0;
  };

  bool try_assign(int idx, int c, Undo& undo) {
    int u = idx / n_, v = idx % n_;
    if (cycle_symmetry_ && c < colors_ - 1 && c > max_cycle_used_ + 1) return false;
    if (u > 0 && row_state_[u] == 0 && c < coloring_.color(u - 1, v)) return false;
    if (v > 0 && col_state_[v] == 0 && c < coloring_.color(u, v - 1)) return false;
    classes_[c].add_edge(u, v);
    if (forbidden_(c, classes_[c], u, v)) {
      classes_[c].remove_edge(u, v);
      return false;
    }
    undo.row = row_state_[u];
    undo.col = col_state_[v];
    undo.max_used = max_cycle_used_;
    coloring_.set_color(u, v, c);
    if (u > 0 && row_state_[u] == 0 && c != coloring_.color(u - 1, v)) row_state_[u] = 1;
    if (v > 0 && col_state_[v] == 0 && c != coloring_.color(u, v - 1)) col_state_[v] = 1;
    if (c < colors_ - 1 && c > max_cycle_used_) max_cycle_used_ = c;
    return true;
  }

  void unassign(int idx, int c, const Undo& undo) {
    int u = idx / n_, v = idx % n_;
    classes_[c].remove_edge(u, v);
    row_state_[u] = undo.row;
    col_state_[v] = undo.col;
    max_cycle_used_ = undo.max_used;
  }

  int cells() const { return n_ * n_; }
  int num_colors() const { return colors_; }
  const EdgeColoring& coloring() const { return coloring_; }
  const std::vector<BipartiteGraph>& classes() const { return classes_; }

 private:
  int n_, colors_;
  bool cycle_symmetry_;
  ForbiddenThrough forbidden_;
  EdgeColoring coloring_;
  std::vector<BipartiteGraph> classes_;
  std::vector<int> row_state_, col_state_;
  int max_cycle_used_ = -1;
};

struct SharedSearchState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<long> best_found_task{std::numeric_limits<long>::max()};
  std::uint64_t node_limit = kNoLimit;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;

  void tick(long task_index) {
    std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > node_limit) throw BudgetHit{};
    if ((n & 2047) == 0) {
      if (has_deadline && std::chrono::steady_clock::now() > deadline) throw BudgetHit{};
      if (best_found_task.load(std::memory_order_relaxed) < task_index) throw TaskLost{};
    }
  }
};

inline bool coloring_dfs_run(ColoringDfs& dfs, int idx, SharedSearchState& shared,
                             long task_index, const ColoringDfs::VerifyFull& verify,
                             EdgeColoring& out) {
  shared.tick(task_index);
  if (idx == dfs.cells()) {
    if (!verify(dfs.classes()))
      throw IntegrityError("good-coloring candidate failed full pattern re-verification");
    out = dfs.coloring();
    return true;
  }
  for (int c = 0; c < dfs.num_colors(); ++c) {
    ColoringDfs::Undo undo;
    if (!dfs.try_assign(idx, c, undo)) continue;
    if (coloring_dfs_run(dfs, idx + 1, shared, task_index, verify, out)) return true;
    dfs.unassign(idx, c, undo);
  }
  return false;
}

struct ColoringProblem {
  int n = 1;
  int num_colors = 2;
  bool cycle_color_symmetry = false;
  ColoringDfs::ForbiddenThrough forbidden;
  ColoringDfs::VerifyFull verify;
};

/// Partition the search forest by the first `depth` cell assignments, then
/// run tasks on a small pool. The witness, when one exists, is the task-wise
/// first found with every earlier task exhausted, which reproduces the
/// sequential lexicographic order bit for bit at any worker count.
inline ColoringSearchResult search_good_coloring(const ColoringProblem& problem,
                                                 const SearchBudget& budget) {
  SharedSearchState shared;
  shared.node_limit = budget.node_limit;
  if (budget.time_limit_ms > 0) {
    shared.has_deadline = true;
    shared.deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.time_limit_ms);
  }

  int workers = std::max(1, budget.workers);
  int cells = problem.n * problem.n;
  // Fixed partition depth: the node accounting of an exhausted search must
  // not depend on the worker count.
  int depth = 0;
  long span = 1;
  while (depth < cells && span < 256) {
    span *= problem.num_colors;
    ++depth;
  }

  // Enumerate valid prefixes of length `depth` (lexicographic order).
  std::vector<std::vector<int>> prefixes;
  bool prefix_budget_hit = false;
  {
    ColoringDfs dfs(problem.n, problem.num_colors, problem.cycle_color_symmetry,
                    problem.forbidden);
    std::vector<int> cur;
    std::vector<ColoringDfs::Undo> undos(depth + 1);
    auto rec = [&](auto&& self, int idx) -> void {
      shared.tick(-1);
      if (idx == depth) {
        prefixes.push_back(cur);
        return;
      }
      for (int c = 0; c < problem.num_colors; ++c) {
        ColoringDfs::Undo undo;
        if (!dfs.try_assign(idx, c, undo)) continue;
        cur.push_back(c);
        self(self, idx + 1);
        cur.pop_back();
        dfs.unassign(idx, c, undo);
      }
    };
    try {
      if (depth == 0)
        prefixes.push_back({});
      else
        rec(rec, 0);
    } catch (const BudgetHit&) {
      prefix_budget_hit = true;
    }
  }
  if (prefix_budget_hit)
    return {SearchStatus::Indeterminate, std::nullopt, shared.nodes.load()};

  struct TaskResult {
    SearchStatus status = SearchStatus::None;
    std::optional<EdgeColoring> witness;
  };
  std::vector<TaskResult> results(prefixes.size());
  std::atomic<std::size_t> next_task{0};
  std::mutex error_mutex;
  std::string worker_error;

  auto run_worker = [&]() {
    try {
      for (;;) {
        std::size_t i = next_task.fetch_add(1);
        if (i >= prefixes.size()) return;
        if (shared.best_found_task.load() < long(i)) {
          results[i].status = SearchStatus::None;  // irrelevant to the merge
          continue;
        }
        ColoringDfs dfs(problem.n, problem.num_colors, problem.cycle_color_symmetry,
                        problem.forbidden);
        bool replay_ok = true;
        for (int idx = 0; idx < depth && replay_ok; ++idx) {
          ColoringDfs::Undo undo;
          replay_ok = dfs.try_assign(idx, prefixes[i][idx], undo);
        }
        if (!replay_ok) throw IntegrityError("prefix replay diverged");
        try {
          EdgeColoring found(problem.n, problem.num_colors);
          if (coloring_dfs_run(dfs, depth, shared, long(i), problem.verify, found)) {
            results[i].status = SearchStatus::Found;
            results[i].witness = std::move(found);
            long expect = shared.best_found_task.load();
            while (long(i) < expect &&
                   !shared.best_found_task.compare_exchange_weak(expect, long(i))) {
            }
          } else {
            results[i].status = SearchStatus::None;
          }
        } catch (const BudgetHit&) {
          results[i].status = SearchStatus::Indeterminate;
        } catch (const TaskLost&) {
          results[i].status = SearchStatus::None;  // a smaller task holds the witness
        }
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (worker_error.empty()) worker_error = e.what();
    }
  };

  if (workers == 1 || prefixes.size() <= 1) {
    run_worker();
  } else {
    std::vector<std::thread> pool;
    int nthreads = int(std::min<std::size_t>(workers, prefixes.size()));
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(run_worker);
    for (auto& th : pool) th.join();
  }
  if (!worker_error.empty()) throw IntegrityError(worker_error);

  ColoringSearchResult out;
  out.nodes = shared.nodes.load();
  long best = shared.best_found_task.load();
  if (best != std::numeric_limits<long>::max()) {
    out.status = SearchStatus::Found;
    out.witness = results[std::size_t(best)].witness;
    return out;
  }
  for (const auto& r : results)
    if (r.status == SearchStatus::Indeterminate) {
      out.status = SearchStatus::Indeterminate;
      return out;
    }
  out.status = SearchStatus::None;
  return out;
}

}  // namespace detail

/// Two-coloring of K_{N,N} with no red copy of g1 and no blue copy of g2,
/// or a definitive "none" once the pruned tree is exhausted. Budget
/// exhaustion yields Indeterminate, which is distinct from none.
inline ColoringSearchResult exists_good_coloring(const BipartiteGraph& g1,
                                                 const BipartiteGraph& g2, int n,
                                                 const SearchBudget& budget = {}) {
  if (n < 1) throw std::domain_error("host side must be >= 1");
  if (n > budget.n_max)
    throw ResourceError("host side exceeds budget (raise --nmax)");
  detail::ColoringProblem problem;
  problem.n = n;
  problem.num_colors = 2;
  problem.cycle_color_symmetry = false;
  problem.forbidden = [&g1, &g2](int c, const BipartiteGraph& cls, int u, int v) {
    return copy_through_edge(cls, c == 0 ? g1 : g2, u, v);
  };
  problem.verify = [&g1, &g2](const std::vector<BipartiteGraph>& classes) {
    return !find_subgraph_copy(classes[0], g1).has_value() &&
           !find_subgraph_copy(classes[1], g2).has_value();
  };
  return detail::search_good_coloring(problem, budget);
}

/// (k+1)-coloring of K_{N,N} with no C_{2t} in colors 0..k-1 and no K_{n,n}
/// in color k, or definitive none.
inline ColoringSearchResult exists_good_coloring_multi(int cycle_t, int k, int biclique_n, int n,
                                                       const SearchBudget& budget = {}) {
  if (cycle_t < 2) throw std::domain_error("cycle parameter t must be >= 2");
  if (k < 1) throw std::domain_error("number of cycle colors k must be >= 1");
  if (biclique_n < 1) throw std::domain_error("biclique side must be >= 1");
  if (n < 1) throw std::domain_error("host side must be >= 1");
  if (n > budget.n_max)
    throw ResourceError("host side exceeds budget (raise --nmax)");
  detail::ColoringProblem problem;
  problem.n = n;
  problem.num_colors = k + 1;
  problem.cycle_color_symmetry = true;
  problem.forbidden = [cycle_t, k, biclique_n](int c, const BipartiteGraph& cls, int u, int v) {
    if (c < k) return cycle_through_edge(cls, u, v, 2 * cycle_t);
    return biclique_through_edge(cls, u, v, biclique_n);
  };
  problem.verify = [cycle_t, k, biclique_n](const std::vector<BipartiteGraph>& classes) {
    for (int c = 0; c < k; ++c)
      if (find_even_cycle(classes[c], 2 * cycle_t)) return false;
    return !find_biclique(classes[k], biclique_n).has_value();
  };
  return detail::search_good_coloring(problem, budget);
}

struct BrResult {
  SearchStatus status = SearchStatus::Indeterminate;
  int value = 0;                             // defined when status == Found
  std::optional<EdgeColoring> witness_below; // good coloring at value-1
  std::uint64_t refutation_nodes = 0;        // nodes of the exhausted search at value
  int last_witnessed = 0;                    // largest N with a witness so far
};

/// Least N such that no good coloring of K_{N,N} exists, scanning upward
/// with a witness required at every smaller N.
inline BrResult br_exact(const BipartiteGraph& g1, const BipartiteGraph& g2,
                         const SearchBudget& budget = {}) {
  BrResult out;
  std::optional<EdgeColoring> last_witness;
  for (int n = 1; n <= budget.n_max; ++n) {
    ColoringSearchResult res = exists_good_coloring(g1, g2, n, budget);
    if (res.status == SearchStatus::Indeterminate) {
      out.status = SearchStatus::Indeterminate;
      out.last_witnessed = n - 1;
      return out;
    }
    if (res.status == SearchStatus::None) {
      out.status = SearchStatus::Found;
      out.value = n;
      out.witness_below = last_witness;
      out.refutation_nodes = res.nodes;
      out.last_witnessed = n - 1;
      return out;
    }
    last_witness = res.witness;
  }
  out.status = SearchStatus::Indeterminate;
  out.last_witnessed = budget.n_max;
  return out;
}

}  // namespace bram
