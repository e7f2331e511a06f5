#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bram/common.hpp"
#include "bram/graph.hpp"
#include "bram/pattern.hpp"
#include "bram/serialize.hpp"

namespace bram {

// Threshold comparisons guard against the last float bit; acceptance
// fixtures keep m a perfect square so the guards never decide anything.
inline constexpr double kThresholdGuard = 1e-9;

/// ceil(m/2 + 29 t sqrt(m) / 2): host side big enough for the greedy
/// embedding argument.
inline long long host_size(long long m, int t) {
  if (m < 1) throw std::domain_error("host_size requires m >= 1 (no isolated vertices)");
  if (t < 2) throw std::domain_error("host_size requires t >= 2");
  double x = 0.5 * double(m) + 14.5 * double(t) * std::sqrt(double(m));
  return (long long)std::ceil(x - kThresholdGuard);
}

struct EmbedConfig {
  int t = 2;
  long long m = 1;
  double c0 = 0.25;  // phase-1 biclique constant; configurable, unspecified upstream
  bool apply_pruning = true;
  bool use_phase1 = true;
  std::uint64_t phase1_node_budget = 200000;

  void validate() const {
    if (m < 1) throw std::domain_error("embed config requires m >= 1");
    if (t < 2) throw std::domain_error("embed config requires t >= 2");
    if (!(c0 > 0)) throw std::domain_error("embed config requires c0 > 0");
  }
  double prune_threshold() const { return 7.0 * double(t) * std::sqrt(double(m)); }
  double lemma_edge_threshold() const { return 6.0 * double(t) * std::sqrt(double(m)); }
};

struct HighDegreeSet {
  std::vector<int> left, right;
  bool reaches_sqrt_m = false;
  int size() const { return int(left.size() + right.size()); }
};

/// Vertices of both sides whose red degree is at least 7 t sqrt(m), plus the
/// branch test |W0| >= sqrt(m).
inline HighDegreeSet high_red_degree_set(const EdgeColoring& c, int t, long long m) {
  if (c.num_colors() != 2) throw std::invalid_argument("high_red_degree_set requires a 2-coloring");
  EmbedConfig cfg;
  cfg.t = t;
  cfg.m = m;
  cfg.validate();
  double thresh = cfg.prune_threshold() - kThresholdGuard;
  int n = c.host_side();
  HighDegreeSet out;
  std::vector<int> right_deg(n, 0);
  for (int u = 0; u < n; ++u) {
    int d = 0;
    for (int v = 0; v < n; ++v)
      if (c.color(u, v) == 0) {
        ++d;
        ++right_deg[v];
      }
    if (double(d) >= thresh) out.left.push_back(u);
  }
  for (int v = 0; v < n; ++v)
    if (double(right_deg[v]) >= thresh) out.right.push_back(v);
  out.reaches_sqrt_m = double(out.size()) >= std::sqrt(double(m)) - kThresholdGuard;
  return out;
}

/// Injection of the target into the host; image_left[i] is the host vertex
/// carrying target-left vertex i (host side depends on flipped).
struct Embedding {
  std::vector<int> image_left, image_right;
  bool flipped = false;
};

/// Failure state of the greedy embedder at the first unembeddable vertex.
struct StuckReport {
  int step_r = 0;                     // vertices embedded before the failure
  std::vector<int> w_prime;           // images of the embedded neighbors
  long long red_degree_sum = 0;       // D, within the pruned host
  long long unused_count = 0;         // candidate-side unpruned unused hosts
  bool flipped = false;
  int candidate_side = 0;             // 0 = host left, 1 = host right
  int failing_vertex = 0;             // target vertex id (left block then right block)
  std::vector<int> used_left, used_right;
  bool pruning_applied = false;
  std::vector<int> pruned_left, pruned_right;
  int t = 2;
  long long m = 1;
};

struct EmbedOutcome {
  std::optional<Embedding> embedding;
  std::optional<StuckReport> stuck;
  bool structural_failure = false;
  std::string note;
};

struct GreedyOptions {
  // Phase-1 seat: a blue biclique (host coordinates) receiving the top
  // degree vertices of each target side before the greedy walk starts.
  const PatternWitness* blue_biclique = nullptr;
};

namespace detail {

struct HostView {
  const EdgeColoring* c;
  int n;
  std::vector<char> pruned_l, pruned_r;

  bool is_blue(int hl, int hr) const { return c->color(hl, hr) == c->num_colors() - 1; }
  bool is_red(int hl, int hr) const { return c->color(hl, hr) == 0; }

  long long red_degree_unpruned(int side, int idx) const {
    long long d = 0;
    if (side == 0) {
      for (int v = 0; v < n; ++v)
        if (!pruned_r[v] && is_red(idx, v)) ++d;
    } else {
      for (int u = 0; u < n; ++u)
        if (!pruned_l[u] && is_red(u, idx)) ++d;
    }
    return d;
  }
};

/// Target vertices in non-increasing degree order, ties by id (left block
/// before right block).
inline std::vector<int> degree_order(const BipartiteGraph& g) {
  int L = g.left_size(), R = g.right_size();
  std::vector<int> order(L + R);
  for (int i = 0; i < L + R; ++i) order[i] = i;
  auto deg = [&](int id) { return id < L ? g.left_degree(id) : g.right_degree(id - L); };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg(x) > deg(y); });
  return order;
}

}  // namespace detail

/// Greedy blue embedding in non-increasing target-degree order; host
/// candidates are scanned in ascending index. Both global orientations are
/// attempted; on double failure the report of the attempt that got further
/// is returned (tie: the unflipped one).
inline EmbedOutcome greedy_blue_embed(const EdgeColoring& c, const BipartiteGraph& g,
                                      const EmbedConfig& config, const GreedyOptions& opts = {}) {
  if (c.num_colors() != 2) throw std::invalid_argument("greedy_blue_embed requires a 2-coloring");
  config.validate();
  int n = c.host_side();
  int L = g.left_size(), R = g.right_size();

  detail::HostView host;
  host.c = &c;
  host.n = n;
  host.pruned_l.assign(n, 0);
  host.pruned_r.assign(n, 0);
  std::vector<int> pruned_left, pruned_right;
  if (config.apply_pruning) {
    HighDegreeSet w0 = high_red_degree_set(c, config.t, config.m);
    for (int u : w0.left) host.pruned_l[u] = 1;
    for (int v : w0.right) host.pruned_r[v] = 1;
    pruned_left = w0.left;
    pruned_right = w0.right;
  }
  int avail_l = n - int(pruned_left.size());
  int avail_r = n - int(pruned_right.size());

  std::vector<int> order = detail::degree_order(g);

  auto attempt = [&](bool flipped) -> EmbedOutcome {
    EmbedOutcome out;
    int host_l_for_gl = flipped ? 1 : 0;  // host side receiving target-left
    int cap_gl = flipped ? avail_r : avail_l;
    int cap_gr = flipped ? avail_l : avail_r;
    if (L > cap_gl || R > cap_gr) {
      out.structural_failure = true;
      out.note = "target larger than the pruned host";
      return out;
    }
    std::vector<int> img_l(L, -1), img_r(R, -1);
    std::vector<char> used_l(n, 0), used_r(n, 0);
    int embedded = 0;

    auto host_used = [&](int side) -> std::vector<char>& { return side == 0 ? used_l : used_r; };
    auto host_pruned = [&](int side) -> std::vector<char>& {
      return side == 0 ? host.pruned_l : host.pruned_r;
    };

    // Phase-1 presets: top-degree target vertices of each side into the
    // blue biclique.
    std::vector<char> preset(L + R, 0);
    if (opts.blue_biclique) {
      const auto& bic = *opts.blue_biclique;
      const std::vector<int>& seat_for_gl = flipped ? bic.right : bic.left;
      const std::vector<int>& seat_for_gr = flipped ? bic.left : bic.right;
      std::vector<int> lefts, rights;
      for (int id : order) (id < L ? lefts : rights).push_back(id);
      int take_l = std::min(int(seat_for_gl.size()), L);
      int take_r = std::min(int(seat_for_gr.size()), R);
      for (int i = 0; i < take_l; ++i) {
        int gl = lefts[i], w = seat_for_gl[i];
        img_l[gl] = w;
        host_used(host_l_for_gl)[w] = 1;
        preset[gl] = 1;
        ++embedded;
      }
      for (int i = 0; i < take_r; ++i) {
        int gr = rights[i], w = seat_for_gr[i];
        img_r[gr] = w;
        host_used(1 - host_l_for_gl)[w] = 1;
        preset[L + gr] = 1;
        ++embedded;
      }
    }

    for (int id : order) {
      if (preset[id]) continue;
      bool is_left = id < L;
      int gidx = is_left ? id : id - L;
      int cand_side = is_left ? host_l_for_gl : 1 - host_l_for_gl;
      // images of already-embedded neighbors
      std::vector<int> w_prime;
      if (is_left) {
        for (int b = g.row(gidx).find_first(); b >= 0; b = g.row(gidx).find_next(b))
          if (img_r[b] >= 0) w_prime.push_back(img_r[b]);
      } else {
        for (int u = 0; u < L; ++u)
          if (g.has_edge(u, gidx) && img_l[u] >= 0) w_prime.push_back(img_l[u]);
      }
      std::sort(w_prime.begin(), w_prime.end());

      int chosen = -1;
      for (int w = 0; w < n && chosen < 0; ++w) {
        if (host_pruned(cand_side)[w] || host_used(cand_side)[w]) continue;
        bool ok = true;
        for (int y : w_prime) {
          int hl = cand_side == 0 ? w : y;
          int hr = cand_side == 0 ? y : w;
          if (!host.is_blue(hl, hr)) {
            ok = false;
            break;
          }
        }
        if (ok) chosen = w;
      }
      if (chosen < 0) {
        StuckReport rep;
        rep.step_r = embedded;
        rep.w_prime = w_prime;
        for (int y : w_prime) rep.red_degree_sum += host.red_degree_unpruned(1 - cand_side, y);
        for (int w = 0; w < n; ++w)
          if (!host_pruned(cand_side)[w] && !host_used(cand_side)[w]) ++rep.unused_count;
        rep.flipped = flipped;
        rep.candidate_side = cand_side;
        rep.failing_vertex = id;
        for (int w = 0; w < n; ++w) {
          if (used_l[w]) rep.used_left.push_back(w);
          if (used_r[w]) rep.used_right.push_back(w);
        }
        rep.pruning_applied = config.apply_pruning;
        rep.pruned_left = pruned_left;
        rep.pruned_right = pruned_right;
        rep.t = config.t;
        rep.m = config.m;
        out.stuck = std::move(rep);
        return out;
      }
      (is_left ? img_l[gidx] : img_r[gidx]) = chosen;
      host_used(cand_side)[chosen] = 1;
      ++embedded;
    }
    Embedding emb;
    emb.image_left = std::move(img_l);
    emb.image_right = std::move(img_r);
    emb.flipped = flipped;
    out.embedding = std::move(emb);
    return out;
  };

  EmbedOutcome first = attempt(false);
  if (first.embedding) return first;
  EmbedOutcome second = attempt(true);
  if (second.embedding) return second;
  if (first.structural_failure && second.structural_failure) return first;
  if (first.structural_failure) return second;
  if (second.structural_failure) return first;
  return second.stuck->step_r > first.stuck->step_r ? second : first;
}

/// Every target edge must land on a blue host edge under an injective,
/// side-respecting map.
inline bool verify_embedding(const EdgeColoring& c, const BipartiteGraph& g, const Embedding& emb) {
  int n = c.host_side();
  int L = g.left_size(), R = g.right_size();
  if (int(emb.image_left.size()) != L || int(emb.image_right.size()) != R) return false;
  std::vector<char> used_l(n, 0), used_r(n, 0);
  auto claim = [&](int side, int w) {
    if (w < 0 || w >= n) return false;
    auto& used = side == 0 ? used_l : used_r;
    if (used[w]) return false;
    used[w] = 1;
    return true;
  };
  for (int u = 0; u < L; ++u)
    if (!claim(emb.flipped ? 1 : 0, emb.image_left[u])) return false;
  for (int v = 0; v < R; ++v)
    if (!claim(emb.flipped ? 0 : 1, emb.image_right[v])) return false;
  for (auto [u, v] : g.edges_lex()) {
    int hl = emb.flipped ? emb.image_right[v] : emb.image_left[u];
    int hr = emb.flipped ? emb.image_left[u] : emb.image_right[v];
    if (c.color(hl, hr) != c.num_colors() - 1) return false;
  }
  return true;
}

struct StuckDiagnostics {
  long long recomputed_d = 0;
  bool observation_holds = false;   // every unused candidate-side host red-hits W'
  bool degree_cap_holds = false;    // D <= 7 t sqrt(m) |W'|
  bool obs_lower_holds = false;     // D >= unused_count
  bool degree_sum_holds = false;    // r |W'| <= 2m
  int case_id = 0;                  // 1: r <= m/2, 2: m/2 < r <= m, 0 otherwise
  double w_prime_upper = 0;         // 2m / r (degree-sum cap on |W'|)
  bool contradiction_pattern = false;  // case 2 with |W'| >= 8
};

/// Independent recount of a stuck report against the coloring it came from.
/// Tampered numbers raise IntegrityError; the named inequalities are
/// evaluated and reported, never assumed.
inline StuckDiagnostics stuck_diagnostics(const StuckReport& rep, const EdgeColoring& c,
                                          const EmbedConfig& config) {
  config.validate();
  if (c.num_colors() != 2) throw std::invalid_argument("stuck_diagnostics requires a 2-coloring");
  if (rep.t != config.t || rep.m != config.m)
    throw IntegrityError("stuck report does not match the supplied config");
  int n = c.host_side();
  auto in_range = [n](const std::vector<int>& xs) {
    for (int x : xs)
      if (x < 0 || x >= n) return false;
    return true;
  };
  if (!in_range(rep.w_prime) || !in_range(rep.used_left) || !in_range(rep.used_right) ||
      !in_range(rep.pruned_left) || !in_range(rep.pruned_right) || rep.candidate_side < 0 ||
      rep.candidate_side > 1)
    throw IntegrityError("stuck report contains out-of-range vertices");

  detail::HostView host;
  host.c = &c;
  host.n = n;
  host.pruned_l.assign(n, 0);
  host.pruned_r.assign(n, 0);
  if (rep.pruning_applied) {
    HighDegreeSet w0 = high_red_degree_set(c, config.t, config.m);
    if (w0.left != rep.pruned_left || w0.right != rep.pruned_right)
      throw IntegrityError("stuck report pruned set does not match the coloring");
    for (int u : w0.left) host.pruned_l[u] = 1;
    for (int v : w0.right) host.pruned_r[v] = 1;
  } else if (!rep.pruned_left.empty() || !rep.pruned_right.empty()) {
    throw IntegrityError("stuck report lists pruned vertices but pruning was not applied");
  }

  if (int(rep.step_r) != int(rep.used_left.size() + rep.used_right.size()))
    throw IntegrityError("stuck report step index does not match its used sets");
  const std::vector<int>& used_opp = rep.candidate_side == 0 ? rep.used_right : rep.used_left;
  for (int y : rep.w_prime)
    if (std::find(used_opp.begin(), used_opp.end(), y) == used_opp.end())
      throw IntegrityError("stuck report W' is not contained in the used image");

  StuckDiagnostics diag;
  for (int y : rep.w_prime)
    diag.recomputed_d += host.red_degree_unpruned(1 - rep.candidate_side, y);
  if (diag.recomputed_d != rep.red_degree_sum)
    throw IntegrityError("stuck report red-degree sum does not recompute");

  std::vector<char> used(n, 0);
  for (int w : rep.candidate_side == 0 ? rep.used_left : rep.used_right) used[w] = 1;
  const std::vector<char>& pruned = rep.candidate_side == 0 ? host.pruned_l : host.pruned_r;
  long long unused = 0;
  bool obs = true;
  for (int w = 0; w < n; ++w) {
    if (pruned[w] || used[w]) continue;
    ++unused;
    bool hits = false;
    for (int y : rep.w_prime) {
      int hl = rep.candidate_side == 0 ? w : y;
      int hr = rep.candidate_side == 0 ? y : w;
      if (host.is_red(hl, hr)) {
        hits = true;
        break;
      }
    }
    if (!hits) obs = false;
  }
  if (unused != rep.unused_count)
    throw IntegrityError("stuck report unused count does not recompute");

  diag.observation_holds = obs;
  double wp = double(rep.w_prime.size());
  diag.degree_cap_holds =
      double(diag.recomputed_d) <= config.prune_threshold() * wp + kThresholdGuard;
  diag.obs_lower_holds = diag.recomputed_d >= rep.unused_count;
  diag.degree_sum_holds = (long long)rep.step_r * (long long)rep.w_prime.size() <= 2 * config.m;
  double half_m = 0.5 * double(config.m);
  if (double(rep.step_r) <= half_m)
    diag.case_id = 1;
  else if (double(rep.step_r) <= double(config.m))
    diag.case_id = 2;
  diag.w_prime_upper = rep.step_r > 0 ? 2.0 * double(config.m) / double(rep.step_r) : 0.0;
  diag.contradiction_pattern = diag.case_id == 2 && rep.w_prime.size() >= 8;
  return diag;
}

struct LemmaOutcome {
  enum class Status { Found, NotApplicable, NotFound } status = Status::NotApplicable;
  std::optional<PatternWitness> witness;  // cycle in h's own coordinates
  bool average_degree_reached = false;
  bool found_in_induced = false;
};

/// Applies the dense-bipartite cycle lemma: with |X| >= sqrt(m),
/// |Y| >= 2m and at least 6 t sqrt(m) edges, greedily select X' of size
/// floor(sqrt(m)) and Y' of size 2m by top degree, check that the induced
/// average degree reaches 3t (reported, not assumed) and search C_{2t} in
/// the induced graph, falling back to all of h.
inline LemmaOutcome find_cycle_via_lemma(const BipartiteGraph& h, int t, long long m) {
  if (m < 1) throw std::domain_error("find_cycle_via_lemma requires m >= 1");
  if (t < 2) throw std::domain_error("find_cycle_via_lemma requires t >= 2");
  LemmaOutcome out;
  double sqrt_m = std::sqrt(double(m));
  double edge_thresh = 6.0 * double(t) * sqrt_m - kThresholdGuard;
  if (double(h.left_size()) < sqrt_m - kThresholdGuard || h.right_size() < 2 * m ||
      double(h.edge_count()) < edge_thresh) {
    out.status = LemmaOutcome::Status::NotApplicable;
    return out;
  }
  int x_size = std::max(1, int(std::floor(sqrt_m + kThresholdGuard)));
  std::vector<int> lefts(h.left_size());
  for (int i = 0; i < h.left_size(); ++i) lefts[i] = i;
  std::stable_sort(lefts.begin(), lefts.end(),
                   [&](int a, int b) { return h.left_degree(a) > h.left_degree(b); });
  lefts.resize(x_size);
  std::sort(lefts.begin(), lefts.end());

  std::vector<long long> deg_into_x(h.right_size(), 0);
  for (int u : lefts)
    for (int v = h.row(u).find_first(); v >= 0; v = h.row(u).find_next(v)) ++deg_into_x[v];
  std::vector<int> rights(h.right_size());
  for (int i = 0; i < h.right_size(); ++i) rights[i] = i;
  std::stable_sort(rights.begin(), rights.end(),
                   [&](int a, int b) { return deg_into_x[a] > deg_into_x[b]; });
  rights.resize(std::size_t(2 * m));
  std::sort(rights.begin(), rights.end());

  BipartiteGraph induced(x_size, int(rights.size()));
  for (int i = 0; i < x_size; ++i)
    for (std::size_t j = 0; j < rights.size(); ++j)
      if (h.has_edge(lefts[i], rights[j])) induced.add_edge(i, int(j));
  double avg = 2.0 * double(induced.edge_count()) / double(x_size + int(rights.size()));
  out.average_degree_reached = avg >= 3.0 * double(t) - kThresholdGuard;

  if (auto w = find_even_cycle(induced, 2 * t)) {
    for (std::size_t i = 0; i < w->cycle.size(); ++i)
      w->cycle[i] = i % 2 == 0 ? lefts[w->cycle[i]] : rights[w->cycle[i]];
    out.status = LemmaOutcome::Status::Found;
    out.found_in_induced = true;
    out.witness = std::move(w);
    return out;
  }
  if (auto w = find_even_cycle(h, 2 * t)) {
    out.status = LemmaOutcome::Status::Found;
    out.found_in_induced = false;
    out.witness = std::move(w);
    return out;
  }
  out.status = LemmaOutcome::Status::NotFound;
  return out;
}

inline Json stuck_report_to_json(const StuckReport& rep) {
  Json j;
  j["step_r"] = rep.step_r;
  j["w_prime"] = rep.w_prime;
  j["red_degree_sum"] = rep.red_degree_sum;
  j["unused_count"] = rep.unused_count;
  j["flipped"] = rep.flipped;
  j["candidate_side"] = rep.candidate_side;
  j["failing_vertex"] = rep.failing_vertex;
  j["used_left"] = rep.used_left;
  j["used_right"] = rep.used_right;
  j["pruning_applied"] = rep.pruning_applied;
  j["pruned_left"] = rep.pruned_left;
  j["pruned_right"] = rep.pruned_right;
  j["t"] = rep.t;
  j["m"] = rep.m;
  return j;
}

inline StuckReport stuck_report_from_json(const Json& j) {
  StuckReport rep;
  auto ints = [&](const char* name) {
    const Json& a = detail::require_field(j, name, "stuck report");
    if (!a.is_array()) throw ParseError(std::string("stuck report: field '") + name + "' must be an array");
    std::vector<int> out;
    for (const Json& x : a) {
      if (!x.is_number_integer())
        throw ParseError(std::string("stuck report: field '") + name + "' entries must be integers");
      out.push_back(x.get<int>());
    }
    return out;
  };
  rep.step_r = int(detail::require_int(j, "step_r", "stuck report"));
  rep.w_prime = ints("w_prime");
  rep.red_degree_sum = detail::require_int(j, "red_degree_sum", "stuck report");
  rep.unused_count = detail::require_int(j, "unused_count", "stuck report");
  const Json& fl = detail::require_field(j, "flipped", "stuck report");
  if (!fl.is_boolean()) throw ParseError("stuck report: field 'flipped' must be a boolean");
  rep.flipped = fl.get<bool>();
  rep.candidate_side = int(detail::require_int(j, "candidate_side", "stuck report"));
  rep.failing_vertex = int(detail::require_int(j, "failing_vertex", "stuck report"));
  rep.used_left = ints("used_left");
  rep.used_right = ints("used_right");
  const Json& pa = detail::require_field(j, "pruning_applied", "stuck report");
  if (!pa.is_boolean()) throw ParseError("stuck report: field 'pruning_applied' must be a boolean");
  rep.pruning_applied = pa.get<bool>();
  rep.pruned_left = ints("pruned_left");
  rep.pruned_right = ints("pruned_right");
  rep.t = int(detail::require_int(j, "t", "stuck report"));
  rep.m = detail::require_int(j, "m", "stuck report");
  return rep;
}

inline Json stuck_diagnostics_to_json(const StuckDiagnostics& d) {
  Json j;
  j["recomputed_d"] = d.recomputed_d;
  j["observation_holds"] = d.observation_holds;
  j["degree_cap_holds"] = d.degree_cap_holds;
  j["obs_lower_holds"] = d.obs_lower_holds;
  j["degree_sum_holds"] = d.degree_sum_holds;
  j["case_id"] = d.case_id;
  j["w_prime_upper"] = d.w_prime_upper;
  j["contradiction_pattern"] = d.contradiction_pattern;
  return j;
}

struct PipelineResult {
  enum class Kind { Embedding, RedCycle, Stuck, Structural } kind = Kind::Structural;
  std::optional<Certificate> certificate;
  std::optional<PatternWitness> red_cycle;  // host coordinates, red class
  std::optional<StuckReport> stuck;
  std::optional<StuckDiagnostics> diagnostics;
  bool below_theorem_threshold = false;
  bool target_connected = false;
  bool w0_branch_taken = false;
  std::string lemma_status;  // "", "found", "not-applicable", "not-found"
  bool phase1_used = false;
  bool phase1_degraded = false;
};

inline bool is_connected(const BipartiteGraph& g) {
  int L = g.left_size(), R = g.right_size();
  if (L + R == 0) return true;
  std::vector<char> vis(L + R, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (id < L) {
      for (int v = g.row(id).find_first(); v >= 0; v = g.row(id).find_next(v))
        if (!vis[L + v]) {
          vis[L + v] = 1;
          stack.push_back(L + v);
        }
    } else {
      for (int u = 0; u < L; ++u)
        if (g.has_edge(u, id - L) && !vis[u]) {
          vis[u] = 1;
          stack.push_back(u);
        }
    }
  }
  for (char x : vis)
    if (!x) return false;
  return true;
}

inline Certificate make_embedding_certificate(const EdgeColoring& c, const BipartiteGraph& g,
                                              const Embedding& emb) {
  Certificate cert;
  cert.kind = CertificateKind::Embedding;
  cert.claims.push_back("target with " + std::to_string(g.left_size()) + "+" +
                        std::to_string(g.right_size()) + " vertices and " +
                        std::to_string(g.edge_count()) +
                        " edges embeds into the blue class of the given 2-coloring of K_{" +
                        std::to_string(c.host_side()) + "," + std::to_string(c.host_side()) + "}");
  cert.payload["target"] = graph_to_json(g);
  cert.payload["coloring"] = coloring_to_json(c);
  Json e;
  e["map_left"] = emb.image_left;
  e["map_right"] = emb.image_right;
  e["flipped"] = emb.flipped;
  cert.payload["embedding"] = std::move(e);
  return cert;
}

/// Full embedding pipeline: high-red-degree branch (red C_{2t} via the
/// lemma), pruning, optional blue-biclique phase 1, then the greedy walk
/// with diagnostics on failure. A stuck outcome is a diagnosable experiment,
/// never a refutation: the embedding argument is asymptotic in m.
inline PipelineResult embed_pipeline(const EdgeColoring& c, const BipartiteGraph& g, int t,
                                     double c0 = 0.25, bool use_phase1 = true,
                                     std::uint64_t phase1_node_budget = 200000) {
  if (c.num_colors() != 2) throw std::invalid_argument("embed_pipeline requires a 2-coloring");
  long long m = g.edge_count();
  if (m < 1) throw std::domain_error("embed_pipeline requires a target with >= 1 edge");
  EmbedConfig config;
  config.t = t;
  config.m = m;
  config.c0 = c0;
  config.use_phase1 = use_phase1;
  config.phase1_node_budget = phase1_node_budget;
  config.validate();

  PipelineResult out;
  out.below_theorem_threshold = c.host_side() < host_size(m, t);
  out.target_connected = is_connected(g);
  int n = c.host_side();

  HighDegreeSet w0 = high_red_degree_set(c, t, m);
  if (w0.reaches_sqrt_m) {
    out.w0_branch_taken = true;
    bool major_left = w0.left.size() >= w0.right.size();
    const std::vector<int>& major = major_left ? w0.left : w0.right;
    BipartiteGraph h(int(major.size()), n);
    for (std::size_t i = 0; i < major.size(); ++i)
      for (int j = 0; j < n; ++j) {
        int hl = major_left ? major[i] : j;
        int hr = major_left ? j : major[i];
        if (c.color(hl, hr) == 0) h.add_edge(int(i), j);
      }
    LemmaOutcome lem = find_cycle_via_lemma(h, t, m);
    switch (lem.status) {
      case LemmaOutcome::Status::Found: {
        out.lemma_status = "found";
        PatternWitness w = *lem.witness;
        for (std::size_t i = 0; i < w.cycle.size(); ++i)
          if (i % 2 == 0) w.cycle[i] = major[w.cycle[i]];
        if (!major_left) {
          // h's left part lives on the host's right side: rotate so the
          // witness alternates host-left first.
          std::vector<int> rot(w.cycle.size());
          for (std::size_t i = 0; i + 1 < w.cycle.size(); ++i) rot[i] = w.cycle[i + 1];
          rot[w.cycle.size() - 1] = w.cycle[0];
          w.cycle = std::move(rot);
        }
        if (!verify_cycle(c.color_class(0), w, 2 * t))
          throw IntegrityError("red cycle witness failed re-verification");
        out.kind = PipelineResult::Kind::RedCycle;
        out.red_cycle = std::move(w);
        return out;
      }
      case LemmaOutcome::Status::NotApplicable:
        out.lemma_status = "not-applicable";
        break;
      case LemmaOutcome::Status::NotFound:
        out.lemma_status = "not-found";
        break;
    }
  }

  GreedyOptions opts;
  PatternWitness biclique;
  if (use_phase1) {
    long long a = (long long)std::ceil(c0 * std::sqrt(double(m)) * std::log(double(m)) -
                                       kThresholdGuard);
    a = std::min<long long>(a, std::max(g.left_size(), g.right_size()));
    if (a >= 1) {
      HighDegreeSet prune = high_red_degree_set(c, t, m);
      std::vector<char> pl(n, 0), pr(n, 0);
      for (int u : prune.left) pl[u] = 1;
      for (int v : prune.right) pr[v] = 1;
      BipartiteGraph blue(n, n);
      for (int u = 0; u < n; ++u) {
        if (pl[u]) continue;
        for (int v = 0; v < n; ++v)
          if (!pr[v] && c.color(u, v) == c.num_colors() - 1) blue.add_edge(u, v);
      }
      BicliqueSearchResult found = find_biclique_budgeted(blue, int(a), phase1_node_budget);
      if (found.witness) {
        biclique = *found.witness;
        opts.blue_biclique = &biclique;
        out.phase1_used = true;
      } else {
        out.phase1_degraded = !found.exhausted;
      }
    }
  }

  EmbedOutcome greedy = greedy_blue_embed(c, g, config, opts);
  if (greedy.embedding) {
    if (!verify_embedding(c, g, *greedy.embedding))
      throw IntegrityError("embedding failed re-verification");
    out.kind = PipelineResult::Kind::Embedding;
    out.certificate = make_embedding_certificate(c, g, *greedy.embedding);
    return out;
  }
  if (greedy.stuck) {
    out.kind = PipelineResult::Kind::Stuck;
    out.diagnostics = stuck_diagnostics(*greedy.stuck, c, config);
    out.stuck = std::move(greedy.stuck);
    return out;
  }
  out.kind = PipelineResult::Kind::Structural;
  return out;
}

}  // namespace bram
