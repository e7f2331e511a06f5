#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bram/graph.hpp"
#include "bram/pattern.hpp"
#include "bram/rng.hpp"
#include "bram/serialize.hpp"

namespace bram {

/// Constant bundle of the local-lemma construction with its derived
/// quantities. All logarithms are natural.
struct LLLParameters {
  int p = 0;            // pattern vertex count
  int q = 0;            // pattern edge count
  double c1 = 0, c2 = 0, c4 = 0;
  long long n_host = 0;  // host side N

  double s = 0;          // (p-2)/(q-1)
  double red_prob = 0;   // c1 * N^{-s}, clamped into [0,1]
  bool red_prob_clamped = false;
  double n_real = 0;     // c2 * N^s * ln N
  long long n_int = 0;   // n_real rounded, at least 1
  double a = 2.0;
  double log_b = 0;      // c4 * N^s * ln^2 N
};

inline LLLParameters derive_params(int p, int q, double c1, double c2, double c4, long long n_host) {
  if (p < 3 || q < 2) throw std::domain_error("derive_params requires p >= 3 and q >= 2");
  if (n_host < 2) throw std::domain_error("derive_params requires N >= 2");
  if (!(c1 > 0) || !(c2 > 0) || !(c4 > 0))
    throw std::domain_error("derive_params requires positive constants");
  LLLParameters out;
  out.p = p;
  out.q = q;
  out.c1 = c1;
  out.c2 = c2;
  out.c4 = c4;
  out.n_host = n_host;
  out.s = double(p - 2) / double(q - 1);
  double ln_n = std::log(double(n_host));
  double ns = std::pow(double(n_host), out.s);
  double raw = c1 * std::pow(double(n_host), -out.s);
  out.red_prob_clamped = raw > 1.0;
  out.red_prob = std::min(raw, 1.0);
  out.n_real = c2 * ns * ln_n;
  out.n_int = std::max<long long>(1, llround(out.n_real));
  out.a = 2.0;
  out.log_b = c4 * ns * ln_n * ln_n;
  return out;
}

/// ln(p!) + q ln r: log of the union bound over the p! embeddings whose q
/// edges must all be red. -inf when r = 0.
inline double log_prob_red(const LLLParameters& params) {
  if (params.red_prob < 0 || params.red_prob > 1)
    throw std::domain_error("log_prob_red requires red_prob in [0,1]");
  if (params.red_prob == 0) return -std::numeric_limits<double>::infinity();
  return std::lgamma(double(params.p) + 1.0) + double(params.q) * std::log(params.red_prob);
}

/// n ln 4 - r n^2: log of the relaxed bound binom(2n,n)(1-r)^{n^2}.
inline double log_prob_blue(const LLLParameters& params) {
  if (params.n_real < 0) throw std::domain_error("log_prob_blue requires n >= 0");
  return params.n_real * std::log(4.0) - params.red_prob * params.n_real * params.n_real;
}

/// The four dependency-neighborhood sizes, exact.
struct DependencyCounts {
  mpz_class n_aa, n_ab, n_ba, n_bb;
};

namespace detail {

inline mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline double log_mpz(const mpz_class& x) {
  // exact-integer based logarithm: ln(mantissa) + exp ln 2
  signed long exp = 0;
  double m = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(m) + double(exp) * std::log(2.0);
}

inline double log_binom(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace detail

/// Exact neighborhood counts over the 2N host vertices: pattern events sit
/// on p-subsets, biclique events on 2n-subsets, and two events interact when
/// they share at least two vertices. n_aa counts the seats S' != S exactly;
/// the other three are the products of the standard (pair, completion)
/// over-count, which is what a union bound consumes.
inline DependencyCounts dependency_counts(int p, long long n, long long n_host) {
  if (p < 2 || p > 2 * n_host) throw std::domain_error("dependency_counts requires 2 <= p <= 2N");
  if (n < 1 || n > n_host) throw std::domain_error("dependency_counts requires 1 <= n <= N");
  unsigned long twoN = (unsigned long)(2 * n_host);
  unsigned long up = (unsigned long)p;
  unsigned long twon = (unsigned long)(2 * n);
  DependencyCounts out;
  out.n_aa = 0;
  for (unsigned long k = 2; k + 1 <= up; ++k)
    out.n_aa += detail::binom(up, k) * detail::binom(twoN - up, up - k);
  out.n_ab = detail::binom(up, 2) * detail::binom(twoN - 2, twon - 2);
  out.n_ba = detail::binom(twon, 2) * detail::binom(twoN - 2, up - 2);
  out.n_bb = 0;
  for (unsigned long k = 2; k <= twon; ++k)
    out.n_bb += detail::binom(twon, k) * detail::binom(twoN - twon, twon - k);
  return out;
}

struct ConstantsCheck {
  bool ok = false;
  double lhs = 0, rhs = 0;
};

/// Gate 2 c2 + c4 < c1 c2^2 / 2 (strict) that the constant choice must pass.
inline ConstantsCheck check_constants(double c1, double c2, double c4) {
  if (!(c1 > 0) || !(c2 > 0) || !(c4 > 0))
    throw std::domain_error("check_constants requires positive constants");
  ConstantsCheck out;
  out.lhs = 2.0 * c2 + c4;
  out.rhs = 0.5 * c1 * c2 * c2;
  out.ok = out.lhs < out.rhs;
  return out;
}

struct LLLConditionReport {
  bool applicable = false;
  std::string reason;          // set when inapplicable
  double log_a_prob = 0;       // ln(a P(A))
  double log_b_prob = 0;       // ln(b P(B))
  double term_aa = 0, term_ab = 0, term_ba = 0, term_bb = 0;
  double cond_a_margin = 0;    // ln a - (term_aa + term_ab)
  double cond_b_margin = 0;    // ln b - (term_ba + term_bb)
  bool counts_exact = true;    // false when n_ab/n_bb used log-gamma sizes
};

namespace detail {

inline double exp_safe(double x) {
  if (x > 700.0) return std::numeric_limits<double>::infinity();
  if (x < -745.0) return 0.0;
  return std::exp(x);
}

}  // namespace detail

/// Margins of the simplified conditions
///   ln a >= 2 N_AA aP(A) + 2 N_AB bP(B)
///   ln b >= 2 N_BA aP(A) + 2 N_BB bP(B)
/// after enforcing aP(A) <= 1/2 and bP(B) <= 1/2 (otherwise the
/// log(1/(1-x)) <= 2x simplification is invalid and the check reports
/// inapplicable). N_AA and N_BA are always evaluated as exact integers;
/// N_AB and N_BB switch to log-gamma magnitudes once 2n grows past desk
/// scale, where only their logarithms are representable anyway.
inline LLLConditionReport check_lll_conditions(const LLLParameters& params) {
  LLLConditionReport out;
  double lpa = log_prob_red(params);
  double lpb = log_prob_blue(params);
  double ln_half = std::log(0.5);
  out.log_a_prob = std::log(params.a) + lpa;
  out.log_b_prob = params.log_b + lpb;
  if (out.log_a_prob > ln_half) {
    out.reason = "precondition a*P(A) <= 1/2 fails";
    return out;
  }
  if (out.log_b_prob > ln_half) {
    out.reason = "precondition b*P(B) <= 1/2 fails";
    return out;
  }
  out.applicable = true;

  long long n = params.n_int;
  long long n_host = params.n_host;
  int p = params.p;
  if (p > 2 * n_host || n > n_host) {
    out.applicable = false;
    out.reason = "dependency counts undefined: need p <= 2N and n <= N";
    return out;
  }

  double log_naa, log_nab, log_nba, log_nbb;
  {
    mpz_class n_aa = 0;
    for (unsigned long k = 2; k + 1 <= (unsigned long)p; ++k)
      n_aa += detail::binom((unsigned long)(2 * n_host) - p, (unsigned long)p - k) *
              detail::binom((unsigned long)p, k);
    log_naa = detail::log_mpz(n_aa);
    mpz_class n_ba = detail::binom((unsigned long)(2 * n), 2) *
                     detail::binom((unsigned long)(2 * n_host) - 2, (unsigned long)p - 2);
    log_nba = detail::log_mpz(n_ba);
  }
  const long long exact_cut = 2000;
  if (2 * n <= exact_cut) {
    DependencyCounts counts = dependency_counts(p, n, n_host);
    log_nab = detail::log_mpz(counts.n_ab);
    log_nbb = detail::log_mpz(counts.n_bb);
  } else {
    out.counts_exact = false;
    double twoN = 2.0 * double(n_host), twon = 2.0 * double(n);
    log_nab = detail::log_binom(double(p), 2.0) + detail::log_binom(twoN - 2.0, twon - 2.0);
    // Vandermonde complement: sum_{k=2}^{2n} C(2n,k) C(2N-2n,2n-k)
    //   = C(2N,2n) - C(2N-2n,2n) - 2n C(2N-2n,2n-1)
    double full = detail::log_binom(twoN, twon);
    double k0 = detail::log_binom(twoN - twon, twon) - full;
    double k1 = std::log(twon) + detail::log_binom(twoN - twon, twon - 1.0) - full;
    double corr = detail::exp_safe(k0) + detail::exp_safe(k1);
    log_nbb = full + (corr < 1.0 ? std::log1p(-corr) : -std::numeric_limits<double>::infinity());
  }

  double ln2 = std::log(2.0);
  out.term_aa = detail::exp_safe(ln2 + log_naa + std::log(params.a) + lpa);
  out.term_ab = detail::exp_safe(ln2 + log_nab + params.log_b + lpb);
  out.term_ba = detail::exp_safe(ln2 + log_nba + std::log(params.a) + lpa);
  out.term_bb = detail::exp_safe(ln2 + log_nbb + params.log_b + lpb);
  out.cond_a_margin = std::log(params.a) - (out.term_aa + out.term_ab);
  out.cond_b_margin = params.log_b - (out.term_ba + out.term_bb);
  return out;
}

struct ResampleStats {
  std::uint64_t rounds = 0;
  std::uint64_t red_events = 0;
  std::uint64_t blue_events = 0;
};

struct ConstructResult {
  std::optional<EdgeColoring> coloring;
  ResampleStats stats;
};

/// Iterated resampling of violated events: while some red copy of the
/// pattern or blue K_{n,n} exists, redraw all edge variables of the first
/// such event (red copies scanned before blue bicliques, each by its
/// finder's canonical order). Deterministic for a fixed seed. Exhausting the
/// resample budget is the generic failure; success is re-verified by the
/// same pattern searches that define the events.
inline ConstructResult construct_coloring(const BipartiteGraph& pattern, int n_host, int n,
                                          double red_prob, std::uint64_t seed,
                                          std::uint64_t resample_budget) {
  if (pattern.edge_count() < 1)
    throw std::domain_error("construct_coloring requires a pattern with >= 1 edge");
  if (n < 1 || n > n_host) throw std::domain_error("construct_coloring requires 1 <= n <= N");
  if (!(red_prob >= 0.0) || !(red_prob <= 1.0))
    throw std::domain_error("construct_coloring requires red_prob in [0,1]");

  Rng rng(seed);
  EdgeColoring coloring(n_host, 2);
  auto draw = [&]() { return rng.next_unit() < red_prob ? 0 : 1; };
  for (int u = 0; u < n_host; ++u)
    for (int v = 0; v < n_host; ++v) coloring.set_color(u, v, draw());

  ConstructResult out;
  for (std::uint64_t round = 0; round <= resample_budget; ++round) {
    BipartiteGraph red = coloring.color_class(0);
    std::vector<std::pair<int, int>> event_edges;
    if (auto w = find_subgraph_copy(red, pattern)) {
      ++out.stats.red_events;
      for (auto [a, b] : pattern.edges_lex()) {
        int x = w->map_left[a], y = w->map_right[b];
        int u = w->flipped ? y : x;
        int v = w->flipped ? x : y;
        event_edges.emplace_back(u, v);
      }
    } else {
      BipartiteGraph blue = coloring.color_class(1);
      if (auto w = find_biclique(blue, n)) {
        ++out.stats.blue_events;
        for (int u : w->left)
          for (int v : w->right) event_edges.emplace_back(u, v);
      } else {
        out.stats.rounds = round;
        out.coloring = coloring;
        return out;
      }
    }
    if (round == resample_budget) break;  // budget exhausted before a clean state
    std::sort(event_edges.begin(), event_edges.end());
    event_edges.erase(std::unique(event_edges.begin(), event_edges.end()), event_edges.end());
    for (auto [u, v] : event_edges) coloring.set_color(u, v, draw());
  }
  out.stats.rounds = resample_budget;
  return out;
}

/// True iff the coloring has no red copy of the pattern and no blue K_{n,n}.
inline bool certify_lower_bound(const BipartiteGraph& pattern, int n, const EdgeColoring& c) {
  if (c.num_colors() != 2) throw std::invalid_argument("certify_lower_bound requires a 2-coloring");
  return !find_subgraph_copy(c.color_class(0), pattern).has_value() &&
         !find_biclique(c.color_class(1), n).has_value();
}

inline Certificate make_lll_certificate(const BipartiteGraph& pattern, int n,
                                        const EdgeColoring& coloring, std::uint64_t seed) {
  Certificate cert;
  cert.kind = CertificateKind::LllLowerBound;
  cert.seed = seed;
  cert.claims.push_back("br(G, K_{" + std::to_string(n) + "," + std::to_string(n) + "}) > " +
                        std::to_string(coloring.host_side()) + " for G with " +
                        std::to_string(pattern.left_size()) + "+" +
                        std::to_string(pattern.right_size()) + " vertices and " +
                        std::to_string(pattern.edge_count()) + " edges");
  cert.payload["pattern"] = graph_to_json(pattern);
  cert.payload["n"] = n;
  cert.payload["coloring"] = coloring_to_json(coloring);
  return cert;
}

}  // namespace bram
