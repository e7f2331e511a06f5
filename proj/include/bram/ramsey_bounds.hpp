#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "bram/zarankiewicz.hpp"

namespace bram {

enum class CountMode { Exact, Bound };

/// Parameters of the double-counting certifier: forbid C_{2t} in the first
/// k colors and K_{n,n} in the last one.
struct CountingConfig {
  int n = 2;       // biclique side
  int t = 2;       // half cycle length
  int k = 1;       // number of cycle colors
  double c = 1.0;  // constant of the asymptotic host-size formula
  CountMode mode = CountMode::Exact;

  void validate() const {
    if (n < 1) throw std::domain_error("counting config requires n >= 1");
    if (t < 2) throw std::domain_error("counting config requires t >= 2");
    if (k < 1) throw std::domain_error("counting config requires k >= 1");
    if (!(c > 0.0)) throw std::domain_error("counting config requires c > 0");
  }
};

struct UpperBoundCheck {
  bool certified = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Checks k*z(r;C_{2t}) + z(r;n) < r^2. When the inequality holds, no
/// (k+1)-coloring of K_{r,r} can avoid both patterns, so br_k(C_{2t};K_{n,n})
/// is at most r.
inline UpperBoundCheck certify_upper_bound(const CountingConfig& cfg, long long r,
                                           const ZBudget& budget = {}, ZCache* cache = nullptr) {
  cfg.validate();
  if (r < 1) throw std::domain_error("certify_upper_bound requires r >= 1");
  UpperBoundCheck out;
  out.rhs = double(r) * double(r);
  if (cfg.mode == CountMode::Exact) {
    ExtremalRecord zc = z_cycle_exact(int(r), cfg.t, budget, cache);
    ExtremalRecord zn = z_exact(int(r), cfg.n, budget, cache);
    out.lhs = double(cfg.k) * zc.value + zn.value;
  } else {
    if (cfg.n < 2 || r < cfg.n)
      throw std::domain_error("certify_upper_bound in bound mode requires r >= n >= 2");
    out.lhs = double(cfg.k) * naor_verstraete_bound(r, cfg.t) + bollobas_bound(r, cfg.n);
  }
  out.certified = out.lhs < out.rhs;
  return out;
}

/// Least r <= r_max whose inequality certifies, scanning upward; each r is
/// checked independently (the inequality is not monotone in general).
inline std::optional<long long> smallest_certified_r(const CountingConfig& cfg, long long r_max,
                                                     const ZBudget& budget = {},
                                                     ZCache* cache = nullptr) {
  cfg.validate();
  long long r_lo = cfg.mode == CountMode::Bound ? std::max<long long>(cfg.n, 2) : 1;
  for (long long r = r_lo; r <= r_max; ++r)
    if (certify_upper_bound(cfg, r, budget, cache).certified) return r;
  return std::nullopt;
}

/// ceil(c * n^2 / ln^2 n). Natural logarithm throughout; ceiling keeps the
/// upper-bound direction.
inline long long asymptotic_r(long long n, double c) {
  if (n < 2) throw std::domain_error("asymptotic_r requires n >= 2");
  if (!(c > 0.0)) throw std::domain_error("asymptotic_r requires c > 0");
  double ln = std::log(double(n));
  return (long long)std::ceil(c * double(n) * double(n) / (ln * ln));
}

/// 1 - (k*nv(r,t) + bollobas(r,n)) / r^2 at r = asymptotic_r(n,c). A positive
/// margin certifies the counting inequality at this n via the two closed-form
/// bounds.
inline double ratio_margin(const CountingConfig& cfg) {
  cfg.validate();
  if (cfg.mode != CountMode::Bound)
    throw std::invalid_argument("ratio_margin requires bound mode");
  long long r = asymptotic_r(cfg.n, cfg.c);
  if (r < cfg.n || cfg.n < 2)
    throw std::domain_error("ratio_margin requires n with asymptotic_r(n,c) >= n >= 2");
  double r2 = double(r) * double(r);
  return 1.0 - (double(cfg.k) * naor_verstraete_bound(r, cfg.t) + bollobas_bound(r, cfg.n)) / r2;
}

/// True iff p >= 3 and q >= 2p-2: such a graph grows too fast for
/// size-linear bipartite Ramsey behavior.
inline bool size_linearity_obstruction(long long p, long long q) {
  if (p < 1) throw std::domain_error("size_linearity_obstruction requires p >= 1");
  if (q < 0) throw std::domain_error("size_linearity_obstruction requires q >= 0");
  return p >= 3 && q >= 2 * p - 2;
}

}  // namespace bram
