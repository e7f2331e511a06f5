// Command-line front end: every operation as a subcommand with JSON on
// stdout, logs and the run manifest on stderr. Exit codes: 0 definitive
// success, 1 definitive negative, 2 indeterminate (budget), 3 usage error.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bram/bram.hpp"

namespace {

using bram::Json;

struct GlobalFlags {
  int threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t node_limit = bram::kNoLimit;
  std::uint64_t time_limit_ms = 0;
  bool stamp = false;
  std::string cache_path;
};

struct Outcome {
  Json body;
  int exit_code = 0;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[x & 15];
    x >>= 4;
  }
  return out;
}

std::string now_string() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void apply_meta(bram::Certificate& cert, const GlobalFlags& flags,
                std::optional<std::uint64_t> seed = std::nullopt) {
  if (seed) cert.seed = *seed;
  if (flags.stamp) cert.stamp = now_string();
}

bram::BipartiteGraph load_graph(const std::string& path) {
  return bram::graph_from_json(bram::load_json_file(path));
}

bram::EdgeColoring load_coloring(const std::string& path) {
  return bram::coloring_from_json(bram::load_json_file(path));
}

Json search_status_json(bram::SearchStatus s) {
  switch (s) {
    case bram::SearchStatus::Found: return "found";
    case bram::SearchStatus::None: return "none";
    case bram::SearchStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact small bipartite Ramsey and Zarankiewicz toolkit"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--threads", flags.threads, "worker count for partitioned searches")
      ->envname("BRAM_THREADS");
  app.add_option("--seed", flags.seed, "seed for randomized subcommands")->envname("BRAM_SEED");
  app.add_option("--node-limit", flags.node_limit, "search node budget")
      ->envname("BRAM_NODE_LIMIT");
  app.add_option("--time-limit", flags.time_limit_ms, "search time budget in ms")
      ->envname("BRAM_TIME_LIMIT");
  app.add_flag("--stamp", flags.stamp, "stamp certificates with wall-clock time");
  app.add_option("--cache", flags.cache_path, "extremal record cache file (JSON lines)")
      ->envname("BRAM_CACHE");

  std::vector<std::function<Outcome()>> action;  // exactly one gets installed

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate graphs and colorings");
  gen->require_subcommand(1);
  {
    auto* complete = gen->add_subcommand("complete", "complete bipartite graph K_{a,b}");
    auto a = std::make_shared<int>(1), b = std::make_shared<int>(1);
    complete->add_option("--a", *a)->required();
    complete->add_option("--b", *b)->required();
    complete->callback([&action, a, b] {
      action.push_back([a, b] {
        return Outcome{bram::graph_to_json(bram::BipartiteGraph::complete(*a, *b)), 0};
      });
    });

    auto* random = gen->add_subcommand("random", "bipartite random graph");
    auto left = std::make_shared<int>(1), right = std::make_shared<int>(1);
    auto prob = std::make_shared<double>(0.5);
    random->add_option("--left", *left)->required();
    random->add_option("--right", *right)->required();
    random->add_option("--prob", *prob)->required();
    random->callback([&action, &flags, left, right, prob] {
      action.push_back([&flags, left, right, prob] {
        return Outcome{
            bram::graph_to_json(bram::random_bipartite(*left, *right, *prob, flags.seed)), 0};
      });
    });

    auto* tree = gen->add_subcommand("tree", "random tree with m edges, sides by depth parity");
    auto m = std::make_shared<int>(1);
    tree->add_option("--m", *m)->required();
    tree->callback([&action, &flags, m] {
      action.push_back([&flags, m] {
        return Outcome{bram::graph_to_json(bram::random_tree_bipartite(*m, flags.seed)), 0};
      });
    });

    auto* coloring = gen->add_subcommand("coloring", "edge coloring of K_{N,N}");
    auto n = std::make_shared<int>(1);
    auto colors = std::make_shared<int>(2);
    auto fill = std::make_shared<int>(-1);
    auto matching = std::make_shared<bool>(false);
    auto random_mode = std::make_shared<bool>(false);
    coloring->add_option("--n", *n)->required();
    coloring->add_option("--colors", *colors);
    coloring->add_option("--fill", *fill, "constant coloring with this color");
    coloring->add_flag("--matching", *matching, "red = random perfect matching, rest blue");
    coloring->add_flag("--random", *random_mode, "uniform random colors");
    coloring->callback([&action, &flags, n, colors, fill, matching, random_mode] {
      action.push_back([&flags, n, colors, fill, matching, random_mode]() -> Outcome {
        if (*matching)
          return {bram::coloring_to_json(bram::random_matching_coloring(*n, flags.seed)), 0};
        if (*random_mode)
          return {bram::coloring_to_json(bram::random_coloring(*n, *colors, flags.seed)), 0};
        int f = *fill < 0 ? 0 : *fill;
        return {bram::coloring_to_json(bram::EdgeColoring(*n, *colors, f)), 0};
      });
    });
  }

  // ---- pattern ------------------------------------------------------
  auto* pattern = app.add_subcommand("pattern", "pattern detection");
  pattern->require_subcommand(1);
  {
    auto* find = pattern->add_subcommand("find", "find a pattern inside a host graph");
    auto host_path = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    auto s = std::make_shared<int>(2);
    auto length = std::make_shared<int>(4);
    auto pattern_path = std::make_shared<std::string>();
    find->add_option("--host", *host_path)->required();
    find->add_option("--kind", *kind)->required()->check(CLI::IsMember({"biclique", "cycle", "generic"}));
    find->add_option("--s", *s);
    find->add_option("--length", *length);
    find->add_option("--pattern", *pattern_path);
    find->callback([&action, host_path, kind, s, length, pattern_path] {
      action.push_back([host_path, kind, s, length, pattern_path]() -> Outcome {
        bram::BipartiteGraph host = load_graph(*host_path);
        std::optional<bram::PatternWitness> w;
        if (*kind == "biclique")
          w = bram::find_biclique(host, *s);
        else if (*kind == "cycle")
          w = bram::find_even_cycle(host, *length);
        else {
          if (pattern_path->empty()) throw bram::ParseError("--pattern is required for kind generic");
          w = bram::find_subgraph_copy(host, load_graph(*pattern_path));
        }
        Json j;
        j["found"] = w.has_value();
        j["witness"] = w ? bram::witness_to_json(*w) : Json(nullptr);
        return {j, w ? 0 : 1};
      });
    });
  }

  // ---- z ------------------------------------------------------------
  auto* z = app.add_subcommand("z", "Zarankiewicz numbers and bounds");
  z->require_subcommand(1);
  {
    auto* exact = z->add_subcommand("exact", "exact z(r;s) by branch and bound");
    auto r = std::make_shared<int>(2), s = std::make_shared<int>(2);
    exact->add_option("--r", *r)->required();
    exact->add_option("--s", *s)->required();
    exact->callback([&action, &flags, r, s] {
      action.push_back([&flags, r, s]() -> Outcome {
        bram::ZBudget budget;
        if (flags.node_limit != bram::kNoLimit) budget.node_limit = flags.node_limit;
        std::optional<bram::ZCache> cache;
        if (!flags.cache_path.empty()) cache.emplace(flags.cache_path);
        bram::ExtremalRecord rec = bram::z_exact(*r, *s, budget, cache ? &*cache : nullptr);
        bram::Certificate cert = bram::make_extremal_certificate(rec);
        apply_meta(cert, flags);
        Json j;
        j["value"] = rec.value;
        j["certificate"] = bram::certificate_to_json(cert);
        return {j, 0};
      });
    });

    auto* cycle = z->add_subcommand("cycle", "exact z(r;C_{2t}) by branch and bound");
    auto rc = std::make_shared<int>(2), t = std::make_shared<int>(2);
    cycle->add_option("--r", *rc)->required();
    cycle->add_option("--t", *t)->required();
    cycle->callback([&action, &flags, rc, t] {
      action.push_back([&flags, rc, t]() -> Outcome {
        bram::ZBudget budget;
        if (flags.node_limit != bram::kNoLimit) budget.node_limit = flags.node_limit;
        std::optional<bram::ZCache> cache;
        if (!flags.cache_path.empty()) cache.emplace(flags.cache_path);
        bram::ExtremalRecord rec = bram::z_cycle_exact(*rc, *t, budget, cache ? &*cache : nullptr);
        bram::Certificate cert = bram::make_extremal_certificate(rec);
        apply_meta(cert, flags);
        Json j;
        j["value"] = rec.value;
        j["certificate"] = bram::certificate_to_json(cert);
        return {j, 0};
      });
    });

    auto* bound = z->add_subcommand("bound", "closed-form upper bounds");
    auto kind = std::make_shared<std::string>();
    auto rb = std::make_shared<long long>(2);
    auto sb = std::make_shared<long long>(2);
    auto tb = std::make_shared<long long>(2);
    bound->add_option("--kind", *kind)->required()->check(CLI::IsMember({"biclique", "cycle"}));
    bound->add_option("--r", *rb)->required();
    bound->add_option("--s", *sb);
    bound->add_option("--t", *tb);
    bound->callback([&action, kind, rb, sb, tb] {
      action.push_back([kind, rb, sb, tb]() -> Outcome {
        Json j;
        j["value"] = *kind == "biclique" ? bram::bollobas_bound(*rb, *sb)
                                         : bram::naor_verstraete_bound(*rb, *tb);
        return {j, 0};
      });
    });
  }

  // ---- br -----------------------------------------------------------
  auto* br = app.add_subcommand("br", "bipartite Ramsey numbers and upper bounds");
  br->require_subcommand(1);
  {
    auto* exact = br->add_subcommand("exact", "exact br(G1,G2) by exhaustive coloring search");
    auto g1p = std::make_shared<std::string>(), g2p = std::make_shared<std::string>();
    auto nmax = std::make_shared<int>(6);
    exact->add_option("--g1", *g1p)->required();
    exact->add_option("--g2", *g2p)->required();
    exact->add_option("--nmax", *nmax);
    exact->callback([&action, &flags, g1p, g2p, nmax] {
      action.push_back([&flags, g1p, g2p, nmax]() -> Outcome {
        bram::BipartiteGraph g1 = load_graph(*g1p), g2 = load_graph(*g2p);
        bram::SearchBudget budget;
        budget.n_max = *nmax;
        budget.node_limit = flags.node_limit;
        budget.time_limit_ms = flags.time_limit_ms;
        budget.workers = flags.threads;
        bram::BrResult res = bram::br_exact(g1, g2, budget);
        Json j;
        j["status"] = search_status_json(res.status);
        if (res.status == bram::SearchStatus::Found) {
          j["br"] = res.value;
          if (res.witness_below) {
            bram::Certificate cert = bram::make_good_coloring_certificate(g1, g2, *res.witness_below);
            apply_meta(cert, flags);
            j["witness_certificate"] = bram::certificate_to_json(cert);
          } else {
            j["witness_certificate"] = nullptr;
          }
          Json ref;
          ref["n"] = res.value;
          ref["nodes_explored"] = res.refutation_nodes;
          ref["exhausted"] = true;
          j["refutation"] = std::move(ref);
          return {j, 0};
        }
        j["last_witnessed"] = res.last_witnessed;
        return {j, 2};
      });
    });

    auto* upper = br->add_subcommand("upper", "double-counting upper-bound certificate");
    auto n = std::make_shared<int>(2), t = std::make_shared<int>(2), k = std::make_shared<int>(1);
    auto c = std::make_shared<double>(1.0);
    auto mode = std::make_shared<std::string>("exact");
    auto rr = std::make_shared<long long>(-1), rmax = std::make_shared<long long>(-1);
    upper->add_option("--n", *n)->required();
    upper->add_option("--t", *t)->required();
    upper->add_option("--k", *k)->required();
    upper->add_option("--c", *c);
    upper->add_option("--mode", *mode)->check(CLI::IsMember({"exact", "bound"}));
    upper->add_option("--r", *rr);
    upper->add_option("--rmax", *rmax);
    upper->callback([&action, &flags, n, t, k, c, mode, rr, rmax] {
      action.push_back([&flags, n, t, k, c, mode, rr, rmax]() -> Outcome {
        bram::CountingConfig cfg;
        cfg.n = *n;
        cfg.t = *t;
        cfg.k = *k;
        cfg.c = *c;
        cfg.mode = *mode == "exact" ? bram::CountMode::Exact : bram::CountMode::Bound;
        bram::ZBudget budget;
        if (flags.node_limit != bram::kNoLimit) budget.node_limit = flags.node_limit;
        std::optional<bram::ZCache> cache;
        if (!flags.cache_path.empty()) cache.emplace(flags.cache_path);
        bram::ZCache* cp = cache ? &*cache : nullptr;
        Json j;
        if (*rr >= 0) {
          bram::UpperBoundCheck check = bram::certify_upper_bound(cfg, *rr, budget, cp);
          j["r"] = *rr;
          j["lhs"] = check.lhs;
          j["rhs"] = check.rhs;
          j["certified"] = check.certified;
          if (check.certified) {
            bram::Certificate cert = bram::make_counting_certificate(cfg, *rr, check);
            apply_meta(cert, flags);
            j["certificate"] = bram::certificate_to_json(cert);
          }
          return {j, check.certified ? 0 : 1};
        }
        if (*rmax < 0) throw bram::ParseError("br upper needs --r or --rmax");
        std::optional<long long> best = bram::smallest_certified_r(cfg, *rmax, budget, cp);
        j["r_max"] = *rmax;
        j["smallest_certified_r"] = best ? Json(*best) : Json(nullptr);
        if (best) {
          bram::UpperBoundCheck check = bram::certify_upper_bound(cfg, *best, budget, cp);
          j["lhs"] = check.lhs;
          j["rhs"] = check.rhs;
          bram::Certificate cert = bram::make_counting_certificate(cfg, *best, check);
          apply_meta(cert, flags);
          j["certificate"] = bram::certificate_to_json(cert);
        }
        return {j, best ? 0 : 1};
      });
    });
  }

  // ---- lll ----------------------------------------------------------
  auto* lll = app.add_subcommand("lll", "local-lemma parameter checks and construction");
  lll->require_subcommand(1);
  {
    auto* check = lll->add_subcommand("check", "constant gate and condition margins");
    auto p = std::make_shared<int>(4), q = std::make_shared<int>(4);
    auto c1 = std::make_shared<double>(10), c2 = std::make_shared<double>(4),
         c4 = std::make_shared<double>(33);
    auto n_host = std::make_shared<long long>(1000000);
    check->add_option("--p", *p)->required();
    check->add_option("--q", *q)->required();
    check->add_option("--c1", *c1)->required();
    check->add_option("--c2", *c2)->required();
    check->add_option("--C4", *c4)->required();
    check->add_option("--N", *n_host)->required();
    check->callback([&action, p, q, c1, c2, c4, n_host] {
      action.push_back([p, q, c1, c2, c4, n_host]() -> Outcome {
        bram::ConstantsCheck gate = bram::check_constants(*c1, *c2, *c4);
        bram::LLLParameters params = bram::derive_params(*p, *q, *c1, *c2, *c4, *n_host);
        bram::LLLConditionReport rep = bram::check_lll_conditions(params);
        Json j;
        Json g;
        g["lhs"] = gate.lhs;
        g["rhs"] = gate.rhs;
        g["ok"] = gate.ok;
        j["constant_gate"] = std::move(g);
        Json pj;
        pj["s"] = params.s;
        pj["red_prob"] = params.red_prob;
        pj["red_prob_clamped"] = params.red_prob_clamped;
        pj["n"] = params.n_real;
        pj["n_int"] = params.n_int;
        pj["log_b"] = params.log_b;
        j["params"] = std::move(pj);
        Json cj;
        cj["applicable"] = rep.applicable;
        cj["reason"] = rep.reason;
        cj["cond_a_margin"] = rep.cond_a_margin;
        cj["cond_b_margin"] = rep.cond_b_margin;
        cj["term_aa"] = rep.term_aa;
        cj["term_ab"] = rep.term_ab;
        cj["term_ba"] = rep.term_ba;
        cj["term_bb"] = rep.term_bb;
        cj["counts_exact"] = rep.counts_exact;
        j["conditions"] = std::move(cj);
        return {j, 0};
      });
    });

    auto* construct = lll->add_subcommand("construct", "resampling construction of a good coloring");
    auto cons_pattern = std::make_shared<std::string>();
    auto cons_host = std::make_shared<int>(4);
    auto cons_n = std::make_shared<int>(2);
    auto red_prob = std::make_shared<double>(0.5);
    auto budget = std::make_shared<std::uint64_t>(100000);
    construct->add_option("--pattern", *cons_pattern)->required();
    construct->add_option("--N", *cons_host)->required();
    construct->add_option("--n", *cons_n)->required();
    construct->add_option("--red-prob", *red_prob)->required();
    construct->add_option("--budget", *budget)->required();
    construct->callback([&action, &flags, cons_pattern, cons_host, cons_n, red_prob, budget] {
      action.push_back([&flags, pattern_path=cons_pattern, n_host=cons_host, n=cons_n, red_prob, budget]() -> Outcome {
        bram::BipartiteGraph pattern = load_graph(*pattern_path);
        bram::ConstructResult res =
            bram::construct_coloring(pattern, *n_host, *n, *red_prob, flags.seed, *budget);
        Json j;
        Json stats;
        stats["rounds"] = res.stats.rounds;
        stats["red_events"] = res.stats.red_events;
        stats["blue_events"] = res.stats.blue_events;
        if (res.coloring) {
          bram::Certificate cert = bram::make_lll_certificate(pattern, *n, *res.coloring, flags.seed);
          apply_meta(cert, flags, flags.seed);
          j["success"] = true;
          j["stats"] = std::move(stats);
          j["certificate"] = bram::certificate_to_json(cert);
          return {j, 0};
        }
        j["success"] = false;
        j["exhausted"] = true;
        j["stats"] = std::move(stats);
        return {j, 2};
      });
    });

    auto* certify = lll->add_subcommand("certify", "re-check a coloring against pattern and biclique");
    auto cert_pattern = std::make_shared<std::string>();
    auto cert_n = std::make_shared<int>(2);
    auto cert_coloring = std::make_shared<std::string>();
    certify->add_option("--pattern", *cert_pattern)->required();
    certify->add_option("--n", *cert_n)->required();
    certify->add_option("--coloring", *cert_coloring)->required();
    certify->callback([&action, cert_pattern, cert_n, cert_coloring] {
      action.push_back([pattern_path=cert_pattern, n=cert_n, coloring_path=cert_coloring]() -> Outcome {
        bram::BipartiteGraph pattern = load_graph(*pattern_path);
        bram::EdgeColoring c = load_coloring(*coloring_path);
        bool ok = bram::certify_lower_bound(pattern, *n, c);
        Json j;
        j["certified"] = ok;
        return {j, ok ? 0 : 1};
      });
    });
  }

  // ---- embed --------------------------------------------------------
  auto* embed = app.add_subcommand("embed", "greedy blue embedding pipeline");
  embed->require_subcommand(1);
  {
    auto* run = embed->add_subcommand("run", "run the embedding pipeline");
    auto coloring_path = std::make_shared<std::string>(), target_path = std::make_shared<std::string>();
    auto t = std::make_shared<int>(2);
    auto c0 = std::make_shared<double>(0.25);
    auto no_phase1 = std::make_shared<bool>(false);
    run->add_option("--coloring", *coloring_path)->required();
    run->add_option("--target", *target_path)->required();
    run->add_option("--t", *t)->required();
    run->add_option("--c0", *c0);
    run->add_flag("--no-phase1", *no_phase1);
    run->callback([&action, &flags, coloring_path, target_path, t, c0, no_phase1] {
      action.push_back([&flags, coloring_path, target_path, t, c0, no_phase1]() -> Outcome {
        bram::EdgeColoring c = load_coloring(*coloring_path);
        bram::BipartiteGraph g = load_graph(*target_path);
        bram::PipelineResult res = bram::embed_pipeline(c, g, *t, *c0, !*no_phase1);
        Json j;
        j["below_theorem_threshold"] = res.below_theorem_threshold;
        j["target_connected"] = res.target_connected;
        j["w0_branch_taken"] = res.w0_branch_taken;
        j["lemma_status"] = res.lemma_status;
        j["phase1_used"] = res.phase1_used;
        j["phase1_degraded"] = res.phase1_degraded;
        switch (res.kind) {
          case bram::PipelineResult::Kind::Embedding: {
            bram::Certificate cert = *res.certificate;
            apply_meta(cert, flags);
            j["kind"] = "embedding";
            j["certificate"] = bram::certificate_to_json(cert);
            return {j, 0};
          }
          case bram::PipelineResult::Kind::RedCycle:
            j["kind"] = "red-cycle";
            j["red_cycle"] = bram::witness_to_json(*res.red_cycle);
            return {j, 0};
          case bram::PipelineResult::Kind::Stuck:
            j["kind"] = "stuck";
            j["stuck_report"] = bram::stuck_report_to_json(*res.stuck);
            j["diagnostics"] = bram::stuck_diagnostics_to_json(*res.diagnostics);
            return {j, 1};
          case bram::PipelineResult::Kind::Structural:
            j["kind"] = "structural-failure";
            return {j, 1};
        }
        return {j, 1};
      });
    });

    auto* diagnose = embed->add_subcommand("diagnose", "recount a stuck report against its coloring");
    auto report_path = std::make_shared<std::string>();
    auto diag_coloring = std::make_shared<std::string>();
    diagnose->add_option("--report", *report_path)->required();
    diagnose->add_option("--coloring", *diag_coloring)->required();
    diagnose->callback([&action, report_path, diag_coloring] {
      action.push_back([report_path, coloring_path=diag_coloring]() -> Outcome {
        bram::StuckReport rep = bram::stuck_report_from_json(bram::load_json_file(*report_path));
        bram::EdgeColoring c = load_coloring(*coloring_path);
        bram::EmbedConfig config;
        config.t = rep.t;
        config.m = rep.m;
        bram::StuckDiagnostics diag = bram::stuck_diagnostics(rep, c, config);
        return {bram::stuck_diagnostics_to_json(diag), 0};
      });
    });
  }

  // ---- verify ---------------------------------------------------------
  {
    auto* verify = app.add_subcommand("verify", "independently re-verify a certificate");
    auto cert_path = std::make_shared<std::string>();
    verify->add_option("--certificate", *cert_path)->required();
    verify->callback([&action, cert_path] {
      action.push_back([cert_path]() -> Outcome {
        bram::Certificate cert = bram::certificate_from_json(bram::load_json_file(*cert_path));
        bram::VerifyResult res = bram::verify_certificate(cert);
        Json j;
        j["verified"] = res.ok;
        j["failure"] = res.failure;
        return {j, res.ok ? 0 : 1};
      });
    });
  }

  auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  }

  if (action.empty()) {
    std::cerr << "usage error: no subcommand selected\n";
    return 3;
  }

  int code = 0;
  std::string body;
  try {
    Outcome out = action.front()();
    body = out.body.dump(2);
    body += "\n";
    code = out.exit_code;
  } catch (const bram::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const bram::ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const bram::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  std::cout << body << std::flush;

  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  Json manifest;
  std::vector<std::string> args(argv, argv + argc);
  manifest["subcommand"] = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
  manifest["argv"] = args;
  manifest["seed"] = flags.seed;
  Json budgets;
  budgets["threads"] = flags.threads;
  budgets["node_limit"] = flags.node_limit;
  budgets["time_limit_ms"] = flags.time_limit_ms;
  manifest["budgets"] = std::move(budgets);
  manifest["wall_ms"] = wall_ms;
  manifest["digest"] = hex64(fnv1a(body));
  std::cerr << manifest.dump() << "\n";
  return code;
}
