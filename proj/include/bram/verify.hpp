#pragma once

#include <cmath>
#include <string>

#include "bram/embedder.hpp"
#include "bram/lll.hpp"
#include "bram/ramsey_bounds.hpp"
#include "bram/serialize.hpp"
#include "bram/zarankiewicz.hpp"

namespace bram {

inline Certificate make_good_coloring_certificate(const BipartiteGraph& g1,
                                                  const BipartiteGraph& g2,
                                                  const EdgeColoring& coloring) {
  Certificate cert;
  cert.kind = CertificateKind::GoodColoring;
  int n = coloring.host_side();
  cert.claims.push_back("2-coloring of K_{" + std::to_string(n) + "," + std::to_string(n) +
                        "} with no red copy of G1 and no blue copy of G2");
  cert.claims.push_back("br(G1, G2) > " + std::to_string(n));
  cert.payload["g1"] = graph_to_json(g1);
  cert.payload["g2"] = graph_to_json(g2);
  cert.payload["coloring"] = coloring_to_json(coloring);
  return cert;
}

inline Certificate make_extremal_certificate(const ExtremalRecord& rec) {
  Certificate cert;
  cert.kind = CertificateKind::ExtremalGraph;
  std::string pat = rec.pattern.kind == ForbiddenPattern::Kind::Biclique
                        ? "K_{" + std::to_string(rec.pattern.param) + "," +
                              std::to_string(rec.pattern.param) + "}"
                        : "C_" + std::to_string(2 * rec.pattern.param);
  cert.claims.push_back("the witness subgraph of K_{" + std::to_string(rec.r) + "," +
                        std::to_string(rec.r) + "} has " + std::to_string(rec.value) +
                        " edges and no " + pat);
  cert.claims.push_back("exhaustive search: z(" + std::to_string(rec.r) + "; " + pat +
                        ") = " + std::to_string(rec.value));
  cert.payload = extremal_record_to_json(rec);
  return cert;
}

inline Certificate make_counting_certificate(const CountingConfig& cfg, long long r,
                                             const UpperBoundCheck& check) {
  Certificate cert;
  cert.kind = CertificateKind::CountingUpperBound;
  cert.claims.push_back("k*z(r;C_{2t}) + z(r;K_{n,n}) = " + std::to_string(check.lhs) + " < " +
                        std::to_string(check.rhs) + " = r^2 at r = " + std::to_string(r));
  cert.claims.push_back("br_" + std::to_string(cfg.k) + "(C_" + std::to_string(2 * cfg.t) +
                        "; K_{" + std::to_string(cfg.n) + "," + std::to_string(cfg.n) +
                        "}) <= " + std::to_string(r));
  cert.payload["n"] = cfg.n;
  cert.payload["t"] = cfg.t;
  cert.payload["k"] = cfg.k;
  cert.payload["c"] = cfg.c;
  cert.payload["mode"] = cfg.mode == CountMode::Exact ? "exact" : "bound";
  cert.payload["r"] = r;
  cert.payload["lhs"] = check.lhs;
  cert.payload["rhs"] = check.rhs;
  return cert;
}

struct VerifyResult {
  bool ok = false;
  std::string failure;  // names the failing claim when !ok
};

/// Re-verifies a certificate with fresh, producer-independent checks:
/// pattern searches for witness kinds, recomputation for inequality kinds.
inline VerifyResult verify_certificate(const Certificate& cert) {
  VerifyResult out;
  try {
    switch (cert.kind) {
      case CertificateKind::GoodColoring: {
        BipartiteGraph g1 = graph_from_json(detail::require_field(cert.payload, "g1", "payload"));
        BipartiteGraph g2 = graph_from_json(detail::require_field(cert.payload, "g2", "payload"));
        EdgeColoring c =
            coloring_from_json(detail::require_field(cert.payload, "coloring", "payload"));
        if (c.num_colors() != 2) {
          out.failure = "good-coloring payload must be 2-colored";
          return out;
        }
        if (find_subgraph_copy(c.color_class(0), g1)) {
          out.failure = "red class contains a copy of G1";
          return out;
        }
        if (find_subgraph_copy(c.color_class(1), g2)) {
          out.failure = "blue class contains a copy of G2";
          return out;
        }
        break;
      }
      case CertificateKind::ExtremalGraph: {
        ExtremalRecord rec = extremal_record_from_json(cert.payload);
        if (rec.witness.left_size() > rec.r || rec.witness.right_size() > rec.r) {
          out.failure = "extremal witness does not fit in K_{r,r}";
          return out;
        }
        if (rec.witness.edge_count() != rec.value) {
          out.failure = "extremal witness edge count differs from the claimed value";
          return out;
        }
        if (rec.value > rec.r * rec.r) {
          out.failure = "claimed value exceeds r^2";
          return out;
        }
        bool clean = rec.pattern.kind == ForbiddenPattern::Kind::Biclique
                         ? !find_biclique(rec.witness, rec.pattern.param).has_value()
                         : !find_even_cycle(rec.witness, 2 * rec.pattern.param).has_value();
        if (!clean) {
          out.failure = "extremal witness contains the forbidden pattern";
          return out;
        }
        break;
      }
      case CertificateKind::CountingUpperBound: {
        CountingConfig cfg;
        cfg.n = int(detail::require_int(cert.payload, "n", "payload"));
        cfg.t = int(detail::require_int(cert.payload, "t", "payload"));
        cfg.k = int(detail::require_int(cert.payload, "k", "payload"));
        const Json& c = detail::require_field(cert.payload, "c", "payload");
        cfg.c = c.is_number() ? c.get<double>() : 1.0;
        const Json& mode = detail::require_field(cert.payload, "mode", "payload");
        cfg.mode = mode == "exact" ? CountMode::Exact : CountMode::Bound;
        long long r = detail::require_int(cert.payload, "r", "payload");
        const Json& lhs = detail::require_field(cert.payload, "lhs", "payload");
        const Json& rhs = detail::require_field(cert.payload, "rhs", "payload");
        UpperBoundCheck fresh = certify_upper_bound(cfg, r);
        if (!fresh.certified) {
          out.failure = "counting inequality does not certify on recomputation";
          return out;
        }
        double tol = 1e-9 * std::max(1.0, std::abs(fresh.lhs));
        if (!lhs.is_number() || !rhs.is_number() ||
            std::abs(lhs.get<double>() - fresh.lhs) > tol ||
            std::abs(rhs.get<double>() - fresh.rhs) > tol) {
          out.failure = "claimed lhs/rhs differ from recomputation";
          return out;
        }
        break;
      }
      case CertificateKind::LllLowerBound: {
        BipartiteGraph pattern =
            graph_from_json(detail::require_field(cert.payload, "pattern", "payload"));
        int n = int(detail::require_int(cert.payload, "n", "payload"));
        EdgeColoring c =
            coloring_from_json(detail::require_field(cert.payload, "coloring", "payload"));
        if (!certify_lower_bound(pattern, n, c)) {
          out.failure = "coloring admits a red pattern copy or a blue biclique";
          return out;
        }
        break;
      }
      case CertificateKind::Embedding: {
        BipartiteGraph target =
            graph_from_json(detail::require_field(cert.payload, "target", "payload"));
        EdgeColoring c =
            coloring_from_json(detail::require_field(cert.payload, "coloring", "payload"));
        const Json& e = detail::require_field(cert.payload, "embedding", "payload");
        Embedding emb;
        for (const Json& x : detail::require_field(e, "map_left", "embedding"))
          emb.image_left.push_back(x.get<int>());
        for (const Json& x : detail::require_field(e, "map_right", "embedding"))
          emb.image_right.push_back(x.get<int>());
        const Json& fl = detail::require_field(e, "flipped", "embedding");
        emb.flipped = fl.is_boolean() && fl.get<bool>();
        if (!verify_embedding(c, target, emb)) {
          out.failure = "claimed embedding is not an injective all-blue copy";
          return out;
        }
        break;
      }
    }
  } catch (const ParseError& e) {
    out.failure = std::string("payload malformed: ") + e.what();
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace bram
