#include "turan/bounds.hpp"

#include <algorithm>

#include "turan/blocks.hpp"
#include "turan/error.hpp"
#include "turan/pattern.hpp"

namespace turan {

namespace {

constexpr std::int64_t kAuditLimit = 1'000'000'000;  // keeps n^2 and 36 n^2 inside int64

std::int64_t floor_sq8(std::int64_t n) { return n * n / 8; }

std::vector<XComponent> components_of(const Graph& g, VertexSet members) {
  std::vector<XComponent> out;
  VertexSet left = members;
  while (left != 0) {
    VertexSet comp = bit(lowest(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      const int v = lowest(frontier);
      frontier &= frontier - 1;
      const VertexSet fresh = g.neighbors(v) & members & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    left &= ~comp;

    XComponent c;
    c.vertices = comp;
    int twice = 0;
    int max_deg = 0;
    int hub = -1;
    for_each_vertex(comp, [&](int v) {
      const int d = popcount(g.neighbors(v) & comp);
      twice += d;
      if (d > max_deg) {
        max_deg = d;
        hub = v;
      }
    });
    c.edges = twice / 2;
    const int r = popcount(comp);
    if (r == 3 && c.edges == 3) {
      c.kind = ComponentKind::kTriangle;
    } else if (c.edges == r - 1 && max_deg == r - 1) {
      c.kind = ComponentKind::kStar;
      if (r >= 3) c.center = hub;
    } else {
      c.kind = ComponentKind::kOther;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kNotApplicable: return "not_applicable";
    case Verdict::kViolated: return "violated";
  }
  return "not_applicable";
}

std::optional<Quad> find_k4(const Graph& g) {
  for (int a = 0; a < g.order(); ++a) {
    const VertexSet na = g.neighbors(a) & ~low_mask(a + 1);
    VertexSet bs = na;
    while (bs != 0) {
      const int b = lowest(bs);
      bs &= bs - 1;
      const VertexSet nab = na & g.neighbors(b) & ~low_mask(b + 1);
      VertexSet cs = nab;
      while (cs != 0) {
        const int c = lowest(cs);
        cs &= cs - 1;
        const VertexSet ds = nab & g.neighbors(c) & ~low_mask(c + 1);
        if (ds != 0) return Quad{a, b, c, lowest(ds)};
      }
    }
  }
  return std::nullopt;
}

K4NeighborhoodReport neighborhood_structure(const Graph& g, const Quad& s) {
  VertexSet sset = 0;
  for (int u : s) {
    if (u < 0 || u >= g.order()) {
      throw Error(ErrorCode::kVertexOutOfRange, "K4 vertex " + std::to_string(u) + " out of range");
    }
    sset |= bit(u);
  }
  bool clique = popcount(sset) == 4;
  for (int u : s) clique = clique && (g.neighbors(u) & sset) == (sset & ~bit(u));
  if (!clique) throw Error(ErrorCode::kPreconditionViolated, "S does not induce a K4");

  K4NeighborhoodReport r;
  r.s = s;
  VertexSet covered = 0;
  bool disjoint = true;
  int total = 0;
  std::size_t predicted = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    NeighborhoodPart& p = r.parts[i];
    p.anchor = s[i];
    p.members = g.neighbors(s[i]) & ~sset;
    p.size = popcount(p.members);
    disjoint = disjoint && (covered & p.members) == 0;
    covered |= p.members;
    total += p.size;
    const InducedSubgraph sub = induced_subgraph(g, p.members);
    p.edges = static_cast<int>(sub.graph.edge_count());
    p.components = components_of(g, p.members);
    p.p4_free = sub.labels.empty() || !contains_path4(sub.graph).has_value();
    predicted += static_cast<std::size_t>(p.edges);
  }
  r.pairwise_disjoint = disjoint;
  r.size_bound = total <= g.order() - 4;

  std::size_t meeting = 0;
  for (const Triangle& t : enumerate_triangles(g)) {
    if (t.vertices() & sset) ++meeting;
  }
  r.triangles_meeting_s = meeting;
  r.predicted_triangles = predicted;

  const Edge first{std::min(s[0], s[1]), std::max(s[0], s[1])};
  for (const TriangleBlock& b : decompose(g).blocks) {
    if (std::binary_search(b.edges.begin(), b.edges.end(), first)) {
      r.s_is_block = b.edges.size() == 6 && b.vertices == sset;
      break;
    }
  }
  if (r.s_is_block) {
    r.triangle_count = meeting == predicted ? Verdict::kHolds : Verdict::kViolated;
  }
  return r;
}

FloorAuditResult floor_identity_audit(std::int64_t n_max) {
  if (n_max < 12) throw Error(ErrorCode::kInvalidArgument, "n_max must be at least 12");
  if (n_max > kAuditLimit) throw Error(ErrorCode::kSizeGuard, "n_max above 1e9");
  FloorAuditResult r;
  r.checked_to = n_max;
  for (std::int64_t n = 12; n <= n_max; ++n) {
    const std::int64_t f = floor_sq8(n);
    if (f - floor_sq8(n - 1) < n / 4 || f - floor_sq8(n - 4) != n - 2) {
      r.first_violation = n;
      break;
    }
  }
  return r;
}

ThresholdAuditResult case_threshold_audit(std::int64_t n_max) {
  if (n_max < 17) throw Error(ErrorCode::kInvalidArgument, "n_max must be at least 17");
  if (n_max > kAuditLimit) throw Error(ErrorCode::kSizeGuard, "n_max above 1e9");
  ThresholdAuditResult r;
  r.n_max = n_max;

  // Case 1, scaled by 12: 36 (floor(n^2/8) + 1) > 3n^2 + 26n - 61.
  std::int64_t last_fail = -1;
  for (std::int64_t n = 2; n <= n_max; n += 3) {
    const bool ok = 36 * (floor_sq8(n) + 1) > 3 * n * n + 26 * n - 61;
    if (!ok) {
      last_fail = n;
      if (n >= 17 && !r.case1_violation) r.case1_violation = n;
    }
  }
  r.case1_holds_from = last_fail + 3;

  // Case 2, scaled by 12: 12 (floor(n^2/8) + 1) > n (n + 8).
  for (std::int64_t n = 12; n <= n_max; ++n) {
    const bool contradiction = 12 * (floor_sq8(n) + 1) > n * (n + 8);
    if (contradiction != (n >= 15)) {
      r.case2_violation = n;
      break;
    }
  }

  for (int m = 0; m <= 32 && !r.cauchy_schwarz_violation; ++m) {
    for (int a = 0; a <= m; ++a) {
      for (int b = 0; a + b <= m; ++b) {
        for (int c = 0; a + b + c <= m; ++c) {
          const int d = m - a - b - c;
          ++r.compositions_checked;
          if (4 * (a * a + b * b + c * c + d * d) < m * m && !r.cauchy_schwarz_violation) {
            r.cauchy_schwarz_violation = std::array<int, 4>{a, b, c, d};
          }
        }
      }
    }
  }

  // Regroupings, times 3:
  //   sum x = n-5: 2P + 9(n-5) + 3(n+7) + 2(n-5) = (n-5)^2 - Q + 14n - 34
  //   sum x = n-4: 2P + 9(n-4) + 3(n+8)           = (n-4)^2 - Q + 12n - 12
  // with P = sum_{i<j} x_i x_j and Q = sum x_i^2.
  const std::int64_t regroup_top = std::min<std::int64_t>(n_max, 40);
  for (std::int64_t n = 12; n <= regroup_top && !r.regrouping_violation; ++n) {
    for (const std::int64_t slack : {5, 4}) {
      const std::int64_t m = n - slack;
      for (std::int64_t a = 0; a <= m; ++a) {
        for (std::int64_t b = 0; a + b <= m; ++b) {
          for (std::int64_t c = 0; a + b + c <= m; ++c) {
            const std::int64_t d = m - a - b - c;
            const std::int64_t p = a * b + a * c + a * d + b * c + b * d + c * d;
            const std::int64_t q = a * a + b * b + c * c + d * d;
            const bool ok = slack == 5
                                ? 2 * p + 9 * m + 3 * (n + 7) + 2 * (n - 5) == m * m - q + 14 * n - 34
                                : 2 * p + 9 * m + 3 * (n + 8) == m * m - q + 12 * n - 12;
            if (!ok && !r.regrouping_violation) {
              r.regrouping_violation = std::array<std::int64_t, 5>{n, a, b, c, d};
            }
          }
        }
      }
    }
  }
  return r;
}

}  // namespace turan
