#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

using Quad = std::array<int, 4>;

/// Lexicographically least 4-set inducing K4, if any.
std::optional<Quad> find_k4(const Graph& g);

enum class ComponentKind { kTriangle, kStar, kOther };

/// A connected component of G[X_i]. Stars include K1 (r = 1) and K2 (r = 2).
struct XComponent {
  ComponentKind kind = ComponentKind::kOther;
  VertexSet vertices = 0;
  int edges = 0;
  std::optional<int> center;  // stars with r >= 3 only
};

enum class Verdict { kHolds, kNotApplicable, kViolated };

std::string to_string(Verdict v);

/// One X_i = N(u_i) - S for a K4 on S = {u_0, ..., u_3}.
struct NeighborhoodPart {
  int anchor = 0;       // u_i
  VertexSet members = 0;
  int size = 0;         // x_i
  int edges = 0;        // e(X_i)
  std::vector<XComponent> components;
  bool p4_free = false;
};

struct K4NeighborhoodReport {
  Quad s{};
  std::array<NeighborhoodPart, 4> parts{};
  bool pairwise_disjoint = false;
  bool size_bound = false;        // sum x_i <= n - 4
  bool s_is_block = false;        // the 6 edges of S form a whole triangle block
  std::size_t triangles_meeting_s = 0;
  std::size_t predicted_triangles = 0;  // sum e(X_i) + 4
  Verdict triangle_count = Verdict::kNotApplicable;
};

/// Describes X_i = N(u_i) - S for each vertex of the K4 on S. The relation
/// t(S) = sum e(X_i) + 4 is only judged when S is a triangle block by itself.
K4NeighborhoodReport neighborhood_structure(const Graph& g, const Quad& s);

struct FloorAuditResult {
  std::int64_t checked_to = 0;
  std::optional<std::int64_t> first_violation;  // n of the first failing identity
  bool passed() const noexcept { return !first_violation.has_value(); }
};

/// For 12 <= n <= n_max checks floor(n^2/8) - floor((n-1)^2/8) >= floor(n/4)
/// and floor(n^2/8) - floor((n-4)^2/8) = n - 2.
FloorAuditResult floor_identity_audit(std::int64_t n_max);

struct ThresholdAuditResult {
  std::int64_t n_max = 0;

  // Case 1 endpoint: 3(floor(n^2/8)+1) > (3n^2 + 26n - 61)/12 for every
  // n >= 17, n = 2 (mod 3). The least residue-class n from which it holds
  // throughout is recorded for reference.
  std::optional<std::int64_t> case1_violation;
  std::int64_t case1_holds_from = 0;

  // Case 2 endpoint: floor(n^2/8) + 1 > n(n+8)/12 holds for 12 <= n <= n_max
  // exactly when n >= 15.
  std::optional<std::int64_t> case2_violation;

  // Cauchy-Schwarz floor 4 * sum x_i^2 >= m^2 over all compositions
  // x_0 + x_1 + x_2 + x_3 = m, m <= 32.
  std::uint64_t compositions_checked = 0;
  std::optional<std::array<int, 4>> cauchy_schwarz_violation;

  // The two algebraic regroupings feeding each case's endpoint, evaluated
  // exactly (scaled by 12) on every composition with sum = n - 5 or n - 4.
  std::optional<std::array<std::int64_t, 5>> regrouping_violation;  // {n, x0..x3}

  bool passed() const noexcept {
    return !case1_violation && !case2_violation && !cauchy_schwarz_violation && !regrouping_violation;
  }
};

/// Audits the closing inequalities of the K4 induction step over
/// 12 <= n <= n_max (n_max >= 17).
ThresholdAuditResult case_threshold_audit(std::int64_t n_max);

}  // namespace turan
