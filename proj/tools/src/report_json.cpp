#include "turan_cli/report_json.hpp"

#include "turan/graph6.hpp"

namespace turan::cli {

namespace {

Json vertex_list(VertexSet s) {
  Json out = Json::array();
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::kK4: return "k4";
    case BlockKind::kBook: return "book";
    case BlockKind::kOther: return "other";
  }
  return "other";
}

std::string component_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::kTriangle: return "triangle";
    case ComponentKind::kStar: return "star";
    case ComponentKind::kOther: return "other";
  }
  return "other";
}

}  // namespace

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }
Json to_json(const Triangle& t) { return Json::array({t.a, t.b, t.c}); }

Json to_json(const SuspensionWitness& w) {
  return Json{{"apex", w.apex}, {"path", Json::array({w.path[0], w.path[1], w.path[2], w.path[3]})}};
}

Json to_json(const BlockDecomposition& d) {
  Json blocks = Json::array();
  for (const TriangleBlock& b : d.blocks) {
    Json edges = Json::array();
    for (const Edge& e : b.edges) edges.push_back(to_json(e));
    Json tris = Json::array();
    for (const Triangle& t : b.triangles) tris.push_back(to_json(t));
    blocks.push_back(Json{
        {"class", describe(b.classification)},
        {"kind", kind_name(b.classification.kind)},
        {"pages", b.classification.kind == BlockKind::kBook ? Json(b.classification.pages) : Json(nullptr)},
        {"base", b.classification.base ? to_json(*b.classification.base) : Json(nullptr)},
        {"vertices", vertex_list(b.vertices)},
        {"edges", std::move(edges)},
        {"triangles", std::move(tris)},
    });
  }
  Json stray = Json::array();
  for (const Edge& e : d.stray_edges) stray.push_back(to_json(e));
  return Json{{"blocks", std::move(blocks)}, {"stray_edges", std::move(stray)}};
}

Json block_summary(const BlockDecomposition& d) {
  int k4 = 0;
  int books = 0;
  int other = 0;
  Json classes = Json::array();
  for (const TriangleBlock& b : d.blocks) {
    switch (b.classification.kind) {
      case BlockKind::kK4: ++k4; break;
      case BlockKind::kBook: ++books; break;
      case BlockKind::kOther: ++other; break;
    }
    classes.push_back(describe(b.classification));
  }
  return Json{{"k4", k4}, {"books", books}, {"other", other}, {"classes", std::move(classes)}};
}

Json to_json(const SearchReport& r, bool timing) {
  Json out{
      {"n", r.n},
      {"t", r.t},
      {"outcome", r.outcome == SearchOutcome::kExhausted ? "exhausted" : "counterexample_found"},
      {"candidate_count", r.candidate_count},
      {"subsets_total", r.subsets_total},
      {"graphs_examined", r.graphs_examined},
      {"unions_p4free_with_excess", r.unions_p4free_with_excess},
      {"certifies_upper_bound", r.certifies_upper_bound},
  };
  if (r.counterexample) {
    Json tris = Json::array();
    for (const Triangle& t : r.counterexample_triangles) tris.push_back(to_json(t));
    out["counterexample"] = Json{
        {"rank", *r.counterexample_rank},
        {"graph6", encode_graph6(*r.counterexample)},
        {"triangle_count", count_triangles(*r.counterexample)},
        {"chosen_triangles", std::move(tris)},
    };
  } else {
    out["counterexample"] = nullptr;
  }
  if (timing) out["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

Json to_json(const ExtremalResult& r, bool timing) {
  Json configs = Json::array();
  for (const ExtremalConfig& c : r.configs) {
    const BlockDecomposition d = decompose(c.graph);
    configs.push_back(Json{
        {"graph6", c.form.graph6},
        {"edges", c.graph.edge_count()},
        {"triangles", count_triangles(c.graph)},
        {"blocks", block_summary(d)},
    });
  }
  return Json{
      {"n", r.n},
      {"ex_value", r.ex_value},
      {"method", r.upper_bound_search ? "pinned_search" : "exhaustive"},
      {"config_count", r.configs.size()},
      {"configs", std::move(configs)},
      {"upper_bound_search", r.upper_bound_search ? to_json(*r.upper_bound_search, timing) : Json(nullptr)},
  };
}

Json to_json(const K4NeighborhoodReport& r) {
  Json parts = Json::array();
  for (const NeighborhoodPart& p : r.parts) {
    Json comps = Json::array();
    for (const XComponent& c : p.components) {
      comps.push_back(Json{{"kind", component_name(c.kind)},
                           {"vertices", vertex_list(c.vertices)},
                           {"edges", c.edges},
                           {"center", optional_value(c.center)}});
    }
    parts.push_back(Json{{"anchor", p.anchor},
                         {"members", vertex_list(p.members)},
                         {"size", p.size},
                         {"edges", p.edges},
                         {"p4_free", p.p4_free},
                         {"components", std::move(comps)}});
  }
  return Json{{"s", Json::array({r.s[0], r.s[1], r.s[2], r.s[3]})},
              {"parts", std::move(parts)},
              {"pairwise_disjoint", r.pairwise_disjoint},
              {"size_bound", r.size_bound},
              {"s_is_block", r.s_is_block},
              {"triangles_meeting_s", r.triangles_meeting_s},
              {"predicted_triangles", r.predicted_triangles},
              {"triangle_count", to_string(r.triangle_count)}};
}

Json to_json(const FloorAuditResult& r) {
  return Json{{"checked_from", 12},
              {"checked_to", r.checked_to},
              {"first_violation", optional_value(r.first_violation)},
              {"passed", r.passed()}};
}

Json to_json(const ThresholdAuditResult& r) {
  auto quad = [](const std::optional<std::array<int, 4>>& q) {
    return q ? Json::array({(*q)[0], (*q)[1], (*q)[2], (*q)[3]}) : Json(nullptr);
  };
  Json regroup = nullptr;
  if (r.regrouping_violation) {
    const auto& v = *r.regrouping_violation;
    regroup = Json::array({v[0], v[1], v[2], v[3], v[4]});
  }
  return Json{{"n_max", r.n_max},
              {"case1_violation", optional_value(r.case1_violation)},
              {"case1_holds_from", r.case1_holds_from},
              {"case2_violation", optional_value(r.case2_violation)},
              {"compositions_checked", r.compositions_checked},
              {"cauchy_schwarz_violation", quad(r.cauchy_schwarz_violation)},
              {"regrouping_violation", std::move(regroup)},
              {"passed", r.passed()}};
}

}  // namespace turan::cli
