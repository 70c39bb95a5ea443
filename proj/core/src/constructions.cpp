#include "turan/constructions.hpp"

#include "turan/error.hpp"

namespace turan {

namespace {

void add_clique(std::vector<Edge>& edges, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back(Edge::of(vs[i], vs[j]));
  }
}

}  // namespace

std::vector<Edge> bipartite_matching_edges(int n) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "bipartite_matching needs n >= 4");
  int first = n / 2;
  if (n % 4 == 2) first -= 1;
  const int second = n - first;

  std::vector<Edge> edges;
  for (int a = 0; a < first; ++a) {
    for (int b = first; b < n; ++b) edges.push_back(Edge{a, b});
  }
  const int start = first % 2 == 0 ? 0 : first;
  const int size = first % 2 == 0 ? first : second;
  for (int i = 0; i + 1 < size; i += 2) edges.push_back(Edge{start + i, start + i + 1});
  return edges;
}

Graph bipartite_matching(int n) {
  if (n > kMaxVertices) throw Error(ErrorCode::kInvalidArgument, "bipartite_matching needs n <= 64");
  return Graph::from_edges(n, bipartite_matching_edges(n));
}

Graph small_extremal(int n) {
  std::vector<Edge> edges;
  switch (n) {
    case 4:
    case 5:
      add_clique(edges, {0, 1, 2, 3});
      break;
    case 6:
      add_clique(edges, {0, 1, 2, 3});
      add_clique(edges, {0, 4, 5});
      break;
    case 7:
      add_clique(edges, {0, 1, 2, 3});
      add_clique(edges, {0, 4, 5, 6});
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument, "small_extremal is defined for n = 4..7");
  }
  return Graph::from_edges(n, edges);
}

Graph sixteen_vertex() {
  auto u = [](int i) { return i; };
  auto b = [](int i) { return 4 + i; };
  auto o = [](int i) { return 8 + i; };
  auto r = [](int i) { return 12 + i; };
  std::vector<Edge> edges;
  add_clique(edges, {u(0), u(1), u(2), u(3)});
  add_clique(edges, {b(0), b(1), b(2), b(3)});
  add_clique(edges, {o(0), o(1), o(2), o(3)});
  add_clique(edges, {r(0), r(1), r(2), r(3)});
  for (int i = 0; i < 4; ++i) add_clique(edges, {u(i), b(i), o(i), r(i)});
  return Graph::from_edges(16, edges);
}

Graph book(int s) {
  if (s < 1 || s + 2 > kMaxVertices) throw Error(ErrorCode::kInvalidArgument, "book needs 1 <= s <= 62");
  std::vector<Edge> edges{Edge{0, 1}};
  for (int p = 2; p < s + 2; ++p) {
    edges.push_back(Edge{0, p});
    edges.push_back(Edge{1, p});
  }
  return Graph::from_edges(s + 2, edges);
}

Graph complete(int k) {
  if (k < 1 || k > kMaxVertices) throw Error(ErrorCode::kInvalidArgument, "complete needs 1 <= k <= 64");
  std::vector<int> all(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) all[v] = v;
  std::vector<Edge> edges;
  add_clique(edges, all);
  return Graph::from_edges(k, edges);
}

const std::vector<ConstructionFamily>& construction_families() {
  static const std::vector<ConstructionFamily> families{
      {Family::kSmallExtremal, "small", true},
      {Family::kBipartiteMatching, "bipartite", true},
      {Family::kSixteenVertex, "sixteen", true},
      {Family::kBook, "book", true},
      {Family::kComplete, "complete", false},
  };
  return families;
}

const ConstructionFamily& family_by_name(const std::string& name) {
  for (const auto& f : construction_families()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction family '" + name + "'");
}

Graph build(Family family, int param) {
  switch (family) {
    case Family::kSmallExtremal: return small_extremal(param);
    case Family::kBipartiteMatching: return bipartite_matching(param);
    case Family::kSixteenVertex: return sixteen_vertex();
    case Family::kBook: return book(param);
    case Family::kComplete: return complete(param);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction family");
}

std::size_t expected_triangles(Family family, int param) {
  const auto p = static_cast<std::size_t>(param);
  switch (family) {
    case Family::kSmallExtremal: {
      static constexpr std::size_t kSmall[] = {4, 4, 5, 8};
      if (param < 4 || param > 7) throw Error(ErrorCode::kInvalidArgument, "small_extremal is defined for n = 4..7");
      return kSmall[param - 4];
    }
    case Family::kBipartiteMatching: return p * p / 8;
    case Family::kSixteenVertex: return 32;
    case Family::kBook: return p;
    case Family::kComplete: return p < 3 ? 0 : p * (p - 1) * (p - 2) / 6;
  }
  return 0;
}

}  // namespace turan
