#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "turan/combinations.hpp"
#include "turan/constructions.hpp"
#include "turan/error.hpp"
#include "turan/graph6.hpp"
#include "turan/pattern.hpp"

namespace turan {

namespace {

constexpr int kSearchCapacity = 16;
constexpr std::uint64_t kNoChunk = std::numeric_limits<std::uint64_t>::max();

using Rows = std::array<VertexSet, kSearchCapacity>;

std::vector<Triangle> all_triangles(int n) {
  std::vector<Triangle> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) out.push_back(Triangle{a, b, c});
  return out;
}

void require_pinned(std::span<const Triangle> fixed) {
  const auto pinned = pinned_triangles();
  std::vector<Triangle> given(fixed.begin(), fixed.end());
  std::sort(given.begin(), given.end());
  if (given != pinned) {
    throw Error(ErrorCode::kUnsupportedFixedSet, "only the fixed triangle pair {012, 013} is supported");
  }
}

// Union of triangle edge sets with per-edge multiplicities, so triangles can
// be pushed and popped in any order.
class UnionBuilder {
 public:
  explicit UnionBuilder(int n) : n_(n) {}

  void add(const Triangle& t) noexcept {
    link(t.a, t.b);
    link(t.a, t.c);
    link(t.b, t.c);
  }
  void remove(const Triangle& t) noexcept {
    unlink(t.a, t.b);
    unlink(t.a, t.c);
    unlink(t.b, t.c);
  }
  std::span<const VertexSet> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  const Rows& raw() const noexcept { return rows_; }
  bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }

 private:
  void link(int u, int v) noexcept {
    if (mult_[u][v]++ == 0) {
      rows_[u] |= bit(v);
      rows_[v] |= bit(u);
    }
  }
  void unlink(int u, int v) noexcept {
    if (--mult_[u][v] == 0) {
      rows_[u] &= ~bit(v);
      rows_[v] &= ~bit(u);
    }
  }

  int n_;
  Rows rows_{};
  std::array<std::array<std::uint16_t, kSearchCapacity>, kSearchCapacity> mult_{};
};

Graph rows_to_graph(int n, const Rows& rows) {
  return Graph::from_rows(std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(n)));
}

enum class Mode { kFirstFree, kCollectExact };

struct ChunkResult {
  std::uint64_t examined = 0;
  std::uint64_t excess = 0;
  std::optional<std::uint64_t> found_rank;
  std::vector<int> found_combo;
  std::vector<Rows> collected;
};

ChunkResult run_chunk(const SearchSpec& spec, RankRange range, Mode mode, std::uint64_t chunk,
                      const std::atomic<std::uint64_t>& stop_chunk, std::uint64_t verify_stride) {
  ChunkResult out;
  if (range.size() == 0) return out;
  const int k = spec.subset_size();
  const int universe = static_cast<int>(spec.candidates.size());
  const auto t = static_cast<std::size_t>(spec.t);

  UnionBuilder builder(spec.n);
  for (const Triangle& f : spec.fixed) builder.add(f);
  std::vector<int> combo = unrank_colex(range.begin, k);
  for (int idx : combo) builder.add(spec.candidates[static_cast<std::size_t>(idx)]);
  std::vector<int> before(combo.size());

  for (std::uint64_t rank = range.begin; rank < range.end; ++rank) {
    if (mode == Mode::kFirstFree && (rank & 0xFFF) == 0 &&
        stop_chunk.load(std::memory_order_relaxed) < chunk) {
      break;  // a lower chunk already holds the answer
    }
    if (verify_stride != 0 && rank % verify_stride == 0) {
      std::vector<Triangle> ts = spec.fixed;
      for (int idx : combo) ts.push_back(spec.candidates[static_cast<std::size_t>(idx)]);
      const Graph fresh = union_of_triangles(spec.n, ts);
      if (!std::equal(fresh.rows().begin(), fresh.rows().end(), builder.rows().begin()) ||
          count_triangles(fresh) < t) {
        throw std::logic_error("incremental union diverged at rank " + std::to_string(rank));
      }
    }

    ++out.examined;
    if (!detail::has_suspension_p4(builder.rows())) {
      const std::size_t tri = detail::count_triangles(builder.rows());
      if (mode == Mode::kFirstFree) {
        if (tri > t) ++out.excess;
        out.found_rank = rank;
        out.found_combo = combo;
        return out;
      }
      if (tri == t) out.collected.push_back(builder.raw());
    }

    if (rank + 1 == range.end) break;
    std::copy(combo.begin(), combo.end(), before.begin());
    const int moved = next_colex(combo, universe);
    for (int i = 0; i <= moved; ++i) {
      builder.remove(spec.candidates[static_cast<std::size_t>(before[static_cast<std::size_t>(i)])]);
    }
    for (int i = 0; i <= moved; ++i) {
      builder.add(spec.candidates[static_cast<std::size_t>(combo[static_cast<std::size_t>(i)])]);
    }
  }
  std::sort(out.collected.begin(), out.collected.end());
  out.collected.erase(std::unique(out.collected.begin(), out.collected.end()), out.collected.end());
  return out;
}

// Runs fn(chunk) for every chunk on `workers` threads, handing chunks out in
// increasing order.
template <typename Fn>
void for_each_chunk(std::uint64_t chunks, int workers, Fn&& fn) {
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto drain = [&]() {
    try {
      for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) fn(c);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

void validate_search(int n, int t, const SearchOptions& options) {
  if (options.workers < 1) throw Error(ErrorCode::kInvalidArgument, "worker count must be at least 1");
  if (options.chunks < 1) throw Error(ErrorCode::kInvalidArgument, "chunk count must be at least 1");
  if (n < 5) throw Error(ErrorCode::kInvalidArgument, "search needs n >= 5");
  if (n > options.limits.max_n || n > kSearchCapacity) {
    throw Error(ErrorCode::kResourceGuard,
                "search limited to n <= " + std::to_string(std::min(options.limits.max_n, kSearchCapacity)));
  }
  if (t < 3) throw Error(ErrorCode::kInvalidArgument, "search needs t >= 3");
}

struct CollectResult {
  std::vector<Rows> graphs;
  std::uint64_t examined = 0;
};

CollectResult collect_exact(const SearchSpec& spec, const SearchOptions& options) {
  const std::uint64_t chunks = options.chunks;
  const int k = spec.subset_size();
  const int total = static_cast<int>(spec.candidates.size());
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> never{kNoChunk};
  std::mutex progress_mutex;
  for_each_chunk(chunks, options.workers, [&](std::uint64_t c) {
    results[c] = run_chunk(spec, combination_rank_range(total, k, c, chunks), Mode::kCollectExact, c, never,
                           options.verify_stride);
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(ChunkProgress{c, chunks, results[c].examined});
    }
  });
  CollectResult out;
  for (auto& r : results) {
    out.examined += r.examined;
    out.graphs.insert(out.graphs.end(), r.collected.begin(), r.collected.end());
  }
  std::sort(out.graphs.begin(), out.graphs.end());
  out.graphs.erase(std::unique(out.graphs.begin(), out.graphs.end()), out.graphs.end());
  return out;
}

void add_config(std::map<CanonicalForm, Graph>& into, const Graph& g) {
  CanonicalForm form = canonical_form(g);
  if (!into.contains(form)) {
    Graph canon = decode_graph6(form.graph6);
    into.emplace(std::move(form), std::move(canon));
  }
}

std::vector<ExtremalConfig> to_configs(const std::map<CanonicalForm, Graph>& forms) {
  std::vector<ExtremalConfig> out;
  out.reserve(forms.size());
  for (const auto& [form, graph] : forms) out.push_back(ExtremalConfig{form, graph});
  return out;
}

}  // namespace

std::vector<Triangle> pinned_triangles() { return {Triangle{0, 1, 2}, Triangle{0, 1, 3}}; }

std::vector<Triangle> excluded_triangles(int n, std::span<const Triangle> fixed) {
  require_pinned(fixed);
  const std::array<Edge, 4> legs{Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}};
  std::vector<Triangle> out;
  for (const Triangle& t : all_triangles(n)) {
    const bool outside = t.c >= 4;  // some vertex in {4..n-1}
    bool leg = false;
    for (const Edge& e : t.edges()) leg = leg || std::find(legs.begin(), legs.end(), e) != legs.end();
    if (outside && leg) out.push_back(t);
  }
  return out;
}

std::vector<Triangle> forcing_triangles(int n, std::span<const Triangle> fixed) {
  require_pinned(fixed);
  std::vector<Triangle> out;
  for (const Triangle& t : all_triangles(n)) {
    if (std::find(fixed.begin(), fixed.end(), t) != fixed.end()) continue;
    std::vector<Triangle> ts(fixed.begin(), fixed.end());
    ts.push_back(t);
    if (contains_suspension_p4(union_of_triangles(n, ts))) out.push_back(t);
  }
  return out;
}

std::vector<Triangle> candidate_triangles(int n, std::span<const Triangle> fixed) {
  require_pinned(fixed);
  if (n < 5 || n > kMaxVertices) throw Error(ErrorCode::kInvalidArgument, "candidate_triangles needs n >= 5");
  const auto excluded = excluded_triangles(n, fixed);
  std::vector<Triangle> out;
  for (const Triangle& t : all_triangles(n)) {
    if (std::find(fixed.begin(), fixed.end(), t) != fixed.end()) continue;
    if (std::binary_search(excluded.begin(), excluded.end(), t)) continue;
    out.push_back(t);
  }
  return out;
}

SearchSpec make_search_spec(int n, int t) {
  SearchSpec spec;
  spec.n = n;
  spec.t = t;
  spec.fixed = pinned_triangles();
  spec.candidates = candidate_triangles(n, spec.fixed);
  return spec;
}

SearchReport counterexample_search(int n, int t, const SearchOptions& options) {
  validate_search(n, t, options);
  const auto started = std::chrono::steady_clock::now();
  const SearchSpec spec = make_search_spec(n, t);
  const int k = spec.subset_size();
  const int total = static_cast<int>(spec.candidates.size());

  SearchReport report;
  report.n = n;
  report.t = t;
  report.candidate_count = spec.candidates.size();
  report.subsets_total = binomial(total, k);
  if (report.subsets_total > options.limits.max_subsets) {
    throw Error(ErrorCode::kResourceGuard,
                std::to_string(report.subsets_total) + " subsets exceed the configured limit of " +
                    std::to_string(options.limits.max_subsets));
  }

  const std::uint64_t chunks = options.chunks;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> stop_chunk{kNoChunk};
  std::mutex progress_mutex;
  for_each_chunk(chunks, options.workers, [&](std::uint64_t c) {
    if (stop_chunk.load(std::memory_order_relaxed) < c) return;
    results[c] = run_chunk(spec, combination_rank_range(total, k, c, chunks), Mode::kFirstFree, c, stop_chunk,
                           options.verify_stride);
    if (results[c].found_rank) {
      std::uint64_t seen = stop_chunk.load(std::memory_order_relaxed);
      while (c < seen && !stop_chunk.compare_exchange_weak(seen, c, std::memory_order_relaxed)) {
      }
    }
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(ChunkProgress{c, chunks, results[c].examined});
    }
  });

  // Chunks below the first hit all ran to completion, so the merged counts
  // are a pure function of rank order.
  for (const ChunkResult& r : results) {
    report.graphs_examined += r.examined;
    report.unions_p4free_with_excess += r.excess;
    if (r.found_rank) {
      report.outcome = SearchOutcome::kCounterexampleFound;
      report.counterexample_rank = r.found_rank;
      std::vector<Triangle> ts = spec.fixed;
      for (int idx : r.found_combo) ts.push_back(spec.candidates[static_cast<std::size_t>(idx)]);
      std::sort(ts.begin(), ts.end());
      report.counterexample = union_of_triangles(n, ts);
      report.counterexample_triangles = std::move(ts);
      break;
    }
  }
  const auto nn = static_cast<std::int64_t>(n);
  report.certifies_upper_bound = report.outcome == SearchOutcome::kExhausted && t > nn * nn / 8;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ExtremalResult exhaustive_oracle(int n, const SearchLimits& limits) {
  if (n < 1 || n > limits.max_oracle_n || n > 8) {
    throw Error(ErrorCode::kSizeGuard, "exhaustive oracle limited to 1 <= n <= " +
                                           std::to_string(std::min(limits.max_oracle_n, 8)));
  }
  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.push_back(Edge{u, v});
  const std::uint64_t graphs = std::uint64_t{1} << slots.size();

  std::array<VertexSet, 8> rows{};
  const std::span<const VertexSet> view(rows.data(), static_cast<std::size_t>(n));
  std::size_t best = 0;
  std::set<std::array<VertexSet, 8>> maximizers;
  for (std::uint64_t i = 0; i < graphs; ++i) {
    if (i > 0) {  // Gray code: step i toggles slot ctz(i)
      const Edge& e = slots[static_cast<std::size_t>(std::countr_zero(i))];
      rows[e.u] ^= bit(e.v);
      rows[e.v] ^= bit(e.u);
    }
    if (detail::has_suspension_p4(view)) continue;
    const std::size_t tri = detail::count_triangles(view);
    if (tri < best) continue;
    if (tri > best) {
      best = tri;
      maximizers.clear();
    }
    std::array<VertexSet, 8> reduced{};
    for (int u = 0; u < n; ++u) {
      for_each_vertex(rows[u], [&](int v) {
        if (rows[u] & rows[v]) reduced[u] |= bit(v);
      });
    }
    maximizers.insert(reduced);
  }

  std::map<CanonicalForm, Graph> forms;
  for (const auto& r : maximizers) {
    add_config(forms, Graph::from_rows(std::span<const VertexSet>(r.data(), static_cast<std::size_t>(n))));
  }
  ExtremalResult result;
  result.n = n;
  result.ex_value = best;
  result.configs = to_configs(forms);
  return result;
}

std::vector<ExtremalConfig> triangle_packing_configs(int n, int t) {
  if (n < 3 || n > 10) throw Error(ErrorCode::kSizeGuard, "triangle packings limited to 3 <= n <= 10");
  std::map<CanonicalForm, Graph> forms;
  if (t <= 0) {
    add_config(forms, Graph::empty(n));
    return to_configs(forms);
  }
  const auto triangles = all_triangles(n);
  UnionBuilder builder(n);
  std::set<Rows> found;

  // Up to relabeling one triangle is 012; the rest follow in lex order.
  auto dfs = [&](auto&& self, std::size_t from, int depth) -> void {
    if (depth == t) {
      found.insert(builder.raw());
      return;
    }
    for (std::size_t i = from; i < triangles.size(); ++i) {
      if (static_cast<std::size_t>(depth) + (triangles.size() - i) < static_cast<std::size_t>(t)) return;
      const Triangle& tri = triangles[i];
      if (builder.has_edge(tri.a, tri.b) || builder.has_edge(tri.a, tri.c) || builder.has_edge(tri.b, tri.c)) {
        continue;
      }
      builder.add(tri);
      // Stray triangles and P4-hats persist under further additions.
      if (detail::count_triangles(builder.rows()) == static_cast<std::size_t>(depth) + 1 &&
          !detail::has_suspension_p4(builder.rows())) {
        self(self, i + 1, depth + 1);
      }
      builder.remove(tri);
    }
  };
  builder.add(triangles.front());
  dfs(dfs, 1, 1);

  for (const Rows& r : found) add_config(forms, rows_to_graph(n, r));
  return to_configs(forms);
}

ExtremalResult extremal_value(int n, const SearchOptions& options) {
  if (n < 4 || n > options.limits.max_extremal_n) {
    throw Error(ErrorCode::kResourceGuard,
                "extremal_value limited to 4 <= n <= " + std::to_string(options.limits.max_extremal_n));
  }
  if (n <= options.limits.max_oracle_n && n < 8) return exhaustive_oracle(n, options.limits);

  // Lower bound from the bipartite construction.
  const Graph witness = bipartite_matching(n);
  if (!is_p4hat_free(witness)) throw std::logic_error("bipartite construction contains a P4-hat");
  std::size_t lower = count_triangles(witness);

  SearchReport upper = counterexample_search(n, static_cast<int>(lower) + 1, options);
  while (upper.outcome == SearchOutcome::kCounterexampleFound) {
    lower = count_triangles(*upper.counterexample);
    upper = counterexample_search(n, static_cast<int>(lower) + 1, options);
  }
  if (!upper.certifies_upper_bound) {
    throw std::logic_error("exhausted search at t <= floor(n^2/8) does not certify an upper bound");
  }

  ExtremalResult result;
  result.n = n;
  result.ex_value = lower;
  std::map<CanonicalForm, Graph> forms;
  if (lower >= 2) {
    const SearchSpec spec = make_search_spec(n, static_cast<int>(lower));
    for (const Rows& r : collect_exact(spec, options).graphs) add_config(forms, rows_to_graph(n, r));
  }
  for (ExtremalConfig& c : triangle_packing_configs(n, static_cast<int>(lower))) {
    forms.emplace(std::move(c.form), std::move(c.graph));
  }
  result.configs = to_configs(forms);
  result.upper_bound_search = std::move(upper);
  return result;
}

}  // namespace turan
