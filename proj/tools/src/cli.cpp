#include "turan_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "turan/blocks.hpp"
#include "turan/bounds.hpp"
#include "turan/constructions.hpp"
#include "turan/error.hpp"
#include "turan/graph6.hpp"
#include "turan/pattern.hpp"
#include "turan/search.hpp"
#include "turan/wide_graph.hpp"
#include "turan_cli/report_json.hpp"

namespace turan::cli {

namespace {

enum class Format { kJson, kText };

struct RunConfig {
  int n = 0;
  int t = 0;
  int workers = 1;
  std::int64_t n_max = 1'000'000;
  std::string family;
  std::string input;
  Format format = Format::kJson;
  bool timing = false;
  bool progress = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Json envelope(const std::string& command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string witness_text(const SuspensionWitness& w) {
  std::ostringstream s;
  s << "apex " << w.apex << " path " << w.path[0] << '-' << w.path[1] << '-' << w.path[2] << '-' << w.path[3];
  return s.str();
}

SearchOptions search_options(const RunConfig& cfg, std::ostream& err) {
  SearchOptions o;
  o.workers = cfg.workers;
  if (cfg.progress) {
    o.progress = [&err, last = std::uint64_t{0}](const ChunkProgress& p) mutable {
      const std::uint64_t pct = 100 * (++last) / p.chunks;
      if (pct % 10 == 0 && (100 * (last - 1) / p.chunks) % 10 != 0) {
        err << "progress: " << pct << "% of chunks\n";
      }
    };
  }
  return o;
}

// --- search --------------------------------------------------------------

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 5 || cfg.n > 10) throw UsageError("--n must be in 5..10 for search");
  if (cfg.t < 3) throw UsageError("--t must be at least 3");
  const SearchReport r = counterexample_search(cfg.n, cfg.t, search_options(cfg, err));
  if (cfg.progress) err << "elapsed: " << r.elapsed_seconds << " s\n";
  if (cfg.format == Format::kJson) {
    Json j = envelope("search");
    j.update(to_json(r, cfg.timing));
    emit(out, j);
  } else {
    out << "search n=" << r.n << " t=" << r.t << ": "
        << (r.outcome == SearchOutcome::kExhausted ? "exhausted" : "counterexample found") << '\n'
        << "candidates " << r.candidate_count << ", subsets " << r.subsets_total << ", examined "
        << r.graphs_examined << '\n';
    if (r.counterexample) out << "counterexample " << encode_graph6(*r.counterexample) << '\n';
    if (r.certifies_upper_bound) out << "certifies ex(" << r.n << ") < " << r.t << '\n';
  }
  return r.outcome == SearchOutcome::kExhausted ? kExitOk : kExitViolation;
}

// --- extremal ------------------------------------------------------------

int cmd_extremal(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 4 || cfg.n > 8) throw UsageError("--n must be in 4..8 for extremal");
  const ExtremalResult r = extremal_value(cfg.n, search_options(cfg, err));
  if (cfg.format == Format::kJson) {
    Json j = envelope("extremal");
    j.update(to_json(r, cfg.timing));
    emit(out, j);
  } else {
    out << "ex(" << r.n << ", K3, P4-hat) = " << r.ex_value << " (" << r.configs.size() << " configurations)\n";
    for (const ExtremalConfig& c : r.configs) {
      out << c.form.graph6;
      for (const TriangleBlock& b : decompose(c.graph).blocks) out << ' ' << describe(b.classification);
      out << '\n';
    }
  }
  return kExitOk;
}

// --- verify-construction ---------------------------------------------------

int cmd_verify_construction(const RunConfig& cfg, std::ostream& out) {
  const ConstructionFamily* family = nullptr;
  try {
    family = &family_by_name(cfg.family);
  } catch (const Error&) {
    throw UsageError("unknown --family '" + cfg.family + "' (small, bipartite, sixteen, book, complete)");
  }
  const int param = family->family == Family::kSixteenVertex ? 16 : cfg.n;
  const bool wide = family->family == Family::kBipartiteMatching && param > kMaxVertices;

  Json j = envelope("verify-construction");
  j["family"] = family->name;
  j["param"] = param;

  std::size_t triangles = 0;
  std::optional<SuspensionWitness> witness;
  std::size_t expected = 0;
  try {
    expected = expected_triangles(family->family, param);
    if (wide) {
      const WideGraph g = WideGraph::from_edges(param, bipartite_matching_edges(param));
      triangles = count_triangles(g);
      witness = contains_suspension_p4(g);
      j["n"] = g.order();
      j["edges"] = g.edge_count();
      j["graph6"] = nullptr;
      j["blocks"] = nullptr;
    } else {
      const Graph g = build(family->family, param);
      triangles = count_triangles(g);
      witness = contains_suspension_p4(g);
      j["n"] = g.order();
      j["edges"] = g.edge_count();
      j["graph6"] = g.order() <= 62 ? Json(encode_graph6(g)) : Json(nullptr);
      j["blocks"] = block_summary(decompose(g));
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto n = static_cast<std::size_t>(j["n"].get<int>());
  const bool free = !witness.has_value();
  const bool pass = triangles == expected && (!family->p4hat_free || free);
  j["triangles"] = triangles;
  j["expected_triangles"] = expected;
  j["floor_n2_over_8"] = n * n / 8;
  j["p4hat_free"] = free;
  j["expected_p4hat_free"] = family->p4hat_free;
  j["witness"] = witness ? to_json(*witness) : Json(nullptr);
  j["pass"] = pass;

  if (cfg.format == Format::kJson) {
    emit(out, j);
  } else {
    out << family->name << " param=" << param << ": t=" << triangles << " expected " << expected << ", "
        << (free ? "p4hat-free" : witness_text(*witness)) << ", " << (pass ? "pass" : "FAIL") << '\n';
    if (!j["graph6"].is_null()) out << j["graph6"].get<std::string>() << '\n';
  }
  return pass ? kExitOk : kExitViolation;
}

// --- graph6 streams ---------------------------------------------------------

struct StreamLine {
  std::size_t number = 0;
  std::string text;
};

std::vector<StreamLine> read_lines(const RunConfig& cfg, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (!cfg.input.empty() && cfg.input != "-") {
    file.open(cfg.input);
    if (!file) throw UsageError("cannot open --input '" + cfg.input + "'");
    src = &file;
  }
  std::vector<StreamLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(*src, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    lines.push_back(StreamLine{number, line});
  }
  return lines;
}

template <typename PerGraph>
int process_stream(const std::string& command, const RunConfig& cfg, std::istream& in, std::ostream& out,
                   std::ostream& err, PerGraph&& per_graph) {
  Json results = Json::array();
  Json errors = Json::array();
  for (const StreamLine& l : read_lines(cfg, in)) {
    try {
      const Graph g = decode_graph6(l.text);
      Json item{{"line", l.number}, {"graph6", l.text}};
      per_graph(g, item);
      results.push_back(std::move(item));
    } catch (const Error& e) {
      err << "line " << l.number << ": " << e.what() << '\n';
      errors.push_back(Json{{"line", l.number}, {"code", std::string(to_string(e.code()))}, {"message", e.what()}});
    }
  }
  const bool clean = errors.empty();
  if (cfg.format == Format::kJson) {
    Json j = envelope(command);
    j["results"] = std::move(results);
    j["errors"] = std::move(errors);
    emit(out, j);
  }
  return clean ? kExitOk : kExitDataError;
}

int cmd_blocks(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return process_stream("blocks", cfg, in, out, err, [&](const Graph& g, Json& item) {
    const BlockDecomposition d = decompose(g);
    item["n"] = g.order();
    item["triangles"] = count_triangles(g);
    item.update(to_json(d));
    if (cfg.format == Format::kText) {
      out << item["graph6"].get<std::string>() << ':';
      for (const TriangleBlock& b : d.blocks) out << ' ' << describe(b.classification);
      if (d.blocks.empty()) out << " no triangles";
      out << '\n';
    }
  });
}

int cmd_witness(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return process_stream("witness", cfg, in, out, err, [&](const Graph& g, Json& item) {
    const auto w = contains_suspension_p4(g);
    item["p4hat_free"] = !w.has_value();
    item["witness"] = w ? to_json(*w) : Json(nullptr);
    if (cfg.format == Format::kText) out << (w ? witness_text(*w) : std::string("p4hat-free")) << '\n';
  });
}

int cmd_k4_structure(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return process_stream("k4-structure", cfg, in, out, err, [&](const Graph& g, Json& item) {
    const auto s = find_k4(g);
    item["k4"] = s ? to_json(neighborhood_structure(g, *s)) : Json(nullptr);
    if (cfg.format == Format::kText) {
      if (!s) {
        out << "no K4\n";
      } else {
        const K4NeighborhoodReport r = neighborhood_structure(g, *s);
        out << "S=" << r.s[0] << ',' << r.s[1] << ',' << r.s[2] << ',' << r.s[3] << " x=";
        for (const auto& p : r.parts) out << p.size << (p.anchor == r.s[3] ? "" : ",");
        out << " t(S) " << to_string(r.triangle_count) << '\n';
      }
    }
  });
}

// --- check-bounds -------------------------------------------------------------

int cmd_check_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_max < 17 || cfg.n_max > 1'000'000'000) throw UsageError("--n-max must be in 17..1e9");
  const FloorAuditResult floors = floor_identity_audit(cfg.n_max);
  const ThresholdAuditResult thresholds = case_threshold_audit(cfg.n_max);
  const bool passed = floors.passed() && thresholds.passed();
  if (cfg.format == Format::kJson) {
    Json j = envelope("check-bounds");
    j["n_max"] = cfg.n_max;
    j["floor_identity"] = to_json(floors);
    j["case_thresholds"] = to_json(thresholds);
    j["passed"] = passed;
    emit(out, j);
  } else {
    out << "floor identities 12.." << cfg.n_max << ": " << (floors.passed() ? "pass" : "FAIL") << '\n'
        << "case thresholds: " << (thresholds.passed() ? "pass" : "FAIL") << " (case 1 holds from n="
        << thresholds.case1_holds_from << ")\n";
  }
  return passed ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();

  CLI::App app{"Generalized Turan number ex(n, K3, P4-hat): search, certify, audit"};
  app.name("turan");
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"text", Format::kText}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--progress", cfg.progress, "Report chunk progress on stderr");
    sub->add_flag("--timing", cfg.timing, "Include elapsed_seconds in the report (not reproducible)");
  };

  auto* search = app.add_subcommand("search", "Pinned-pair counterexample search for (n, t)");
  search->add_option("--n", cfg.n, "Vertex count (5..10)")->required();
  search->add_option("--t", cfg.t, "Target triangle count (>= 3)")->required();
  add_workers(search);
  add_format(search);

  auto* extremal = app.add_subcommand("extremal", "ex(n, K3, P4-hat) and all extremal configurations");
  extremal->add_option("--n", cfg.n, "Vertex count (4..8)")->required();
  add_workers(extremal);
  add_format(extremal);

  auto* verify = app.add_subcommand("verify-construction", "Certify a lower-bound construction");
  verify->add_option("--family", cfg.family, "small | bipartite | sixteen | book | complete")->required();
  verify->add_option("--n", cfg.n, "Family parameter (n, s or k; unused for sixteen)");
  add_format(verify);

  auto* blocks = app.add_subcommand("blocks", "Triangle-block decomposition of graph6 lines");
  auto* witness = app.add_subcommand("witness", "P4-hat witness for graph6 lines");
  auto* k4 = app.add_subcommand("k4-structure", "Neighbourhoods X_i of the least K4 in graph6 lines");
  for (auto* sub : {blocks, witness, k4}) {
    sub->add_option("--input", cfg.input, "graph6 file (default: stdin)");
    add_format(sub);
  }

  auto* bounds = app.add_subcommand("check-bounds", "Audit the floor identities and case thresholds");
  bounds->add_option("--n-max", cfg.n_max, "Largest n audited (>= 17)");
  add_format(bounds);

  std::vector<const char*> argv{"turan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*search) return cmd_search(cfg, out, err);
    if (*extremal) return cmd_extremal(cfg, out, err);
    if (*verify) return cmd_verify_construction(cfg, out);
    if (*blocks) return cmd_blocks(cfg, in, out, err);
    if (*witness) return cmd_witness(cfg, in, out, err);
    if (*k4) return cmd_k4_structure(cfg, in, out, err);
    if (*bounds) return cmd_check_bounds(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::kResourceGuard || e.code() == ErrorCode::kSizeGuard ||
                   e.code() == ErrorCode::kInvalidArgument
               ? kExitUsage
               : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace turan::cli
