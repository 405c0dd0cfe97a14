#ifndef PVCLAB_TOOLS_CLI_HPP
#define PVCLAB_TOOLS_CLI_HPP

// Command implementations for the pvclab executable. Kept in a header so
// the test suite can drive them without spawning processes.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pvclab/pvclab.hpp"

namespace pvclab::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, failure = 1, input_error = 2, resource_cap = 3 };

/// Thrown for unreadable files and malformed documents (exit 2).
class input_error_exception : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error_exception("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error_exception("cannot write " + path);
  out << text;
}

/// First non-empty line of a graph6 file.
inline Graph read_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return parse_graph6(line);
  }
  throw input_error_exception(path + ": no graph6 line");
}

// ---------------------------------------------------------------------------
// Sidecar and coloring documents
// ---------------------------------------------------------------------------

inline std::string sidecar_path(const std::string& graph_path) { return graph_path + ".json"; }

struct ProductSidecar {
  ProductKind kind = ProductKind::cartesian;
  Graph left;
  Graph right;
};

inline json sidecar_json(const ProductGraph& p, const Graph& a, const Graph& b) {
  json vertices = json::array();
  for (Vertex v = 0; v < p.order(); ++v) {
    json entry{{"index", v}, {"label", p.graph.label(v)}};
    if (p.kind == ProductKind::join) {
      auto [side, i] = p.join_side(v);
      entry["side"] = side == 0 ? "left" : "right";
      entry["factor_vertex"] = i;
    } else {
      auto [g, h] = p.coordinates(v);
      entry["g"] = g;
      entry["h"] = h;
    }
    vertices.push_back(std::move(entry));
  }
  return json{{"kind", std::string(to_string(p.kind))},
              {"left", {{"graph6", emit_graph6(a)}, {"order", a.order()}}},
              {"right", {{"graph6", emit_graph6(b)}, {"order", b.order()}}},
              {"order", p.order()},
              {"vertices", std::move(vertices)}};
}

inline std::optional<ProductSidecar> read_sidecar(const std::string& graph_path) {
  const auto path = sidecar_path(graph_path);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    const json doc = json::parse(read_file(path));
    auto kind = parse_product_kind(doc.at("kind").get<std::string>());
    if (!kind) throw input_error_exception(path + ": unknown product kind");
    return ProductSidecar{*kind, parse_graph6(doc.at("left").at("graph6").get<std::string>()),
                          parse_graph6(doc.at("right").at("graph6").get<std::string>())};
  } catch (const json::exception& e) {
    throw input_error_exception(path + ": " + e.what());
  }
}

struct ColoringDocument {
  VertexColoring coloring;
  json meta;
};

inline json coloring_json(const VertexColoring& c, json meta = nullptr) {
  json doc{{"n", c.size()}, {"colors", c.colors()}, {"palette", c.palette_size()}};
  if (!meta.is_null()) doc["meta"] = std::move(meta);
  return doc;
}

inline ColoringDocument read_coloring(const std::string& path) {
  try {
    const json doc = json::parse(read_file(path));
    const int n = doc.at("n").get<int>();
    auto colors = doc.at("colors").get<std::vector<int>>();
    if (static_cast<int>(colors.size()) != n) throw input_error_exception(path + ": colors.length != n");
    VertexColoring c(std::move(colors));
    if (doc.contains("palette") && doc.at("palette").get<int>() != c.palette_size()) {
      throw input_error_exception(path + ": palette != max(colors)");
    }
    return {std::move(c), doc.value("meta", json(nullptr))};
  } catch (const json::exception& e) {
    throw input_error_exception(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

inline std::string to_dot(const Graph& g, const std::optional<VertexColoring>& c) {
  static const char* fills[] = {"lightblue", "salmon", "palegreen", "gold", "plum", "lightgray", "orange", "cyan"};
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"";
    if (c) out << ", style=filled, fillcolor=" << fills[((*c)[v] - 1) % 8];
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Theorem dispatch
// ---------------------------------------------------------------------------

struct TheoremOutcome {
  TheoremReport report;
  std::optional<VertexColoring> coloring;  // indexed like the input graph
};

namespace detail {

/// Re-indexes a coloring of B x A onto A x B.
inline VertexColoring swap_factors(const VertexColoring& c, int order_a, int order_b) {
  std::vector<int> colors(static_cast<std::size_t>(order_a * order_b));
  for (Vertex a = 0; a < order_a; ++a) {
    for (Vertex b = 0; b < order_b; ++b) colors[a * order_b + b] = c[b * order_a + a];
  }
  return VertexColoring(std::move(colors));
}

inline TheoremOutcome direct_theorem(const Graph& a, const Graph& b, Parameter param) {
  const bool ka = is_complete(a);
  const bool kb = is_complete(b);
  auto plain = [](TheoremReport r) {
    auto c = r.coloring;
    return TheoremOutcome{std::move(r), std::move(c)};
  };
  auto swapped = [&](TheoremReport r) {
    std::optional<VertexColoring> c;
    if (r.coloring) c = swap_factors(*r.coloring, a.order(), b.order());
    r.notes.push_back("theorem applied with factors swapped");
    return TheoremOutcome{std::move(r), std::move(c)};
  };
  if (ka && kb && (param.is_spvc() || param.k == 2)) {
    const int n = a.order();
    const int m = b.order();
    if (m >= 3 && (n >= 3 || n == 2)) return plain(direct_complete_cases(n, m, param));
    if (n >= 3 && m == 2) return swapped(direct_complete_cases(m, n, param));
    throw precondition_error("K2 x K2 is disconnected");
  }
  if (param.is_spvc()) {
    if (ka && diameter(b) >= Distance{2}) return plain(direct_kn_times_h(a.order(), b));
    if (kb && diameter(a) >= Distance{2}) return swapped(direct_kn_times_h(b.order(), a));
  }
  if (param == Parameter::pvc(2)) throw precondition_error("no theorem covers pvc_2 of this direct product");
  return plain(direct_pvc_spvc(a, b, param));
}

}  // namespace detail

/// Runs the theorem matching the graph's recorded structure.
inline TheoremOutcome theorem_for(const Graph& g, const std::optional<ProductSidecar>& side, Parameter param) {
  auto plain = [](TheoremReport r) {
    auto c = r.coloring;
    return TheoremOutcome{std::move(r), std::move(c)};
  };
  if (!side) {
    if (param.k == 2 && !param.is_spvc()) {
      if (is_complete(g)) return plain(complete_pvck(g.order(), 2));
      throw precondition_error("no theorem covers pvc_2 of an untagged graph; supply a product sidecar");
    }
    return plain(base_report(g, param));
  }
  const ProductGraph rebuilt = make_product(side->kind, side->left, side->right);
  if (!(rebuilt.graph == g)) throw input_error_exception("sidecar factors do not reproduce the input graph");
  const Graph& a = side->left;
  const Graph& b = side->right;
  const bool spvc = param.is_spvc();
  const bool pvc2 = !spvc && param.k == 2;
  switch (side->kind) {
    case ProductKind::join:
      if (spvc) return plain(join_spvc(a, b));
      return plain(join_pvck(a, b, param.k));
    case ProductKind::cartesian:
      return plain(spvc ? cartesian_spvc_bound(a, b) : pvc2 ? cartesian_pvc2(a, b) : cartesian_pvc(a, b));
    case ProductKind::lexicographic:
      return plain(spvc ? lex_spvc(a, b) : pvc2 ? lex_pvc2(a, b) : lex_pvc(a, b));
    case ProductKind::strong:
      return plain(spvc ? strong_spvc(a, b) : pvc2 ? strong_pvc2(a, b) : strong_pvc(a, b));
    case ProductKind::direct:
      return detail::direct_theorem(a, b, param);
  }
  throw precondition_error("unknown product kind");
}

inline json predicted_json(const TheoremReport& r) {
  if (!r.predicted) return nullptr;
  if (r.predicted->is_point()) return r.predicted->lo;
  return json::array({r.predicted->lo, r.predicted->hi});
}

/// none when the theorem makes no prediction.
inline std::optional<bool> prediction_matches(const std::optional<Interval>& predicted, int value) {
  if (!predicted) return std::nullopt;
  return predicted->contains(value);
}

inline json witness_summary(const TheoremReport& r) {
  std::size_t paths = 0;
  for (const auto& w : r.witnesses) paths += w.paths.size();
  return json{{"pairs", r.witnesses.size()}, {"paths", paths}};
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct ProductArgs {
  std::string kind;
  std::string left;
  std::string right;
  std::string out;
  std::string dot;
};

inline int cmd_product(const ProductArgs& args, std::ostream& out, std::ostream& err) {
  auto kind = parse_product_kind(args.kind);
  if (!kind) throw input_error_exception("unknown product kind: " + args.kind);
  const Graph a = read_graph(args.left);
  const Graph b = read_graph(args.right);
  const ProductGraph p = make_product(*kind, a, b);
  write_file(args.out, emit_graph6(p.graph) + "\n");
  write_file(sidecar_path(args.out), sidecar_json(p, a, b).dump(2) + "\n");
  if (!args.dot.empty()) write_file(args.dot, to_dot(p.graph, std::nullopt));
  const bool connected = is_connected(p.graph);
  if (!connected) {
    err << "warning: " << to_string(*kind) << " product is disconnected";
    if (*kind == ProductKind::direct) err << " (both factors bipartite)";
    err << "\n";
  }
  out << json{{"kind", std::string(to_string(*kind))},
              {"order", p.order()},
              {"size", p.graph.size()},
              {"connected", connected},
              {"graph6", emit_graph6(p.graph)},
              {"output", args.out}}
             .dump()
      << "\n";
  return ok;
}

inline std::optional<Parameter> parse_compute_param(const std::string& name) {
  if (name == "pvc") return Parameter::pvc(1);
  if (name == "pvc2") return Parameter::pvc(2);
  if (name == "spvc") return Parameter::spvc();
  return std::nullopt;
}

struct ComputeArgs {
  std::string param;
  std::string method = "both";
  std::string input;
  std::string out;  // ColoringDocument for the chosen coloring
  std::string dot;
  int palette_cap = 4;
};

inline int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  auto param = parse_compute_param(args.param);
  if (!param) throw input_error_exception("unknown parameter: " + args.param);
  if (args.method != "theorem" && args.method != "oracle" && args.method != "both") {
    throw input_error_exception("unknown method: " + args.method);
  }
  const Graph g = read_graph(args.input);
  const bool want_theorem = args.method != "oracle";
  const bool want_oracle = args.method != "theorem";

  json doc{{"param", args.param}, {"method", args.method}, {"order", g.order()}};
  std::optional<VertexColoring> chosen;
  json chosen_meta;
  int code = ok;

  std::optional<TheoremOutcome> theorem;
  if (want_theorem) {
    theorem = theorem_for(g, read_sidecar(args.input), *param);
    const auto& r = theorem->report;
    doc["theorem"] = predicted_json(r);
    doc["theorem_report"] = json{{"id", r.theorem_id},
                                 {"parameter", r.parameter.name()},
                                 {"inputs", r.inputs},
                                 {"predicted", predicted_json(r)},
                                 {"verified", r.verified},
                                 {"failure", r.failure},
                                 {"witnesses", witness_summary(r)},
                                 {"notes", r.notes}};
    if (theorem->coloring) {
      doc["theorem_report"]["coloring"] = theorem->coloring->colors();
      chosen = theorem->coloring;
      chosen_meta = json{{"theorem_id", r.theorem_id}};
    }
    if (r.predicted && !r.verified) {
      err << "theorem " << r.theorem_id << " failed verification: " << r.failure << "\n";
      code = failure;
    }
  }

  if (want_oracle) {
    OracleOptions opt;
    opt.palette_cap = args.palette_cap;
    auto result = param->is_spvc() ? brute_spvc(g, opt) : brute_pvc_k(g, param->k, opt);
    doc["oracle"] = result.value;
    doc["oracle_report"] = json{{"value", result.value},
                                {"colorings_examined", result.colorings_examined},
                                {"elapsed_ms", std::chrono::duration<double, std::milli>(result.elapsed).count()}};
    const VertexColoring oracle_coloring =
        result.optimal_coloring ? *result.optimal_coloring : VertexColoring::monochromatic(g.order());
    doc["oracle_report"]["coloring"] = oracle_coloring.colors();
    if (!chosen) {
      chosen = oracle_coloring;
      chosen_meta = json{{"theorem_id", "oracle"}};
    }
    if (theorem) {
      const auto& pred = theorem->report.predicted;
      const auto match = prediction_matches(pred, result.value);
      doc["match"] = match ? json(*match) : json(nullptr);
      if (match == false) {
        err << "mismatch: theorem " << pred->to_string() << ", oracle " << result.value << "\n";
        code = failure;
      }
    }
  }

  if (chosen) {
    if (!args.out.empty()) {
      chosen_meta["parameter"] = param->name();
      if (auto side = read_sidecar(args.input)) {
        chosen_meta["kind"] = std::string(to_string(side->kind));
        chosen_meta["factors"] = json::array({emit_graph6(side->left), emit_graph6(side->right)});
      }
      write_file(args.out, coloring_json(*chosen, chosen_meta).dump(2) + "\n");
    }
    if (!args.dot.empty()) write_file(args.dot, to_dot(g, chosen));
  }
  out << doc.dump(2) << "\n";
  return code;
}

struct VerifyArgs {
  std::string param = "pvck";
  int k = 1;
  std::string graph;
  std::string coloring;
  std::string dot;
};

inline int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream&) {
  Parameter param;
  if (args.param == "pvck") {
    param = Parameter::pvc(args.k);
  } else if (args.param == "spvc") {
    param = Parameter::spvc();
  } else {
    throw input_error_exception("unknown verification mode: " + args.param);
  }
  const Graph g = read_graph(args.graph);
  const ColoringDocument doc = read_coloring(args.coloring);
  if (doc.coloring.size() != g.order()) {
    throw input_error_exception("coloring has " + std::to_string(doc.coloring.size()) + " entries, graph has " +
                                std::to_string(g.order()) + " vertices");
  }
  if (!is_connected(g)) throw precondition_error("graph is disconnected");
  if (!args.dot.empty()) write_file(args.dot, to_dot(g, doc.coloring));
  const auto failing = first_failing_pair(g, doc.coloring, param);
  json result{{"param", param.name()}, {"ok", !failing}, {"palette", doc.coloring.palette_size()}};
  if (failing) {
    result["failing_pair"] = json::array({failing->first, failing->second});
    out << result.dump() << "\n";
    out << "first failing pair: " << failing->first << " " << failing->second << "\n";
    return failure;
  }
  out << result.dump() << "\n";
  return ok;
}

struct SuiteArgs {
  int max_n = 6;
  std::uint64_t seed = 1;
  std::vector<std::string> only;
  std::string out;
};

inline json suite_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"group", c.group},
                          {"id", c.id},
                          {"instance", c.instance},
                          {"expected", c.expected},
                          {"got", c.got},
                          {"pass", c.pass}});
  }
  return json{{"checks", std::move(checks)},
              {"totals", {{"checks", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}}}};
}

inline int cmd_suite(const SuiteArgs& args, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  opt.max_n = args.max_n;
  opt.seed = args.seed;
  for (const auto& item : args.only) {
    std::stringstream list(item);
    std::string name;
    while (std::getline(list, name, ',')) {
      if (!name.empty()) opt.only.push_back(name);
    }
  }
  const SuiteReport report = run_suite(opt);
  const std::string text = suite_json(report).dump(2) + "\n";
  if (args.out.empty()) {
    out << text;
  } else {
    write_file(args.out, text);
  }
  std::map<std::string, std::pair<int, int>> per_group;
  std::vector<std::string> order;
  for (const auto& c : report.checks) {
    if (!per_group.contains(c.group)) order.push_back(c.group);
    auto& [passed, total] = per_group[c.group];
    passed += c.pass ? 1 : 0;
    ++total;
  }
  for (const auto& g : order) {
    err << (per_group[g].first == per_group[g].second ? "PASS " : "FAIL ") << g << " " << per_group[g].first << "/"
        << per_group[g].second << "\n";
  }
  for (const auto& c : report.checks) {
    if (!c.pass) err << "  failed " << c.id << " [" << c.instance << "] expected " << c.expected << ", got " << c.got << "\n";
  }
  return report.all_pass() ? ok : failure;
}

struct GenerateArgs {
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 0;
  std::string out;
};

inline int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream&) {
  auto family = parse_family(args.family);
  if (!family) throw input_error_exception("unknown family: " + args.family);
  const std::string text = emit_graph6(generate(*family, args.params, args.seed)) + "\n";
  if (args.out.empty()) {
    out << text;
  } else {
    write_file(args.out, text);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Parses `args` (without the program name) and runs the chosen command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proper vertex connection numbers of graphs and graph products", "pvclab"};
  app.require_subcommand(1);

  ProductArgs product;
  auto* product_cmd = app.add_subcommand("product", "build a join or product of two graph6 graphs");
  product_cmd->add_option("--kind", product.kind, "join|cartesian|lexicographic|strong|direct")->required();
  product_cmd->add_option("left", product.left, "first factor (graph6 file)")->required();
  product_cmd->add_option("right", product.right, "second factor (graph6 file)")->required();
  product_cmd->add_option("-o,--out", product.out, "output graph6 file; an index map goes to <out>.json")->required();
  product_cmd->add_option("--dot", product.dot, "also write a DOT file");

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "compute pvc, pvc2 or spvc by theorem and/or oracle");
  compute_cmd->add_option("--param", compute.param, "pvc|pvc2|spvc")->required();
  compute_cmd->add_option("--method", compute.method, "theorem|oracle|both")->capture_default_str();
  compute_cmd->add_option("input", compute.input, "graph6 file (product sidecar read from <input>.json)")->required();
  compute_cmd->add_option("-o,--out", compute.out, "write the coloring as a JSON coloring document");
  compute_cmd->add_option("--dot", compute.dot, "write the colored graph as DOT");
  compute_cmd->add_option("--palette-cap", compute.palette_cap, "oracle palette limit")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a coloring against pvc_k or spvc");
  verify_cmd->add_option("--param", verify.param, "pvck|spvc")->capture_default_str();
  verify_cmd->add_option("--k", verify.k, "number of disjoint paths for pvck")->capture_default_str();
  verify_cmd->add_option("graph", verify.graph, "graph6 file")->required();
  verify_cmd->add_option("coloring", verify.coloring, "coloring document (JSON)")->required();
  verify_cmd->add_option("--dot", verify.dot, "write the colored graph as DOT");

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("suite", "run the consistency suite");
  suite_cmd->add_option("--max-n", suite.max_n, "order bound for enumerated families")->capture_default_str();
  suite_cmd->add_option("--seed", suite.seed, "random seed")->capture_default_str();
  suite_cmd->add_option("--only", suite.only, "comma-separated group names");
  suite_cmd->add_option("-o,--out", suite.out, "write the JSON report to a file");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "emit a named graph family as graph6");
  gen_cmd->add_option("--family", gen.family, "path|cycle|complete|complete_bipartite|star|empty|random_tree|petersen")
      ->required();
  gen_cmd->add_option("--params", gen.params, "family size parameters");
  gen_cmd->add_option("--seed", gen.seed, "seed for random families")->capture_default_str();
  gen_cmd->add_option("-o,--out", gen.out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*product_cmd) return cmd_product(product, out, err);
    if (*compute_cmd) return cmd_compute(compute, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*suite_cmd) return cmd_suite(suite, out, err);
    if (*gen_cmd) return cmd_generate(gen, out, err);
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return resource_cap;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return resource_cap;
  } catch (const std::invalid_argument& e) {  // precondition_error, graph6_error
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const input_error_exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace pvclab::cli

#endif  // PVCLAB_TOOLS_CLI_HPP
