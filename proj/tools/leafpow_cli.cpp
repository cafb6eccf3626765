#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leafpow/chordal.hpp"
#include "leafpow/formats.hpp"
#include "leafpow/gadgets.hpp"
#include "leafpow/obstruction.hpp"
#include "leafpow/recognizer.hpp"
#include "report.hpp"

using namespace leafpow;
using leafpow::cli::RunReport;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared state for one invocation. Handlers fill `report` and `out`; main
// decides whether the text or the JSON reaches stdout.
struct Run {
  RunReport report;
  std::ostringstream out;
  bool json = false;
};

bool looks_like_dot(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  in >> word;
  return word == "graph" || word == "strict" || word == "digraph";
}

Graph load_graph(Run& run, const std::string& path) {
  const std::string text = read_file(path);
  run.report.add_input("graph", path, text);
  return looks_like_dot(text) ? parse_graph_dot(text) : parse_graph(text);
}

LeafTree load_tree(Run& run, const std::string& path) {
  const std::string text = read_file(path);
  run.report.add_input("tree", path, text);
  return parse_tree(text);
}

// Writes to `path` when given, otherwise prints in text mode or embeds the
// payload under `key` in JSON mode.
void emit(Run& run, const std::string& role, const std::optional<std::string>& path,
          const std::string& payload, const std::string& key) {
  if (path) {
    write_file(*path, payload);
    run.report.add_artifact(role, *path);
  } else if (run.json) {
    run.report.details[key] = payload;
  } else {
    run.out << payload;
    if (!payload.empty() && payload.back() != '\n') run.out << '\n';
  }
}

std::string graph_text(const Graph& g, bool dot) { return dot ? emit_graph_dot(g) : emit_graph(g); }

json label_list(const Graph& g, const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(g.label(v));
  return a;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string_view kind_name(Discrepancy::Kind kind) {
  switch (kind) {
    case Discrepancy::Kind::kLeafSetMismatch: return "leaf-set-mismatch";
    case Discrepancy::Kind::kMissingEdge: return "missing-edge";
    case Discrepancy::Kind::kExtraEdge: return "extra-edge";
  }
  return "unknown";
}

// --- gadget / assemble ------------------------------------------------------

struct GadgetArgs {
  std::string kind;
  int k = 0;
  std::optional<std::string> root;
  std::optional<std::string> graph_out;
  std::optional<std::string> tree_out;
  bool dot = false;
};

int run_gadget(Run& run, const GadgetArgs& a) {
  GadgetGraph gadget;
  std::optional<LeafTree> tree;
  const bool want_tree = a.root || a.tree_out;
  if (a.root && a.kind != "interior" && *a.root != "T") {
    throw UsageError("--root R is only defined for the interior gadget");
  }
  if (a.kind == "top") {
    gadget = top_gadget(a.k);
    if (want_tree) tree = top_root(a.k);
  } else if (a.kind == "bot") {
    gadget = bot_gadget();
    if (want_tree) tree = bot_root(a.k);
  } else if (a.kind == "interior") {
    gadget = interior_gadget(a.k);
    if (want_tree) tree = a.root == "R" ? interior_root_R(a.k) : interior_root_T(a.k);
  } else {
    gadget = linear_top_gadget(a.k);
    if (want_tree) tree = linear_top_root(a.k);
  }
  auto& d = run.report.details;
  d["kind"] = a.kind;
  d["k"] = a.k;
  d["vertices"] = gadget.graph.size();
  d["edges"] = gadget.graph.edge_count();
  json anchors = json::object();
  for (const auto& [name, v] : gadget.anchors) anchors[name] = gadget.graph.label(v);
  d["anchors"] = anchors;
  emit(run, "graph", a.graph_out, graph_text(gadget.graph, a.dot), "graph");
  if (tree) {
    const bool ok = verify_leaf_root(*tree, gadget.graph, a.k).ok;
    d["root_verified"] = ok;
    emit(run, "tree", a.tree_out, emit_tree(*tree) + "\n", "tree");
    if (!ok) {
      run.report.verdict = "VerificationFailed";
      return cli::kExitNegative;
    }
  }
  run.report.verdict = "Emitted";
  return cli::kExitAffirmative;
}

struct AssembleArgs {
  int k = 0;
  int n = 0;
  std::optional<std::string> minus;
  bool root = false;
  std::optional<std::string> graph_out;
  std::optional<std::string> tree_out;
  bool dot = false;
};

int run_assemble(Run& run, const AssembleArgs& a) {
  if ((a.root || a.tree_out) && !a.minus) {
    throw UsageError("--root needs --minus; the full family has no root");
  }
  const AssembledFamily h = assemble_Hn(a.k, a.n);
  Graph g = h.graph;
  std::optional<LeafTree> tree;
  if (a.minus) {
    const Part part = *a.minus == "top" ? Part::kTop : Part::kBot;
    g = family_minus(h, part);
    if (a.root || a.tree_out) {
      tree = part == Part::kTop ? merged_root_minus_top(a.k, a.n) : merged_root_minus_bot(a.k, a.n);
    }
  }
  auto& d = run.report.details;
  d["k"] = a.k;
  d["n"] = a.n;
  if (a.minus) d["minus"] = *a.minus;
  d["vertices"] = g.size();
  d["edges"] = g.edge_count();
  d["junctions"] = label_list(h.graph, h.junctions);
  emit(run, "graph", a.graph_out, graph_text(g, a.dot), "graph");
  if (tree) {
    const bool ok = verify_leaf_root(*tree, g, a.k).ok;
    d["root_verified"] = ok;
    emit(run, "tree", a.tree_out, emit_tree(*tree) + "\n", "tree");
    if (!ok) {
      run.report.verdict = "VerificationFailed";
      return cli::kExitNegative;
    }
  }
  run.report.verdict = "Emitted";
  return cli::kExitAffirmative;
}

// --- check ------------------------------------------------------------------

int run_check(Run& run, const std::string& path, bool strong) {
  const Graph g = load_graph(run, path);
  const ChordalityResult r = strong ? is_strongly_chordal(g) : is_chordal(g);
  const std::string property = strong ? "strongly-chordal" : "chordal";
  run.report.verdict = r.holds ? property : "not-" + property;
  run.report.details["property"] = property;
  if (r.holds) run.report.details["ordering"] = label_list(g, r.witness->order);
  run.out << run.report.verdict << '\n';
  if (r.holds) {
    std::vector<std::string> names;
    for (Vertex v : r.witness->order) names.push_back(g.label(v));
    run.out << join(names, " ") << '\n';
  }
  return r.holds ? cli::kExitAffirmative : cli::kExitNegative;
}

// --- tree -------------------------------------------------------------------

int run_tree_dist(Run& run, const std::string& path, const std::optional<std::string>& pair) {
  const LeafTree t = load_tree(run, path);
  auto& d = run.report.details;
  run.report.verdict = "Computed";
  if (pair) {
    const auto comma = pair->find(',');
    if (comma == std::string::npos) throw UsageError("--pair expects a,b");
    const std::string a = pair->substr(0, comma);
    const std::string b = pair->substr(comma + 1);
    const Length dist = leaf_distance(t, a, b);
    d["pair"] = {a, b};
    d["distance"] = dist;
    run.out << dist << '\n';
    return cli::kExitAffirmative;
  }
  const DistanceMatrix m = distance_matrix(t);
  json rows = json::array();
  run.out << join(m.labels, " ") << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < m.size(); ++j) {
      row.push_back(m.at(i, j));
      cells.push_back(std::to_string(m.at(i, j)));
    }
    rows.push_back(row);
    run.out << join(cells, " ") << '\n';
  }
  d["labels"] = m.labels;
  d["matrix"] = rows;
  if (m.size() >= 4) d["four_point"] = check_four_point(m).ok;
  if (m.size() >= 3) d["parity"] = check_parity(m).ok;
  return cli::kExitAffirmative;
}

int run_tree_verify(Run& run, const std::string& graph_path, const std::string& tree_path,
                    int k, bool linear) {
  const Graph g = load_graph(run, graph_path);
  const LeafTree t = load_tree(run, tree_path);
  const RootCheck r = verify_leaf_root(t, g, k);
  bool ok = r.ok;
  json problems = json::array();
  for (const Discrepancy& x : r.discrepancies) {
    problems.push_back({{"kind", kind_name(x.kind)}, {"a", x.a}, {"b", x.b}, {"distance", x.distance}});
    run.out << kind_name(x.kind) << ' ' << x.a << ' ' << x.b << ' ' << x.distance << '\n';
  }
  run.report.details["k"] = k;
  run.report.details["discrepancies"] = problems;
  if (linear) {
    const bool cat = is_caterpillar_subdivision(t).ok;
    run.report.details["caterpillar"] = cat;
    if (!cat) run.out << "not a caterpillar subdivision\n";
    ok = ok && cat;
  }
  run.report.verdict = ok ? "Verified" : "Failed";
  run.out << run.report.verdict << '\n';
  return ok ? cli::kExitAffirmative : cli::kExitNegative;
}

int run_tree_power(Run& run, const std::string& path, int k,
                   const std::optional<std::string>& graph_out, bool dot) {
  if (k < 1) throw Error(ErrorCode::kKTooSmall, "k must be positive");
  const LeafTree t = load_tree(run, path);
  const Graph g = leaf_power_graph(t, k);
  run.report.details["k"] = k;
  run.report.details["vertices"] = g.size();
  run.report.details["edges"] = g.edge_count();
  emit(run, "graph", graph_out, graph_text(g, dot), "graph");
  run.report.verdict = "Emitted";
  return cli::kExitAffirmative;
}

// --- recognize / extract-min --------------------------------------------------

struct SearchArgs {
  std::string graph;
  int k = 0;
  bool linear = false;
  std::vector<std::string> pins;
  std::vector<std::string> min_dists;
  std::optional<double> budget_s;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::string> out;
};

Length parse_length(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v < 0) throw UsageError(flag + ": bad distance '" + s + "'");
  return static_cast<Length>(v);
}

DistanceConstraintSet parse_constraints(const SearchArgs& a) {
  DistanceConstraintSet c;
  for (const std::string& p : a.pins) {
    const auto comma = p.find(',');
    const auto eq = p.find('=', comma == std::string::npos ? 0 : comma);
    if (comma == std::string::npos || eq == std::string::npos) {
      throw UsageError("--pin expects u,v=d, got '" + p + "'");
    }
    c.pin(p.substr(0, comma), p.substr(comma + 1, eq - comma - 1),
          parse_length(p.substr(eq + 1), "--pin"));
  }
  for (const std::string& m : a.min_dists) {
    const auto ge = m.find(">=");
    if (ge == std::string::npos) throw UsageError("--min-dist expects v>=d, got '" + m + "'");
    c.min_distance(m.substr(0, ge), parse_length(m.substr(ge + 2), "--min-dist"));
  }
  return c;
}

RecognizeOptions search_options(const SearchArgs& a) {
  RecognizeOptions o;
  o.linear_only = a.linear;
  o.node_budget = a.node_budget;
  if (a.budget_s) {
    if (*a.budget_s <= 0) throw UsageError("--budget must be positive");
    o.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(*a.budget_s * 1000));
  }
  return o;
}

json stats_json(const SearchStats& s) {
  return {{"topologies", s.topologies},
          {"partial_topologies", s.partial_topologies},
          {"systems", s.systems},
          {"search_ms", s.elapsed_ms}};
}

int run_recognize(Run& run, const SearchArgs& a) {
  const Graph g = load_graph(run, a.graph);
  const DistanceConstraintSet c = parse_constraints(a);
  const RecognitionResult r = recognize(g, a.k, c, search_options(a));
  auto& d = run.report.details;
  d["k"] = a.k;
  d["leaves"] = g.size();
  d["linear"] = a.linear;
  d["topologies"] = r.stats.topologies;
  d["partial_topologies"] = r.stats.partial_topologies;
  d["systems"] = r.stats.systems;
  run.report.verdict = std::string(verdict_name(r.verdict));
  run.out << run.report.verdict << '\n';
  if (r.has_root()) {
    const std::string text = emit_tree(*r.witness);
    d["witness_tree"] = text;
    if (a.out) {
      write_file(*a.out, text + "\n");
      run.report.add_artifact("root", *a.out);
    }
    run.out << text << '\n';
    return cli::kExitAffirmative;
  }
  run.out << "topologies " << r.stats.topologies << " systems " << r.stats.systems << '\n';
  return r.verdict == Verdict::kBudgetExceeded ? cli::kExitBudget : cli::kExitNegative;
}

int run_extract(Run& run, const SearchArgs& a) {
  const Graph g = load_graph(run, a.graph);
  MinimalityCertificate cert;
  try {
    cert = extract_minimal(g, a.k, search_options(a));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInputIsLeafPower) throw;
    run.report.verdict = "InputIsLeafPower";
    run.out << run.report.verdict << '\n';
    return cli::kExitNegative;
  }
  const CertificateReport check = verify_certificate(cert);
  const std::string sub = emit_graph(cert.subgraph);
  json rows = json::array();
  for (const DeletionCheck& c : cert.checks) {
    json row = {{"vertex", c.removed}, {"verdict", verdict_name(c.result.verdict)}};
    if (c.result.witness) row["witness_tree"] = emit_tree(*c.result.witness);
    rows.push_back(row);
  }
  auto& d = run.report.details;
  d["k"] = a.k;
  d["certificate"] = {{"vertices", cert.subgraph.labels()},
                      {"subgraph", sub},
                      {"removed", cert.removed},
                      {"self_check", verdict_name(cert.self_check.verdict)},
                      {"self_check_stats", stats_json(cert.self_check.stats)},
                      {"deletions", rows},
                      {"verified", check.ok},
                      {"problems", check.problems}};
  if (a.out) {
    write_file(*a.out, sub);
    run.report.add_artifact("subgraph", *a.out);
  }
  run.out << sub;
  for (const DeletionCheck& c : cert.checks) {
    run.out << "- " << c.removed << ' ' << verdict_name(c.result.verdict);
    if (c.result.witness) run.out << ' ' << emit_tree(*c.result.witness);
    run.out << '\n';
  }
  run.report.verdict = check.ok ? "Certificate" : "CertificateRejected";
  run.out << run.report.verdict << '\n';
  return check.ok ? cli::kExitAffirmative : cli::kExitNegative;
}

void add_search_options(CLI::App* sub, SearchArgs& a) {
  sub->add_option("--graph", a.graph, "Graph file (edge list or DOT)")->required();
  sub->add_option("--k", a.k, "Power threshold")->required();
  sub->add_option("--budget", a.budget_s, "Wall-clock budget in seconds");
  sub->add_option("--node-budget", a.node_budget, "Limit on visited partial trees");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leaf power gadgets, roots, recognition and obstructions"};
  app.require_subcommand(1);
  Run run;
  for (int i = 0; i < argc; ++i) run.report.command.emplace_back(argv[i]);

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", run.json, "Print a JSON run report"); };

  GadgetArgs gadget;
  CLI::App* g_cmd = app.add_subcommand("gadget", "Emit a gadget graph and optionally its root");
  g_cmd->add_option("--kind", gadget.kind)
      ->required()
      ->check(CLI::IsMember({"top", "bot", "interior", "linear-top"}));
  g_cmd->add_option("--k", gadget.k)->required();
  g_cmd->add_option("--root", gadget.root, "Emit a root (interior: T or R)")
      ->check(CLI::IsMember({"T", "R"}))
      ->expected(0, 1)
      ->default_str("T");
  g_cmd->add_option("--graph-out", gadget.graph_out);
  g_cmd->add_option("--tree-out", gadget.tree_out);
  g_cmd->add_flag("--dot", gadget.dot, "Write the graph as DOT");
  json_flag(g_cmd);

  AssembleArgs assemble;
  CLI::App* a_cmd = app.add_subcommand("assemble", "Emit H_n, or H_n minus Top or Bot");
  a_cmd->add_option("--k", assemble.k)->required();
  a_cmd->add_option("--n", assemble.n)->required();
  a_cmd->add_option("--minus", assemble.minus)->check(CLI::IsMember({"top", "bot"}));
  a_cmd->add_flag("--root", assemble.root, "Emit the merged root (needs --minus)");
  a_cmd->add_option("--graph-out", assemble.graph_out);
  a_cmd->add_option("--tree-out", assemble.tree_out);
  a_cmd->add_flag("--dot", assemble.dot, "Write the graph as DOT");
  json_flag(a_cmd);

  std::string check_path;
  bool chordal = false;
  bool strong = false;
  CLI::App* c_cmd = app.add_subcommand("check", "Chordality or strong chordality");
  auto* chordal_opt = c_cmd->add_flag("--chordal", chordal);
  c_cmd->add_flag("--strongly-chordal", strong)->excludes(chordal_opt);
  c_cmd->add_option("graph", check_path, "Graph file")->required();
  json_flag(c_cmd);

  CLI::App* t_cmd = app.add_subcommand("tree", "Weighted leaf tree utilities");
  t_cmd->require_subcommand(1);
  std::string tree_path;
  std::string tree_graph;
  std::optional<std::string> pair;
  std::optional<std::string> power_out;
  int tree_k = 0;
  bool tree_linear = false;
  bool power_dot = false;
  CLI::App* td = t_cmd->add_subcommand("dist", "Leaf distance matrix");
  td->add_option("--tree", tree_path)->required();
  td->add_option("--pair", pair, "Single distance a,b");
  json_flag(td);
  CLI::App* tv = t_cmd->add_subcommand("verify", "Check that a tree is a k-leaf root of a graph");
  tv->add_option("--graph", tree_graph)->required();
  tv->add_option("--tree", tree_path)->required();
  tv->add_option("--k", tree_k)->required();
  tv->add_flag("--linear", tree_linear, "Also require a caterpillar subdivision");
  json_flag(tv);
  CLI::App* tp = t_cmd->add_subcommand("power", "k-leaf power of a tree");
  tp->add_option("--tree", tree_path)->required();
  tp->add_option("--k", tree_k)->required();
  tp->add_option("--graph-out", power_out);
  tp->add_flag("--dot", power_dot, "Write the graph as DOT");
  json_flag(tp);

  SearchArgs rec;
  CLI::App* r_cmd = app.add_subcommand("recognize", "Decide k-leaf-power membership");
  add_search_options(r_cmd, rec);
  r_cmd->add_flag("--linear", rec.linear, "Only caterpillar roots");
  r_cmd->add_option("--pin", rec.pins, "Exact distance u,v=d")->take_all();
  r_cmd->add_option("--min-dist", rec.min_dists, "Lower bound v>=d on m_T(v)")->take_all();
  r_cmd->add_option("--emit-root", rec.out, "Write the witness tree here");
  json_flag(r_cmd);

  SearchArgs ext;
  CLI::App* e_cmd = app.add_subcommand("extract-min", "Minimal non-k-leaf-power induced subgraph");
  add_search_options(e_cmd, ext);
  e_cmd->add_option("--out", ext.out, "Write the subgraph here");
  json_flag(e_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return cli::kExitAffirmative;
  } catch (const CLI::ParseError& e) {
    CLI::App* failing = &app;
    for (CLI::App* sub = &app; sub;) {
      const auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
      if (sub) failing = sub;
    }
    std::cerr << e.what() << "\n\n" << failing->help();
    return cli::kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  run.report.subcommand = chosen->get_name();
  if (chosen == t_cmd) run.report.subcommand += " " + t_cmd->get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  int code = cli::kExitAffirmative;
  try {
    if (chosen == g_cmd) {
      code = run_gadget(run, gadget);
    } else if (chosen == a_cmd) {
      code = run_assemble(run, assemble);
    } else if (chosen == c_cmd) {
      code = run_check(run, check_path, strong);
    } else if (chosen == r_cmd) {
      code = run_recognize(run, rec);
    } else if (chosen == e_cmd) {
      code = run_extract(run, ext);
    } else if (td->parsed()) {
      code = run_tree_dist(run, tree_path, pair);
    } else if (tv->parsed()) {
      code = run_tree_verify(run, tree_graph, tree_path, tree_k, tree_linear);
    } else {
      code = run_tree_power(run, tree_path, tree_k, power_out, power_dot);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << chosen->help();
    return cli::kExitUsage;
  } catch (const Error& e) {
    code = e.code() == ErrorCode::kBudgetExceeded ? cli::kExitBudget : cli::kExitUsage;
    run.report.verdict = code == cli::kExitBudget ? "BudgetExceeded" : "Error";
    run.report.details["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    std::cerr << e.what() << '\n';
    run.out.str("");
  }
  run.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  run.report.exit_code = code;
  if (run.json) {
    std::cout << run.report.to_json().dump(2) << '\n';
  } else {
    std::cout << run.out.str();
  }
  return code;
}
