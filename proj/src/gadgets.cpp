#include "leafpow/gadgets.hpp"

#include <set>

namespace leafpow {

namespace {

void require_k(int k, int min_k) {
  if (k < min_k) {
    throw Error(ErrorCode::kKTooSmall,
                "k=" + std::to_string(k) + " (need k >= " + std::to_string(min_k) + ")");
  }
}

std::string name(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

// Collects labelled vertices and edges, merging vertices that share a label.
class GraphAssembler {
 public:
  Vertex vertex(const std::string& label) {
    auto [it, inserted] = index_.emplace(label, labels_.size());
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  void edge(const std::string& a, const std::string& b) {
    Vertex u = vertex(a);
    Vertex v = vertex(b);
    edges_.insert({std::min(u, v), std::max(u, v)});
  }

  Graph build() const {
    std::vector<Edge> edges(edges_.begin(), edges_.end());
    return Graph(labels_, edges);
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Vertex> index_;
  std::set<Edge> edges_;
};

// Copies `gadget` into `out` under renamed labels; returns the vertices used.
VertexSet absorb(GraphAssembler& out, const Graph& gadget,
                 const std::string& prefix,
                 const std::map<std::string, std::string>& overrides) {
  std::vector<std::string> renamed;
  for (const auto& l : gadget.labels()) {
    auto it = overrides.find(l);
    renamed.push_back(it != overrides.end() ? it->second : prefix + l);
  }
  VertexSet used;
  for (const auto& l : renamed) used.push_back(out.vertex(l));
  for (const auto& [u, v] : gadget.edges()) out.edge(renamed[u], renamed[v]);
  std::sort(used.begin(), used.end());
  return used;
}

GadgetGraph with_anchors(Graph g, const std::map<std::string, std::string>& roles) {
  GadgetGraph out{std::move(g), {}};
  for (const auto& [role, label] : roles) out.anchors[role] = out.graph.index_of(label);
  return out;
}

}  // namespace

Vertex GadgetGraph::anchor(const std::string& role) const {
  auto it = anchors.find(role);
  if (it == anchors.end()) throw Error(ErrorCode::kUnknownLabel, "no anchor '" + role + "'");
  return it->second;
}

GadgetGraph top_gadget(int k) {
  require_k(k, 4);
  const int n = 2 * k - 3;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(name('v', i));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && j - i <= k - 2; ++j) edges.emplace_back(i, j);
  }
  return with_anchors(Graph(labels, edges), {{"t", name('v', k - 2)}});
}

LeafTree top_root(int k) {
  require_k(k, 4);
  TreeBuilder tb;
  NodeId prev = 0;
  for (int i = 1; i <= 2 * k - 3; ++i) {
    NodeId s = tb.add_internal();
    if (i > 1) tb.connect(prev, s, 1);
    tb.pendant(s, name('v', i), 1);
    prev = s;
  }
  return tb.build();
}

GadgetGraph bot_gadget() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
  return with_anchors(Graph({"b", "v1", "v2", "v3"}, edges),
                      {{"b", "b"}, {"v1", "v1"}, {"v2", "v2"}, {"v3", "v3"}});
}

LeafTree bot_root(int k) {
  require_k(k, 4);
  TreeBuilder tb;
  if (k % 2 == 1) {
    NodeId o = tb.add_internal();
    tb.pendant(o, "b", (k - 1) / 2);
    tb.pendant(o, "v2", (k - 1) / 2);
    tb.pendant(o, "v1", (k + 1) / 2);
    tb.pendant(o, "v3", (k + 1) / 2);
  } else {
    NodeId o1 = tb.add_internal();
    NodeId o2 = tb.add_internal();
    tb.connect(o1, o2, 1);
    tb.pendant(o1, "b", k / 2 - 1);
    tb.pendant(o1, "v1", k / 2);
    tb.pendant(o2, "v2", k / 2 - 1);
    tb.pendant(o2, "v3", k / 2);
  }
  return tb.build();
}

GadgetGraph interior_gadget(int k) {
  require_k(k, 5);
  const bool odd = k % 2 == 1;
  const int q = odd ? (k - 1) / 2 : k / 2;
  std::vector<std::string> labels{"t", "b"};
  for (int i = 1; i <= q; ++i) labels.push_back(name('x', i));
  for (int i = 2; i <= q; ++i) labels.push_back(name('y', i));
  if (!odd) {
    labels.push_back("z1");
    labels.push_back("z2");
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= q; ++i) {
    edges.emplace_back("t", name('x', i));
    if (odd || i >= 2) edges.emplace_back("b", name('x', i));
    if (!odd && i >= 2) {
      edges.emplace_back("z1", name('x', i));
      edges.emplace_back("z2", name('x', i));
    }
    for (int j = i + 1; j <= q; ++j) edges.emplace_back(name('x', i), name('x', j));
  }
  for (int i = 2; i <= q; ++i) {
    for (int j = i; j <= q; ++j) edges.emplace_back(name('y', i), name('x', j));
  }
  edges.emplace_back("b", name('y', q));
  if (!odd) {
    edges.emplace_back("z1", "b");
    edges.emplace_back("z2", "b");
  }
  return with_anchors(graph_from_label_edges(labels, edges), {{"t_I", "t"}, {"b_I", "b"}});
}

namespace {

// Shared skeleton of the interior roots: a spine t - O_1 - ... - O_{q+1} - b
// with the x, y (and z) pendants. Parameters select the T or R variant.
LeafTree interior_root(int k, bool r_variant) {
  require_k(k, 5);
  const bool odd = k % 2 == 1;
  const int q = odd ? (k - 1) / 2 : k / 2;
  TreeBuilder tb;
  std::vector<NodeId> spine(q + 2);
  for (int i = 1; i <= q + 1; ++i) {
    spine[i] = tb.add_internal();
    if (i > 1) tb.connect(spine[i - 1], spine[i], 1);
  }
  tb.pendant(spine[1], "t", odd ? q + 1 : q);
  tb.pendant(spine[q + 1], "b", r_variant ? 2 : 1);
  for (int i = 1; i <= q; ++i) {
    Length len = q - i + 1;
    if (r_variant && odd && i == 1) len = q - 1;
    if (r_variant && !odd && i == 2) len = q - 2;
    tb.pendant(spine[i], name('x', i), len);
  }
  for (int i = 2; i <= q - 1; ++i) tb.pendant(spine[i], name('y', i), odd ? q + i : q + i - 1);
  tb.pendant(spine[q + 1], name('y', q), k - 2);
  if (!odd) {
    tb.pendant(spine[r_variant ? 3 : 2], "z1", q);
    tb.pendant(spine[r_variant ? 4 : 3], "z2", q);
  }
  return tb.build();
}

}  // namespace

LeafTree interior_root_T(int k) { return interior_root(k, false); }

LeafTree interior_root_R(int k) { return interior_root(k, true); }

GadgetGraph linear_top_gadget(int k) {
  require_k(k, 5);
  std::vector<std::string> labels;
  for (int i = 1; i <= k - 1; ++i) labels.push_back(name('x', i));
  for (int i = 0; i <= k; ++i) labels.push_back(name('y', i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = i + 1; j <= k - 1; ++j) edges.emplace_back(name('x', i), name('x', j));
  }
  for (int i = 0; i <= k; ++i) {
    for (int j = i - 1; j <= i + 1; ++j) {
      if (j >= 1 && j <= k - 1) edges.emplace_back(name('y', i), name('x', j));
    }
  }
  return with_anchors(graph_from_label_edges(labels, edges), {{"t", "x1"}});
}

LeafTree linear_top_root(int k) {
  require_k(k, 5);
  TreeBuilder tb;
  std::vector<NodeId> spine(k);
  for (int i = 1; i <= k - 1; ++i) {
    spine[i] = tb.add_internal();
    if (i > 1) tb.connect(spine[i - 1], spine[i], 1);
    tb.pendant(spine[i], name('x', i), 1);
    tb.pendant(spine[i], name('y', i), k - 2);
  }
  tb.pendant(spine[1], "y0", k - 1);
  tb.pendant(spine[k - 1], name('y', k), k - 1);
  return tb.build();
}

std::string junction_label(int j, int n) {
  if (j == 0) return "t";
  if (j == n) return "b";
  return "j" + std::to_string(j);
}

AssembledFamily assemble_Hn(int k, int n) {
  require_k(k, 5);
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be nonnegative");
  const GadgetGraph top = top_gadget(k);
  const GadgetGraph interior = interior_gadget(k);
  const GadgetGraph bot = bot_gadget();

  GraphAssembler out;
  AssembledFamily family;
  family.k = k;
  family.n = n;
  const VertexSet top_used = absorb(
      out, top.graph, "Top.", {{top.graph.label(top.anchor("t")), junction_label(0, n)}});
  for (int j = 1; j <= n; ++j) {
    family.interior_vertices.push_back(
        absorb(out, interior.graph, "I" + std::to_string(j) + ".",
               {{"t", junction_label(j - 1, n)}, {"b", junction_label(j, n)}}));
  }
  const VertexSet bot_used = absorb(out, bot.graph, "Bot.", {{"b", junction_label(n, n)}});
  family.graph = out.build();
  family.top_vertices = top_used;
  family.bot_vertices = bot_used;
  for (int j = 0; j <= n; ++j) family.junctions.push_back(family.graph.index_of(junction_label(j, n)));
  family.t = family.junctions.front();
  family.b = family.junctions.back();
  return family;
}

Graph family_minus(const AssembledFamily& family, Part which) {
  const VertexSet& drop = which == Part::kTop ? family.top_vertices : family.bot_vertices;
  const Vertex keep = which == Part::kTop ? family.t : family.b;
  VertexSet rest;
  for (Vertex v = 0; v < family.graph.size(); ++v) {
    if (v == keep || !std::binary_search(drop.begin(), drop.end(), v)) rest.push_back(v);
  }
  return induced_subgraph(family.graph, rest);
}

LeafTree merged_root_minus_bot(int k, int n) {
  require_k(k, 5);
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be nonnegative");
  LeafTree tree = relabel(top_root(k), "Top.", {{name('v', k - 2), junction_label(0, n)}});
  for (int j = 1; j <= n; ++j) {
    LeafTree copy = relabel(interior_root_T(k), "I" + std::to_string(j) + ".",
                            {{"t", junction_label(j - 1, n)}, {"b", junction_label(j, n)}});
    tree = merge_at_leaf(tree, copy, junction_label(j - 1, n));
  }
  return tree;
}

LeafTree merged_root_minus_top(int k, int n) {
  require_k(k, 5);
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be nonnegative");
  LeafTree tree = relabel(bot_root(k), "Bot.", {{"b", junction_label(n, n)}});
  for (int j = n; j >= 1; --j) {
    LeafTree copy = relabel(interior_root_R(k), "I" + std::to_string(j) + ".",
                            {{"t", junction_label(j - 1, n)}, {"b", junction_label(j, n)}});
    tree = merge_at_leaf(copy, tree, junction_label(j, n));
  }
  return tree;
}

}  // namespace leafpow
