#include "leafpow/tree.hpp"

#include <algorithm>
#include <numeric>

namespace leafpow {

LeafTree LeafTree::from_parts(std::vector<std::optional<std::string>> node_labels,
                              const std::vector<TreeEdge>& edges) {
  LeafTree t;
  const std::size_t n = node_labels.size();
  t.labels_ = std::move(node_labels);
  t.adj_.assign(n, {});
  if (n == 0) {
    if (!edges.empty()) throw Error(ErrorCode::kNotATree, "edges without nodes");
    return t;
  }
  if (edges.size() != n - 1) {
    throw Error(ErrorCode::kNotATree, std::to_string(n) + " nodes but " +
                                          std::to_string(edges.size()) + " edges");
  }
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n || e.a == e.b) {
      throw Error(ErrorCode::kNotATree, "bad edge endpoint");
    }
    if (e.length < 1) {
      throw Error(ErrorCode::kNonPositiveLength,
                  "edge of length " + std::to_string(e.length));
    }
    t.adj_[e.a].push_back({e.b, e.length});
    t.adj_[e.b].push_back({e.a, e.length});
  }
  // n-1 edges plus connectivity means acyclic.
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    ++reached;
    for (const Arc& a : t.adj_[x]) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::kNotATree, "disconnected");

  for (NodeId v = 0; v < n; ++v) {
    const std::size_t deg = t.adj_[v].size();
    if (t.labels_[v]) {
      if (t.labels_[v]->empty()) {
        throw Error(ErrorCode::kInvalidArgument, "empty leaf label");
      }
      if (deg != (n == 1 ? 0u : 1u)) {
        throw Error(ErrorCode::kNotATree,
                    "labelled node '" + *t.labels_[v] + "' is not a leaf");
      }
      if (!t.leaf_index_.emplace(*t.labels_[v], v).second) {
        throw Error(ErrorCode::kDuplicateLeafLabel, *t.labels_[v]);
      }
    } else if (deg < 2) {
      throw Error(ErrorCode::kNotATree, "unlabelled node of degree " + std::to_string(deg));
    }
  }
  return t;
}

LeafTree LeafTree::canonical() const {
  const std::size_t n = node_count();
  std::vector<std::vector<Arc>> adj = adj_;
  std::vector<char> alive(n, 1);
  auto drop_arc = [&](NodeId from, NodeId to) {
    auto& list = adj[from];
    list.erase(std::find_if(list.begin(), list.end(),
                            [to](const Arc& a) { return a.to == to; }));
  };
  for (NodeId v = 0; v < n; ++v) {
    if (labels_[v] || adj[v].size() != 2) continue;
    const Arc left = adj[v][0];
    const Arc right = adj[v][1];
    drop_arc(left.to, v);
    drop_arc(right.to, v);
    adj[left.to].push_back({right.to, left.length + right.length});
    adj[right.to].push_back({left.to, left.length + right.length});
    adj[v].clear();
    alive[v] = 0;
  }

  std::vector<NodeId> order;
  for (const auto& [label, node] : leaf_index_) order.push_back(node);
  for (NodeId v = 0; v < n; ++v) {
    if (alive[v] && !labels_[v]) order.push_back(v);
  }
  std::vector<NodeId> renumber(n, n);
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;

  std::vector<std::optional<std::string>> labels(order.size());
  std::vector<TreeEdge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    labels[i] = labels_[order[i]];
    for (const Arc& a : adj[order[i]]) {
      if (renumber[a.to] > i) edges.push_back({i, renumber[a.to], a.length});
    }
  }
  return from_parts(std::move(labels), edges);
}

bool LeafTree::is_canonical() const {
  std::size_t i = 0;
  for (const auto& [label, node] : leaf_index_) {
    if (node != i++) return false;
  }
  for (NodeId v = 0; v < node_count(); ++v) {
    if (!labels_[v] && adj_[v].size() < 3) return false;
  }
  return true;
}

const std::string& LeafTree::label(NodeId node) const {
  const auto& l = labels_.at(node);
  if (!l) throw Error(ErrorCode::kUnknownLabel, "node " + std::to_string(node) + " is internal");
  return *l;
}

NodeId LeafTree::leaf(std::string_view label) const {
  auto it = leaf_index_.find(label);
  if (it == leaf_index_.end()) {
    throw Error(ErrorCode::kUnknownLabel, "no leaf '" + std::string(label) + "'");
  }
  return it->second;
}

bool LeafTree::has_leaf(std::string_view label) const {
  return leaf_index_.find(label) != leaf_index_.end();
}

std::vector<std::string> LeafTree::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(leaf_index_.size());
  for (const auto& [label, node] : leaf_index_) out.push_back(label);
  return out;
}

std::vector<NodeId> LeafTree::leaves() const {
  std::vector<NodeId> out;
  out.reserve(leaf_index_.size());
  for (const auto& [label, node] : leaf_index_) out.push_back(node);
  return out;
}

std::vector<TreeEdge> LeafTree::edges() const {
  std::vector<TreeEdge> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    for (const Arc& a : adj_[v]) {
      if (v < a.to) out.push_back({v, a.to, a.length});
    }
  }
  return out;
}

std::vector<Length> LeafTree::distances_from(NodeId from) const {
  std::vector<Length> dist(node_count(), -1);
  std::vector<NodeId> stack{from};
  dist.at(from) = 0;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (const Arc& a : adj_[x]) {
      if (dist[a.to] < 0) {
        dist[a.to] = dist[x] + a.length;
        stack.push_back(a.to);
      }
    }
  }
  return dist;
}

LeafTree new_leaf_tree(std::size_t node_count,
                       const std::map<NodeId, std::string>& leaf_labels,
                       const std::vector<TreeEdge>& edges) {
  std::vector<std::optional<std::string>> labels(node_count);
  for (const auto& [node, label] : leaf_labels) {
    if (node >= node_count) throw Error(ErrorCode::kNotATree, "leaf id out of range");
    labels[node] = label;
  }
  return LeafTree::from_parts(std::move(labels), edges).canonical();
}

NodeId TreeBuilder::add_internal() {
  labels_.emplace_back();
  return labels_.size() - 1;
}

NodeId TreeBuilder::add_leaf(std::string label) {
  labels_.emplace_back(std::move(label));
  return labels_.size() - 1;
}

void TreeBuilder::connect(NodeId a, NodeId b, Length length) {
  edges_.push_back({a, b, length});
}

NodeId TreeBuilder::pendant(NodeId parent, std::string label, Length length) {
  NodeId leaf = add_leaf(std::move(label));
  connect(parent, leaf, length);
  return leaf;
}

LeafTree TreeBuilder::build() const {
  return LeafTree::from_parts(labels_, edges_).canonical();
}

LeafTree subdivide_to_unit(const LeafTree& tree) {
  std::vector<std::optional<std::string>> labels;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    labels.push_back(tree.is_leaf(v) ? std::optional<std::string>(tree.label(v))
                                     : std::nullopt);
  }
  std::vector<TreeEdge> edges;
  for (const TreeEdge& e : tree.edges()) {
    NodeId prev = e.a;
    for (Length step = 1; step < e.length; ++step) {
      labels.emplace_back();
      NodeId mid = labels.size() - 1;
      edges.push_back({prev, mid, 1});
      prev = mid;
    }
    edges.push_back({prev, e.b, 1});
  }
  return LeafTree::from_parts(std::move(labels), edges);
}

Length leaf_distance(const LeafTree& tree, std::string_view a, std::string_view b) {
  NodeId na = tree.leaf(a);
  NodeId nb = tree.leaf(b);
  return tree.distances_from(na)[nb];
}

DistanceMatrix distance_matrix(const LeafTree& tree) {
  DistanceMatrix m;
  m.labels = tree.leaf_labels();
  const auto leaves = tree.leaves();
  const std::size_t n = leaves.size();
  m.d.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto dist = tree.distances_from(leaves[i]);
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist[leaves[j]];
  }
  return m;
}

Length min_leaf_distance(const LeafTree& tree, std::string_view v) {
  NodeId node = tree.leaf(v);
  if (tree.leaf_count() < 2) throw Error(ErrorCode::kSingleLeaf, "tree has one leaf");
  const auto dist = tree.distances_from(node);
  Length best = -1;
  for (NodeId u : tree.leaves()) {
    if (u != node && (best < 0 || dist[u] < best)) best = dist[u];
  }
  return best;
}

void validate_matrix(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (d.d.size() != n * n) throw Error(ErrorCode::kMalformedMatrix, "size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (d.at(i, i) != 0) throw Error(ErrorCode::kMalformedMatrix, "nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (d.at(i, j) != d.at(j, i)) throw Error(ErrorCode::kMalformedMatrix, "asymmetric");
      if (d.at(i, j) < 0) throw Error(ErrorCode::kMalformedMatrix, "negative entry");
    }
  }
}

FourPointReport check_four_point(const DistanceMatrix& d) {
  validate_matrix(d);
  const std::size_t n = d.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        for (std::size_t t = 0; t < n; ++t) {
          if (t == u || t == v || t == w) continue;
          const Length lhs = d.at(u, v) + d.at(w, t);
          const Length a = d.at(u, w) + d.at(v, t);
          const Length b = d.at(v, w) + d.at(u, t);
          if (lhs > std::max(a, b)) {
            return {false, FourPointViolation{{d.labels[u], d.labels[v], d.labels[w],
                                               d.labels[t]},
                                              lhs, a, b}};
          }
        }
      }
    }
  }
  return {};
}

ParityReport check_parity(const DistanceMatrix& d) {
  validate_matrix(d);
  const std::size_t n = d.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      for (std::size_t w = v + 1; w < n; ++w) {
        if ((d.at(u, v) + d.at(u, w) + d.at(v, w)) % 2 != 0) {
          return {false, std::array<std::string, 3>{d.labels[u], d.labels[v], d.labels[w]}};
        }
      }
    }
  }
  return {};
}

Graph leaf_power_graph(const LeafTree& tree, Length k) {
  const DistanceMatrix m = distance_matrix(tree);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m.at(i, j) > 0 && m.at(i, j) <= k) edges.emplace_back(i, j);
    }
  }
  return Graph(m.labels, edges);
}

RootCheck verify_leaf_root(const LeafTree& tree, const Graph& g, Length k) {
  RootCheck check;
  std::vector<std::string> graph_labels = g.labels();
  std::sort(graph_labels.begin(), graph_labels.end());
  const std::vector<std::string> tree_labels = tree.leaf_labels();
  if (graph_labels != tree_labels) {
    for (const auto& l : graph_labels) {
      if (!tree.has_leaf(l)) {
        check.discrepancies.push_back({Discrepancy::Kind::kLeafSetMismatch, l, "", 0});
      }
    }
    for (const auto& l : tree_labels) {
      if (!g.find(l)) {
        check.discrepancies.push_back({Discrepancy::Kind::kLeafSetMismatch, "", l, 0});
      }
    }
    check.ok = false;
    return check;
  }
  const DistanceMatrix m = distance_matrix(tree);
  std::vector<Vertex> vertex_of(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) vertex_of[i] = g.index_of(m.labels[i]);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const bool tree_edge = m.at(i, j) <= k;
      const bool graph_edge = g.adjacent(vertex_of[i], vertex_of[j]);
      if (tree_edge == graph_edge) continue;
      check.discrepancies.push_back(
          {graph_edge ? Discrepancy::Kind::kMissingEdge : Discrepancy::Kind::kExtraEdge,
           m.labels[i], m.labels[j], m.at(i, j)});
    }
  }
  check.ok = check.discrepancies.empty();
  return check;
}

CaterpillarReport is_caterpillar_subdivision(const LeafTree& tree) {
  if (tree.leaf_count() < 2) throw Error(ErrorCode::kSingleLeaf, "need two leaves");
  const LeafTree c = tree.canonical();
  CaterpillarReport report;
  std::vector<NodeId> internal;
  for (NodeId v = 0; v < c.node_count(); ++v) {
    if (!c.is_leaf(v)) internal.push_back(v);
  }
  if (internal.empty()) {
    report.ok = true;
    return report;
  }
  auto internal_degree = [&](NodeId v) {
    return std::count_if(c.arcs(v).begin(), c.arcs(v).end(),
                         [&](const Arc& a) { return !c.is_leaf(a.to); });
  };
  NodeId start = internal.front();
  for (NodeId v : internal) {
    const auto deg = internal_degree(v);
    if (deg > 2) return report;
    if (deg <= 1) start = v;
  }
  // Walk from an end of the internal path.
  NodeId prev = start;
  NodeId cur = start;
  report.spine.push_back(cur);
  while (true) {
    NodeId next = cur;
    for (const Arc& a : c.arcs(cur)) {
      if (!c.is_leaf(a.to) && a.to != prev) next = a.to;
    }
    if (next == cur) break;
    prev = cur;
    cur = next;
    report.spine.push_back(cur);
  }
  report.ok = report.spine.size() == internal.size();
  return report;
}

LeafTree relabel(const LeafTree& tree, const std::string& prefix,
                 const std::map<std::string, std::string>& overrides) {
  std::vector<std::optional<std::string>> labels;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (!tree.is_leaf(v)) {
      labels.emplace_back();
      continue;
    }
    auto it = overrides.find(tree.label(v));
    labels.emplace_back(it != overrides.end() ? it->second : prefix + tree.label(v));
  }
  return LeafTree::from_parts(std::move(labels), tree.edges()).canonical();
}

LeafTree merge_at_leaf(const LeafTree& a, const LeafTree& b, std::string_view shared) {
  const NodeId xa = a.leaf(shared);
  const NodeId xb = b.leaf(shared);
  if (a.degree(xa) != 1 || b.degree(xb) != 1) {
    throw Error(ErrorCode::kNotATree, "shared leaf must have a parent in both trees");
  }
  const Arc pa = a.arcs(xa).front();
  const Arc pb = b.arcs(xb).front();

  // Node ids: a's nodes, then b's nodes, then the shared parent P. Zero-length
  // edges are contracted afterwards.
  const std::size_t na = a.node_count();
  const std::size_t nb = b.node_count();
  const NodeId parent = na + nb;
  std::vector<std::optional<std::string>> labels(na + nb + 1);
  for (NodeId v = 0; v < na; ++v) {
    if (a.is_leaf(v)) labels[v] = a.label(v);
  }
  for (NodeId v = 0; v < nb; ++v) {
    if (b.is_leaf(v) && v != xb) labels[na + v] = b.label(v);
  }
  std::vector<TreeEdge> edges;
  for (const TreeEdge& e : a.edges()) {
    if (e.a != xa && e.b != xa) edges.push_back(e);
  }
  for (const TreeEdge& e : b.edges()) {
    if (e.a != xb && e.b != xb) edges.push_back({na + e.a, na + e.b, e.length});
  }
  edges.push_back({xa, parent, 1});
  edges.push_back({parent, pa.to, pa.length - 1});
  edges.push_back({parent, na + pb.to, pb.length - 1});

  const std::size_t total = labels.size();
  std::vector<NodeId> root(total);
  std::iota(root.begin(), root.end(), NodeId{0});
  auto find = [&](NodeId v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const TreeEdge& e : edges) {
    if (e.length == 0) root[find(e.b)] = find(e.a);
  }
  // b's copy of the shared leaf is dropped.
  std::vector<char> used(total, 0);
  std::vector<TreeEdge> merged;
  for (const TreeEdge& e : edges) {
    if (e.length == 0) continue;
    merged.push_back({find(e.a), find(e.b), e.length});
  }
  for (NodeId v = 0; v < total; ++v) {
    if (v != na + xb) used[find(v)] = 1;
  }
  std::vector<NodeId> renumber(total, total);
  std::vector<std::optional<std::string>> final_labels;
  for (NodeId v = 0; v < total; ++v) {
    if (!used[v] || find(v) != v) continue;
    renumber[v] = final_labels.size();
    final_labels.push_back(labels[v]);
  }
  // Propagate labels of contracted nodes onto their representative.
  for (NodeId v = 0; v < total; ++v) {
    if (v == na + xb || find(v) == v || !labels[v]) continue;
    auto& slot = final_labels[renumber[find(v)]];
    if (slot) throw Error(ErrorCode::kNotATree, "merge collapses two leaves");
    slot = labels[v];
  }
  for (TreeEdge& e : merged) {
    e.a = renumber[e.a];
    e.b = renumber[e.b];
  }
  return LeafTree::from_parts(std::move(final_labels), merged).canonical();
}

}  // namespace leafpow
