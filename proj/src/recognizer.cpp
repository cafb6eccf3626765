#include "leafpow/recognizer.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace leafpow {

namespace {

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

// ---------------------------------------------------------------------------
// Constraints

void DistanceConstraintSet::bound(const std::string& a, const std::string& b, Length lo,
                                  Length hi) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "bound on a single vertex '" + a + "'");
  auto [it, inserted] = bounds_.emplace(key(a, b), LengthBound{lo, hi});
  if (!inserted) {
    it->second.lo = std::max(it->second.lo, lo);
    it->second.hi = std::min(it->second.hi, hi);
  }
}

void DistanceConstraintSet::pin(const std::string& a, const std::string& b, Length d) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "pin on a single vertex '" + a + "'");
  auto [it, inserted] = pins_.emplace(key(a, b), d);
  if (!inserted && it->second != d) {
    throw Error(ErrorCode::kInvalidArgument, "conflicting pins on " + a + "," + b);
  }
}

void DistanceConstraintSet::min_distance(const std::string& v, Length d) {
  auto [it, inserted] = min_dist_.emplace(v, d);
  if (!inserted) it->second = std::max(it->second, d);
}

void DistanceConstraintSet::validate(const Graph& g) const {
  for (const auto& [p, b] : bounds_) {
    g.index_of(p.first);
    g.index_of(p.second);
    if (b.lo < 2 || b.lo > b.hi) {
      throw Error(ErrorCode::kInvalidArgument, "bound on " + p.first + "," + p.second +
                                                   " needs 2 <= lo <= hi");
    }
  }
  for (const auto& [p, d] : pins_) {
    g.index_of(p.first);
    g.index_of(p.second);
    if (d < 2) throw Error(ErrorCode::kInvalidArgument, "pin below 2 on " + p.first + "," + p.second);
    auto it = bounds_.find(p);
    if (it != bounds_.end() && (d < it->second.lo || d > it->second.hi)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pin on " + p.first + "," + p.second + " contradicts its bound");
    }
  }
  for (const auto& [v, d] : min_dist_) {
    g.index_of(v);
    if (d < 1) throw Error(ErrorCode::kInvalidArgument, "min-distance below 1 on " + v);
  }
}

std::vector<std::string> DistanceConstraintSet::violations(const LeafTree& tree) const {
  std::vector<std::string> out;
  auto dist = [&](const std::string& a, const std::string& b) -> std::optional<Length> {
    if (!tree.has_leaf(a) || !tree.has_leaf(b)) {
      out.push_back("missing leaf for " + a + "," + b);
      return std::nullopt;
    }
    return leaf_distance(tree, a, b);
  };
  for (const auto& [p, b] : bounds_) {
    auto d = dist(p.first, p.second);
    if (d && (*d < b.lo || *d > b.hi)) {
      out.push_back("d(" + p.first + "," + p.second + ")=" + std::to_string(*d) + " outside bound");
    }
  }
  for (const auto& [p, want] : pins_) {
    auto d = dist(p.first, p.second);
    if (d && *d != want) {
      out.push_back("d(" + p.first + "," + p.second + ")=" + std::to_string(*d) + " != " +
                    std::to_string(want));
    }
  }
  for (const auto& [v, want] : min_dist_) {
    if (!tree.has_leaf(v)) {
      out.push_back("missing leaf " + v);
    } else if (tree.leaf_count() >= 2 && min_leaf_distance(tree, v) < want) {
      out.push_back("m(" + v + ")=" + std::to_string(min_leaf_distance(tree, v)) + " < " +
                    std::to_string(want));
    }
  }
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kRoot: return "Root";
    case Verdict::kNoRoot: return "NoRoot";
    case Verdict::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Skeletons

namespace {

std::vector<std::vector<NodeId>> skeleton_adjacency(const TopologySkeleton& s) {
  std::vector<std::vector<NodeId>> adj(s.node_count);
  for (const auto& [a, b] : s.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::string rooted_code(const std::vector<std::vector<NodeId>>& adj, NodeId v, NodeId parent) {
  std::vector<std::string> kids;
  for (NodeId w : adj[v]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& c : kids) out += c;
  return out + ")";
}

}  // namespace

bool TopologySkeleton::is_caterpillar() const {
  const auto adj = skeleton_adjacency(*this);
  for (NodeId v = leaf_count; v < node_count; ++v) {
    std::size_t inner = 0;
    for (NodeId w : adj[v]) inner += w >= leaf_count;
    if (inner > 2) return false;
  }
  return true;
}

std::string TopologySkeleton::shape_code() const {
  if (node_count == 0) return "";
  if (node_count == 1) return "()";
  const auto adj = skeleton_adjacency(*this);
  // Peel leaves layer by layer to find the one or two centres.
  std::vector<std::size_t> deg(node_count);
  std::vector<NodeId> layer;
  for (NodeId v = 0; v < node_count; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = node_count;
  while (remaining > 2) {
    std::vector<NodeId> next;
    remaining -= layer.size();
    for (NodeId v : layer) {
      for (NodeId w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  if (layer.size() == 1) return rooted_code(adj, layer[0], layer[0]);
  std::string a = rooted_code(adj, layer[0], layer[1]);
  std::string b = rooted_code(adj, layer[1], layer[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

namespace {

// New leaf on edge `pos` (pos < edges) or at internal node pos - edges + leaf_count.
// Leaves stay first; the new leaf takes id leaf_count and internal ids shift.
TopologySkeleton insert_leaf(const TopologySkeleton& s, std::size_t pos) {
  TopologySkeleton out;
  out.leaf_count = s.leaf_count + 1;
  auto shift = [&](NodeId v) { return v < s.leaf_count ? v : v + 1; };
  for (const auto& [a, b] : s.edges) out.edges.emplace_back(shift(a), shift(b));
  const NodeId leaf = s.leaf_count;
  if (pos < s.edges.size()) {
    const NodeId w = s.node_count + 1;
    const NodeId b = out.edges[pos].second;
    out.edges[pos].second = w;
    out.edges.emplace_back(w, b);
    out.edges.emplace_back(w, leaf);
    out.node_count = s.node_count + 2;
  } else {
    const NodeId x = shift(pos - s.edges.size() + s.leaf_count);
    out.edges.emplace_back(x, leaf);
    out.node_count = s.node_count + 1;
  }
  return out;
}

std::size_t insertion_positions(const TopologySkeleton& s) {
  return s.edges.size() + s.internal_count();
}

TopologySkeleton two_leaf_skeleton() {
  TopologySkeleton s;
  s.leaf_count = 2;
  s.node_count = 2;
  s.edges = {{0, 1}};
  return s;
}

void require_leaves(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kTooFewLeaves, "need at least 2 leaves, got " + std::to_string(n));
}

}  // namespace

std::vector<TopologySkeleton> enumerate_shapes(std::size_t n_leaves, bool linear_only) {
  require_leaves(n_leaves);
  std::vector<TopologySkeleton> level{two_leaf_skeleton()};
  for (std::size_t m = 2; m < n_leaves; ++m) {
    std::map<std::string, TopologySkeleton> next;
    for (const auto& s : level) {
      for (std::size_t p = 0; p < insertion_positions(s); ++p) {
        TopologySkeleton t = insert_leaf(s, p);
        if (linear_only && !t.is_caterpillar()) continue;
        next.emplace(t.shape_code(), std::move(t));
      }
    }
    level.clear();
    for (auto& [code, s] : next) level.push_back(std::move(s));
  }
  std::vector<std::pair<std::string, TopologySkeleton>> keyed;
  for (auto& s : level) keyed.emplace_back(s.shape_code(), std::move(s));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.second.internal_count() != y.second.internal_count()) {
      return x.second.internal_count() < y.second.internal_count();
    }
    return x.first < y.first;
  });
  std::vector<TopologySkeleton> out;
  for (auto& [code, s] : keyed) out.push_back(std::move(s));
  return out;
}

// ---------------------------------------------------------------------------
// Length solver

namespace {

struct PathConstraint {
  std::uint64_t mask = 0;
  Length lo = 2;
  Length hi = kUnbounded;
};

// Exact integer feasibility of lo <= sum(x_e, e in path) <= hi with every
// x_e in [1, cap]: interval propagation to a fixpoint, then branching on the
// narrowest open domain.
class LengthSolver {
 public:
  LengthSolver(std::size_t edge_count, Length cap, const std::vector<PathConstraint>& cons)
      : edge_count_(edge_count), cap_(cap), cons_(cons) {}

  std::optional<std::vector<Length>> solve() {
    std::vector<Length> lb(edge_count_, 1);
    std::vector<Length> ub(edge_count_, cap_);
    if (!search(lb, ub)) return std::nullopt;
    return lb;
  }

 private:
  bool propagate(std::vector<Length>& lb, std::vector<Length>& ub) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const PathConstraint& c : cons_) {
        Length slb = 0;
        Length sub = 0;
        for (std::uint64_t m = c.mask; m; m &= m - 1) {
          const int e = std::countr_zero(m);
          slb += lb[e];
          sub += ub[e];
        }
        if (slb > c.hi || sub < c.lo) return false;
        if (c.hi < kUnbounded && sub > c.hi) {
          for (std::uint64_t m = c.mask; m; m &= m - 1) {
            const int e = std::countr_zero(m);
            const Length cap = c.hi - (slb - lb[e]);
            if (cap < ub[e]) {
              sub -= ub[e] - cap;
              ub[e] = cap;
              changed = true;
            }
          }
        }
        if (slb < c.lo) {
          for (std::uint64_t m = c.mask; m; m &= m - 1) {
            const int e = std::countr_zero(m);
            const Length need = c.lo - (sub - ub[e]);
            if (need > lb[e]) {
              lb[e] = need;
              changed = true;
              if (lb[e] > ub[e]) return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool search(std::vector<Length>& lb, std::vector<Length>& ub) const {
    if (!propagate(lb, ub)) return false;
    std::size_t pick = edge_count_;
    Length width = 0;
    for (std::size_t e = 0; e < edge_count_; ++e) {
      const Length w = ub[e] - lb[e];
      if (w > 0 && (pick == edge_count_ || w < width)) {
        pick = e;
        width = w;
      }
    }
    if (pick == edge_count_) return true;
    for (Length v = lb[pick]; v <= ub[pick]; ++v) {
      std::vector<Length> l2 = lb;
      std::vector<Length> u2 = ub;
      l2[pick] = u2[pick] = v;
      if (search(l2, u2)) {
        lb = std::move(l2);
        return true;
      }
    }
    return false;
  }

  std::size_t edge_count_;
  Length cap_;
  const std::vector<PathConstraint>& cons_;
};

// Required distance window for every vertex pair of G.
struct PairTable {
  std::size_t n = 0;
  std::vector<Length> lo;
  std::vector<Length> hi;
  Length cap = 0;
  bool consistent = true;

  Length low(Vertex u, Vertex v) const { return lo[u * n + v]; }
  Length high(Vertex u, Vertex v) const { return hi[u * n + v]; }
};

PairTable build_pair_table(const Graph& g, Length k, const DistanceConstraintSet& c) {
  PairTable t;
  t.n = g.size();
  t.lo.assign(t.n * t.n, 0);
  t.hi.assign(t.n * t.n, 0);
  t.cap = k + 1;
  auto tighten = [&](Vertex u, Vertex v, Length lo, Length hi) {
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      t.lo[a * t.n + b] = std::max(t.lo[a * t.n + b], lo);
      t.hi[a * t.n + b] = std::min(t.hi[a * t.n + b], hi);
    }
  };
  for (Vertex u = 0; u < t.n; ++u) {
    for (Vertex v = u + 1; v < t.n; ++v) {
      t.hi[u * t.n + v] = t.hi[v * t.n + u] = kUnbounded;
      if (g.adjacent(u, v)) {
        tighten(u, v, are_true_twins(g, u, v) ? 2 : 3, k);
      } else {
        tighten(u, v, k + 1, kUnbounded);
      }
    }
  }
  for (const auto& [p, b] : c.bounds()) {
    tighten(g.index_of(p.first), g.index_of(p.second), b.lo, b.hi);
    t.cap = std::max(t.cap, b.lo);
  }
  for (const auto& [p, d] : c.pins()) {
    tighten(g.index_of(p.first), g.index_of(p.second), d, d);
    t.cap = std::max(t.cap, d);
  }
  for (const auto& [label, d] : c.min_distances()) {
    const Vertex v = g.index_of(label);
    for (Vertex u = 0; u < t.n; ++u) {
      if (u != v) tighten(u, v, d, kUnbounded);
    }
    t.cap = std::max(t.cap, d);
  }
  for (Vertex u = 0; u < t.n; ++u) {
    for (Vertex v = u + 1; v < t.n; ++v) {
      if (t.low(u, v) > t.high(u, v)) t.consistent = false;
    }
  }
  return t;
}

constexpr std::size_t kMaxEdges = 64;

// Leaf-to-leaf path masks for a tree given as an edge list. `leaf_nodes[i]` is
// the node of the i-th leaf; returns masks[i * L + j].
std::vector<std::uint64_t> path_masks(std::size_t node_count,
                                      const std::vector<std::pair<NodeId, NodeId>>& edges,
                                      const std::vector<NodeId>& leaf_nodes) {
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(node_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, e);
    adj[edges[e].second].emplace_back(edges[e].first, e);
  }
  const std::size_t L = leaf_nodes.size();
  std::vector<std::uint64_t> out(L * L, 0);
  std::vector<std::uint64_t> to(node_count);
  std::vector<NodeId> stack;
  std::vector<NodeId> parent(node_count);
  for (std::size_t i = 0; i < L; ++i) {
    const NodeId s = leaf_nodes[i];
    to[s] = 0;
    parent[s] = s;
    stack.assign(1, s);
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (const auto& [y, e] : adj[x]) {
        if (y == parent[x] && x != s) continue;
        if (y == s) continue;
        parent[y] = x;
        to[y] = to[x] | (std::uint64_t{1} << e);
        stack.push_back(y);
      }
    }
    for (std::size_t j = 0; j < L; ++j) out[i * L + j] = to[leaf_nodes[j]];
  }
  return out;
}

std::optional<std::vector<Length>> solve_tree(std::size_t node_count,
                                              const std::vector<std::pair<NodeId, NodeId>>& edges,
                                              const std::vector<NodeId>& leaf_nodes,
                                              const std::vector<Vertex>& vertex_of,
                                              const PairTable& table) {
  if (edges.size() > kMaxEdges) {
    throw Error(ErrorCode::kInvalidArgument, "tree has more than 64 edges");
  }
  const auto masks = path_masks(node_count, edges, leaf_nodes);
  const std::size_t L = leaf_nodes.size();
  std::vector<PathConstraint> cons;
  cons.reserve(L * (L - 1) / 2);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      const Vertex u = vertex_of[i];
      const Vertex v = vertex_of[j];
      cons.push_back({masks[i * L + j], table.low(u, v), table.high(u, v)});
    }
  }
  // Tight windows first: they fail fastest.
  std::stable_sort(cons.begin(), cons.end(), [](const PathConstraint& a, const PathConstraint& b) {
    return (a.hi < kUnbounded) > (b.hi < kUnbounded);
  });
  return LengthSolver(edges.size(), table.cap, cons).solve();
}

}  // namespace

std::optional<std::vector<Length>> solve_lengths(const TopologySkeleton& s, const Graph& g,
                                                 Length k, const DistanceConstraintSet& c) {
  if (s.slots.size() != s.leaf_count || s.leaf_count != g.size()) {
    throw Error(ErrorCode::kSlotMismatch, "skeleton has " + std::to_string(s.slots.size()) +
                                              " filled slots for " + std::to_string(g.size()) +
                                              " vertices");
  }
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : s.slots) {
    if (v >= g.size() || seen[v]) throw Error(ErrorCode::kSlotMismatch, "slots are not a permutation");
    seen[v] = 1;
  }
  c.validate(g);
  const PairTable table = build_pair_table(g, k, c);
  if (!table.consistent) return std::nullopt;
  std::vector<NodeId> leaf_nodes(s.leaf_count);
  for (std::size_t i = 0; i < s.leaf_count; ++i) leaf_nodes[i] = i;
  return solve_tree(s.node_count, s.edges, leaf_nodes, s.slots, table);
}

LeafTree skeleton_tree(const TopologySkeleton& s, const Graph& g, const std::vector<Length>& lengths) {
  if (lengths.size() != s.edges.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one length per skeleton edge expected");
  }
  std::vector<std::optional<std::string>> labels(s.node_count);
  for (std::size_t i = 0; i < s.leaf_count; ++i) labels[i] = g.label(s.slots.at(i));
  std::vector<TreeEdge> edges;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    edges.push_back({s.edges[e].first, s.edges[e].second, lengths[e]});
  }
  return LeafTree::from_parts(std::move(labels), edges).canonical();
}

// ---------------------------------------------------------------------------
// Incremental leaf insertion

namespace {

// Leaf-labeled tree grown one leaf at a time. Every leaf-labeled topology on
// m+1 leaves arises from exactly one on m leaves (drop the last leaf and
// suppress) and exactly one insertion position, so the insertion tree visits
// each topology once.
class PartialTree {
 public:
  void start() {
    is_leaf_ = {1, 1};
    leaf_nodes_ = {0, 1};
    edges_ = {{0, 1}};
  }

  std::size_t nodes() const { return is_leaf_.size(); }
  std::size_t leaves() const { return leaf_nodes_.size(); }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  const std::vector<NodeId>& leaf_nodes() const { return leaf_nodes_; }
  bool is_leaf(NodeId v) const { return is_leaf_[v] != 0; }

  void insert_on_edge(std::size_t e) {
    const auto [a, b] = edges_[e];
    const NodeId w = nodes();
    is_leaf_.push_back(0);
    const NodeId l = nodes();
    is_leaf_.push_back(1);
    edges_[e] = {a, w};
    edges_.emplace_back(w, b);
    edges_.emplace_back(w, l);
    leaf_nodes_.push_back(l);
  }

  void undo_edge(std::size_t e) {
    edges_.pop_back();
    edges_[e].second = edges_.back().second;
    edges_.pop_back();
    is_leaf_.resize(is_leaf_.size() - 2);
    leaf_nodes_.pop_back();
  }

  void insert_at_node(NodeId x) {
    const NodeId l = nodes();
    is_leaf_.push_back(1);
    edges_.emplace_back(x, l);
    leaf_nodes_.push_back(l);
  }

  void undo_node() {
    edges_.pop_back();
    is_leaf_.pop_back();
    leaf_nodes_.pop_back();
  }

  bool is_caterpillar() const {
    std::vector<int> inner(nodes(), 0);
    for (const auto& [a, b] : edges_) {
      if (!is_leaf(a) && !is_leaf(b)) {
        if (++inner[a] > 2 || ++inner[b] > 2) return false;
      }
    }
    return true;
  }

  // Leaves renumbered to their insertion rank, internal nodes after them.
  TopologySkeleton skeleton(const std::vector<Vertex>& vertex_of) const {
    TopologySkeleton s;
    s.leaf_count = leaves();
    s.node_count = nodes();
    std::vector<NodeId> id(nodes());
    for (std::size_t i = 0; i < leaves(); ++i) id[leaf_nodes_[i]] = i;
    NodeId next = leaves();
    for (NodeId v = 0; v < nodes(); ++v) {
      if (!is_leaf(v)) id[v] = next++;
    }
    for (const auto& [a, b] : edges_) s.edges.emplace_back(id[a], id[b]);
    s.slots.assign(vertex_of.begin(), vertex_of.begin() + leaves());
    return s;
  }

 private:
  std::vector<char> is_leaf_;
  std::vector<NodeId> leaf_nodes_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

// Calls grow() once per child of the current partial tree; stops when it
// returns false.
template <typename Fn>
bool for_each_insertion(PartialTree& pt, bool linear_only, Fn&& grow) {
  const std::size_t edge_count = pt.edges().size();
  for (std::size_t e = 0; e < edge_count; ++e) {
    pt.insert_on_edge(e);
    const bool go = (linear_only && !pt.is_caterpillar()) || grow();
    pt.undo_edge(e);
    if (!go) return false;
  }
  const std::size_t node_count = pt.nodes();
  for (NodeId x = 0; x < node_count; ++x) {
    if (pt.is_leaf(x)) continue;
    pt.insert_at_node(x);
    const bool go = (linear_only && !pt.is_caterpillar()) || grow();
    pt.undo_node();
    if (!go) return false;
  }
  return true;
}

}  // namespace

std::uint64_t enumerate_topologies(std::size_t n_leaves, bool linear_only,
                                   const std::function<bool(const TopologySkeleton&)>& visit) {
  require_leaves(n_leaves);
  std::vector<Vertex> identity(n_leaves);
  for (Vertex v = 0; v < n_leaves; ++v) identity[v] = v;
  PartialTree pt;
  pt.start();
  std::uint64_t count = 0;
  std::function<bool()> grow = [&]() -> bool {
    if (pt.leaves() == n_leaves) {
      ++count;
      return visit(pt.skeleton(identity));
    }
    return for_each_insertion(pt, linear_only, grow);
  };
  grow();
  return count;
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  Clock::time_point start = Clock::now();
  RecognizeOptions options;
  bool exceeded = false;

  bool check(const SearchStats& stats) {
    if (options.node_budget && stats.partial_topologies > *options.node_budget) exceeded = true;
    if (options.time_budget && (stats.partial_topologies & 255) == 0 &&
        Clock::now() - start > *options.time_budget) {
      exceeded = true;
    }
    return !exceeded;
  }
};

// Placement order: start at a vertex of maximum degree, then repeatedly take
// the vertex with the most placed neighbours (ties: higher degree, then lower
// index). Early adjacency gives tight upper bounds and prunes sooner.
std::vector<Vertex> insertion_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Vertex> order;
  std::vector<int> placed_nb(n, 0);
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || placed_nb[v] > placed_nb[best] ||
          (placed_nb[v] == placed_nb[best] && g.degree(v) > g.degree(best))) {
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nb[w];
  }
  return order;
}

class Search {
 public:
  Search(const Graph& g, const PairTable& table, bool linear_only, Budget& budget,
         SearchStats& stats)
      : g_(g), table_(table), linear_only_(linear_only), budget_(budget), stats_(stats),
        order_(insertion_order(g)) {}

  // Returns a witness, nullopt when exhausted (or when the budget ran out).
  std::optional<LeafTree> run() {
    pt_.start();
    grow();
    return std::move(witness_);
  }

 private:
  bool grow() {
    ++stats_.partial_topologies;
    if (!budget_.check(stats_)) return false;
    const bool complete = pt_.leaves() == g_.size();
    if (complete) ++stats_.topologies;
    ++stats_.systems;
    auto lengths = solve_tree(pt_.nodes(), pt_.edges(), pt_.leaf_nodes(), order_, table_);
    if (!lengths) return true;
    if (complete) {
      witness_ = build(*lengths);
      return false;
    }
    return for_each_insertion(pt_, linear_only_, [this] { return grow(); });
  }

  LeafTree build(const std::vector<Length>& lengths) const {
    std::vector<std::optional<std::string>> labels(pt_.nodes());
    for (std::size_t i = 0; i < pt_.leaves(); ++i) labels[pt_.leaf_nodes()[i]] = g_.label(order_[i]);
    std::vector<TreeEdge> edges;
    for (std::size_t e = 0; e < pt_.edges().size(); ++e) {
      edges.push_back({pt_.edges()[e].first, pt_.edges()[e].second, lengths[e]});
    }
    return LeafTree::from_parts(std::move(labels), edges).canonical();
  }

  const Graph& g_;
  const PairTable& table_;
  bool linear_only_;
  Budget& budget_;
  SearchStats& stats_;
  std::vector<Vertex> order_;
  PartialTree pt_;
  std::optional<LeafTree> witness_;
};

// Decides one graph without splitting it into components.
std::optional<LeafTree> search_whole(const Graph& g, Length k, const DistanceConstraintSet& c,
                                     bool linear_only, Budget& budget, SearchStats& stats) {
  if (g.size() == 0) return LeafTree{};
  if (g.size() == 1) {
    TreeBuilder tb;
    tb.add_leaf(g.label(0));
    return tb.build();
  }
  const PairTable table = build_pair_table(g, k, c);
  if (!table.consistent) return std::nullopt;
  return Search(g, table, linear_only, budget, stats).run();
}

DistanceConstraintSet restrict_constraints(const DistanceConstraintSet& c, const Graph& sub) {
  DistanceConstraintSet out;
  for (const auto& [p, b] : c.bounds()) {
    if (sub.find(p.first) && sub.find(p.second)) out.bound(p.first, p.second, b.lo, b.hi);
  }
  for (const auto& [p, d] : c.pins()) {
    if (sub.find(p.first) && sub.find(p.second)) out.pin(p.first, p.second, d);
  }
  for (const auto& [v, d] : c.min_distances()) {
    if (sub.find(v)) out.min_distance(v, d);
  }
  return out;
}

bool crosses_components(const DistanceConstraintSet& c, const Graph& g,
                        const std::vector<std::size_t>& comp_of) {
  auto crosses = [&](const std::pair<std::string, std::string>& p) {
    return comp_of[g.index_of(p.first)] != comp_of[g.index_of(p.second)];
  };
  for (const auto& [p, b] : c.bounds()) {
    if (crosses(p)) return true;
  }
  for (const auto& [p, d] : c.pins()) {
    if (crosses(p)) return true;
  }
  return false;
}

// Chains component roots end to end with bridges of length `bridge`. Each root
// contributes one attachment node at each end of its spine (or any internal
// node when it has no spine), so caterpillars stay caterpillars.
LeafTree join_roots(const std::vector<LeafTree>& roots, Length bridge) {
  std::vector<std::optional<std::string>> labels;
  std::vector<TreeEdge> edges;
  NodeId prev_tail = 0;
  bool first = true;
  for (const LeafTree& raw : roots) {
    const LeafTree t = raw.canonical();
    const NodeId base = labels.size();
    for (NodeId v = 0; v < t.node_count(); ++v) {
      labels.push_back(t.is_leaf(v) ? std::optional<std::string>(t.label(v)) : std::nullopt);
    }
    for (const TreeEdge& e : t.edges()) edges.push_back({base + e.a, base + e.b, e.length});
    NodeId head = 0;
    NodeId tail = 0;
    if (t.internal_count() == 0) {
      // One or two leaves: hang them from a fresh attachment node.
      const NodeId p = labels.size();
      labels.emplace_back();
      if (t.leaf_count() == 1) {
        edges.push_back({base, p, 1});
      } else {
        const Length len = t.arcs(0).front().length;
        edges.erase(edges.end() - 1);
        edges.push_back({base, p, 1});
        edges.push_back({p, base + 1, len - 1});
      }
      head = tail = p;
    } else {
      const CaterpillarReport cat = is_caterpillar_subdivision(t);
      if (cat.ok && !cat.spine.empty()) {
        head = base + cat.spine.front();
        tail = base + cat.spine.back();
      } else {
        head = tail = base + t.leaf_count();
      }
    }
    if (!first) edges.push_back({prev_tail, head, bridge});
    prev_tail = tail;
    first = false;
  }
  return LeafTree::from_parts(std::move(labels), edges).canonical();
}

}  // namespace

RecognitionResult recognize(const Graph& g, Length k, const DistanceConstraintSet& c,
                            const RecognizeOptions& options) {
  if (k < 2) throw Error(ErrorCode::kKTooSmall, "k=" + std::to_string(k) + " (need k >= 2)");
  c.validate(g);
  Budget budget;
  budget.options = options;
  RecognitionResult result;

  const auto comps = connected_components(g);
  std::vector<std::size_t> comp_of(g.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex v : comps[i]) comp_of[v] = i;
  }
  std::optional<LeafTree> witness;
  if (comps.size() > 1 && !crosses_components(c, g, comp_of)) {
    std::vector<LeafTree> roots;
    Length cap = k + 1;
    for (const auto& [p, b] : c.bounds()) cap = std::max(cap, b.lo);
    for (const auto& [p, d] : c.pins()) cap = std::max(cap, d);
    for (const auto& [v, d] : c.min_distances()) cap = std::max(cap, d);
    for (const auto& comp : comps) {
      const Graph sub = induced_subgraph(g, comp);
      auto root = search_whole(sub, k, restrict_constraints(c, sub), options.linear_only, budget,
                               result.stats);
      if (!root) break;
      roots.push_back(std::move(*root));
    }
    if (roots.size() == comps.size()) witness = join_roots(roots, std::max(2 * k + 1, cap));
  } else {
    witness = search_whole(g, k, c, options.linear_only, budget, result.stats);
  }
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - budget.start).count();

  if (budget.exceeded) {
    result.verdict = Verdict::kBudgetExceeded;
    return result;
  }
  if (!witness) {
    result.verdict = Verdict::kNoRoot;
    return result;
  }
  // Soundness guard: a witness that fails re-verification is a bug.
  if (!verify_leaf_root(*witness, g, k).ok || !c.violations(*witness).empty() ||
      (options.linear_only && witness->leaf_count() >= 2 &&
       !is_caterpillar_subdivision(*witness).ok)) {
    throw std::logic_error("recognizer produced an invalid witness");
  }
  result.verdict = Verdict::kRoot;
  result.witness = std::move(witness);
  return result;
}

std::vector<SmallGraphVerdict> recognize_all_small(std::size_t n_max, Length k) {
  if (n_max > 6) throw Error(ErrorCode::kInvalidArgument, "n_max must be at most 6");
  std::vector<SmallGraphVerdict> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      out.push_back({n, mask, recognize(g, k).has_root()});
    }
  }
  return out;
}

}  // namespace leafpow
