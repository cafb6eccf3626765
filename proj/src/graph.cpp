#include "leafpow/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace leafpow {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNonPositiveLength: return "NonPositiveLength";
    case ErrorCode::kDuplicateLeafLabel: return "DuplicateLeafLabel";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kSingleLeaf: return "SingleLeaf";
    case ErrorCode::kMalformedMatrix: return "MalformedMatrix";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kTooFewLeaves: return "TooFewLeaves";
    case ErrorCode::kSlotMismatch: return "SlotMismatch";
    case ErrorCode::kInputIsLeafPower: return "InputIsLeafPower";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw Error(ErrorCode::kDuplicateLabel, "label '" + labels_[v] + "'");
    }
  }
  adj_.assign(n, {});
  matrix_.assign(n * n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") with n=" + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u));
    }
    if (matrix_[u * n + v]) continue;
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_index(Vertex v) const {
  if (v >= size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(v) + " with n=" +
                    std::to_string(size()));
  }
}

const std::string& Graph::label(Vertex v) const {
  check_index(v);
  return labels_[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) {
    throw Error(ErrorCode::kUnknownLabel, "no vertex '" + std::string(label) + "'");
  }
  return *v;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_index(u);
  check_index(v);
  return matrix_[u * size() + v] != 0;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_index(v);
  return adj_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph new_graph(std::size_t n, std::vector<std::string> labels,
                std::span<const Edge> edges) {
  if (labels.size() != n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "expected " + std::to_string(n) + " labels, got " +
                    std::to_string(labels.size()));
  }
  return Graph(std::move(labels), edges);
}

Graph graph_from_label_edges(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> edges) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorCode::kUnknownLabel, "edge " + a + " " + b);
    }
    idx.emplace_back(ia->second, ib->second);
  }
  return Graph(std::move(labels), idx);
}

VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= g.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(members.back()));
  }
  return members;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<std::size_t> pos(g.size(), g.size());
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(s[i]));
    }
    pos[s[i]] = i;
    labels.push_back(g.label(s[i]));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      if (pos[w] != g.size() && i < pos[w]) edges.emplace_back(i, pos[w]);
    }
  }
  return Graph(std::move(labels), edges);
}

Graph delete_vertex(const Graph& g, Vertex removed) {
  VertexSet keep;
  keep.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v != removed) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
  return closed_neighborhood(g, u) == closed_neighborhood(g, v);
}

std::optional<std::size_t> graph_distance(const Graph& g, Vertex u, Vertex v) {
  g.label(u);
  g.label(v);
  if (u == v) return 0;
  std::vector<std::size_t> dist(g.size(), g.size());
  std::queue<Vertex> queue;
  dist[u] = 0;
  queue.push(u);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != g.size()) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push(y);
    }
  }
  return std::nullopt;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.size(), 0);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph graph_from_mask(std::size_t n, unsigned long long mask) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1ULL) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(labels), edges);
}

namespace named {

namespace {
std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
  return out;
}
}  // namespace

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(letters(n), edges);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(letters(n), edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(letters(n), edges);
}

Graph diamond() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
  return Graph({"b", "v1", "v2", "v3"}, edges);
}

// Triangle a-b-c with pendants d on a and e on b.
Graph bull() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}};
  return Graph(letters(5), edges);
}

// Diamond a,b,c,d (b-d missing) plus pendant e on a degree-3 vertex.
Graph dart() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}};
  return Graph(letters(5), edges);
}

// Path a-b-c-d plus e adjacent to all of them.
Graph gem() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3},
                                {4, 0}, {4, 1}, {4, 2}, {4, 3}};
  return Graph(letters(5), edges);
}

Graph sun3() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 0},
                                {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};
  return Graph(letters(6), edges);
}

}  // namespace named

}  // namespace leafpow
