#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leafpow/error.hpp"

namespace leafpow {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on dense indices 0..n-1 with a distinct string
/// label per vertex. Immutable once built; deletion goes through
/// induced_subgraph().
class Graph {
 public:
  Graph() = default;

  /// Throws DuplicateLabel, IndexOutOfRange or SelfLoop. Duplicate edges
  /// collapse.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Vertex> find(std::string_view label) const;
  /// Like find(), but throws UnknownLabel.
  Vertex index_of(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && adj_ == other.adj_;
  }

 private:
  void check_index(Vertex v) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t edge_count_ = 0;
};

Graph new_graph(std::size_t n, std::vector<std::string> labels,
                std::span<const Edge> edges);

/// Builds a graph from label pairs; every label mentioned must be in
/// `labels`.
Graph graph_from_label_edges(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> edges);

/// Sorts and dedups `members`, then checks them against `g`.
VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> members);

/// Reindexes densely in the order of `s`; labels are preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Convenience: induced subgraph on all vertices except `removed`.
Graph delete_vertex(const Graph& g, Vertex removed);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

bool are_true_twins(const Graph& g, Vertex u, Vertex v);

/// BFS edge count; nullopt when unreachable.
std::optional<std::size_t> graph_distance(const Graph& g, Vertex u, Vertex v);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Labeled graph on labels "0".."n-1" whose edge set is given by the bits of
/// `mask` over the pairs (i, j), i < j, in lexicographic order.
Graph graph_from_mask(std::size_t n, unsigned long long mask);

/// Named small graphs used throughout tests and the CLI.
namespace named {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph diamond();
Graph bull();
Graph dart();
Graph gem();
Graph sun3();
}  // namespace named

}  // namespace leafpow
