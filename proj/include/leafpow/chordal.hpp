#pragma once

#include <optional>
#include <span>
#include <vector>

#include "leafpow/graph.hpp"

namespace leafpow {

enum class OrderingKind { kPerfect, kSimple };

struct EliminationOrdering {
  std::vector<Vertex> order;
  OrderingKind kind = OrderingKind::kPerfect;
};

struct ChordalityResult {
  bool holds = false;
  std::optional<EliminationOrdering> witness;
};

/// Maximum cardinality search, then an explicit check that the reversed visit
/// order is a perfect elimination ordering. Ties go to the lowest index.
ChordalityResult is_chordal(const Graph& g);

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order);

/// Neighbours' closed neighbourhoods form a chain under inclusion.
bool is_simple_vertex(const Graph& g, Vertex v);

/// Greedy removal of simple vertices; the witness is the removal sequence.
ChordalityResult is_strongly_chordal(const Graph& g);

/// Same procedure with ties broken by `priority` (a permutation of the vertex
/// indices; earlier entries are preferred).
ChordalityResult is_strongly_chordal(const Graph& g, std::span<const Vertex> priority);

bool is_simple_elimination_ordering(const Graph& g, std::span<const Vertex> order);

}  // namespace leafpow
