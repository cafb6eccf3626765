#pragma once

#include <map>
#include <string>
#include <vector>

#include "leafpow/graph.hpp"
#include "leafpow/tree.hpp"

namespace leafpow {

struct GadgetGraph {
  Graph graph;
  /// Special vertices by role name ("t", "b", "t_I", "b_I", "v1", ...).
  std::map<std::string, Vertex> anchors;

  Vertex anchor(const std::string& name) const;
};

/// P^{k-2} on v1..v_{2k-3}; t = v_{k-2}. Requires k >= 4.
GadgetGraph top_gadget(int k);
/// Caterpillar: spine s_1..s_{2k-3} at unit gaps, v_i pendant on s_i at 1.
LeafTree top_root(int k);

/// Diamond on {b, v1, v2, v3} with v1 v3 missing.
GadgetGraph bot_gadget();
/// Root with m(b) = k-1. Requires k >= 4.
LeafTree bot_root(int k);

/// Interior gadget for k >= 5; labels t, b, x1..xq, y2..yq (+ z1, z2 for
/// even k). Anchors t_I = t and b_I = b.
GadgetGraph interior_gadget(int k);
/// Root with m(t_I) = k and m(b_I) = 3.
LeafTree interior_root_T(int k);
/// Root with m(t_I) = k-1 and m(b_I) = 4.
LeafTree interior_root_R(int k);

/// Clique x1..x_{k-1} plus y0..yk, y_i adjacent to x_{i-1}, x_i, x_{i+1}
/// where those exist. t = x1. Requires k >= 5.
GadgetGraph linear_top_gadget(int k);
LeafTree linear_top_root(int k);

enum class Part { kTop, kBot };

/// Top, n interior copies and Bot glued in series. Copy j's vertices are
/// prefixed "I<j>.", Top's "Top." and Bot's "Bot."; the junctions are named
/// "t", "j1", ..., "j<n-1>", "b" (for n = 0 the single junction is "t").
struct AssembledFamily {
  Graph graph;
  int k = 0;
  int n = 0;
  Vertex t = 0;
  Vertex b = 0;
  /// junctions[0] = t = t_I^1, junctions[j] = b_I^j = t_I^{j+1}, last = b.
  std::vector<Vertex> junctions;
  VertexSet top_vertices;  // includes t
  VertexSet bot_vertices;  // includes b
  std::vector<VertexSet> interior_vertices;
};

AssembledFamily assemble_Hn(int k, int n);

/// H_n minus Top (keeps t) or minus Bot (keeps b).
Graph family_minus(const AssembledFamily& family, Part which);

/// T_Top chained with n copies of T_I; a root of H_n - Bot.
LeafTree merged_root_minus_bot(int k, int n);
/// n copies of R_I chained into T_Bot; a root of H_n - Top.
LeafTree merged_root_minus_top(int k, int n);

/// Label of the j-th junction of H_n (0 <= j <= n).
std::string junction_label(int j, int n);

}  // namespace leafpow
