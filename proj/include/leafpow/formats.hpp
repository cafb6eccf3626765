#pragma once

#include <string>
#include <string_view>

#include "leafpow/graph.hpp"
#include "leafpow/tree.hpp"

namespace leafpow {

// Edge-list text:
//   n <count>
//   <label>            one line per vertex, index order
//   <label> <label>    one line per edge, sorted by (min index, max index)
std::string emit_graph(const Graph& g);
Graph parse_graph(std::string_view text);

// `graph G {` with one quoted node line per vertex and one `"a" -- "b";` line
// per edge, in the same order as the edge-list format.
std::string emit_graph_dot(const Graph& g);
Graph parse_graph_dot(std::string_view text);

// Parenthesised tree text: `(child:len,child:len,...)`, a leaf child written
// as `label:len`. The emitter roots at the parent of the smallest leaf label
// and sorts children by their smallest leaf label. Single-leaf trees are the
// bare label; the empty tree is `()`.
std::string emit_tree(const LeafTree& tree);
LeafTree parse_tree(std::string_view text);

std::string emit_tree_dot(const LeafTree& tree);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// FNV-1a 64-bit digest, hex encoded.
std::string digest(std::string_view contents);

}  // namespace leafpow
