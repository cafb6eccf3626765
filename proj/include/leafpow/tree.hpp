#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafpow/graph.hpp"

namespace leafpow {

using NodeId = std::size_t;
using Length = std::int64_t;

struct TreeEdge {
  NodeId a = 0;
  NodeId b = 0;
  Length length = 1;
};

struct Arc {
  NodeId to = 0;
  Length length = 1;
};

/// Tree with positive integer edge lengths whose labelled nodes are exactly
/// its leaves. Internal nodes of degree 2 are allowed in raw trees (see
/// subdivide_to_unit) and removed by canonical().
class LeafTree {
 public:
  LeafTree() = default;

  /// Validates without suppressing degree-2 nodes. `node_labels[i]` is set
  /// exactly for leaves. Throws NotATree, NonPositiveLength,
  /// DuplicateLeafLabel.
  static LeafTree from_parts(std::vector<std::optional<std::string>> node_labels,
                             const std::vector<TreeEdge>& edges);

  /// Degree-2 internal nodes merged (lengths summed); leaves renumbered
  /// 0..L-1 in label order, internal nodes after them.
  LeafTree canonical() const;
  bool is_canonical() const;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t leaf_count() const { return leaf_index_.size(); }
  std::size_t internal_count() const { return node_count() - leaf_count(); }

  bool is_leaf(NodeId node) const { return labels_.at(node).has_value(); }
  const std::string& label(NodeId node) const;
  NodeId leaf(std::string_view label) const;
  bool has_leaf(std::string_view label) const;

  /// Leaf labels in sorted order.
  std::vector<std::string> leaf_labels() const;
  /// Leaf nodes ordered by label.
  std::vector<NodeId> leaves() const;

  const std::vector<Arc>& arcs(NodeId node) const { return adj_.at(node); }
  std::size_t degree(NodeId node) const { return adj_.at(node).size(); }
  std::vector<TreeEdge> edges() const;

  /// Weighted distance from `from` to every node.
  std::vector<Length> distances_from(NodeId from) const;

 private:
  std::vector<std::optional<std::string>> labels_;
  std::vector<std::vector<Arc>> adj_;
  std::map<std::string, NodeId, std::less<>> leaf_index_;
};

/// Builds and canonicalizes. `leaf_labels` maps node id to label.
LeafTree new_leaf_tree(std::size_t node_count,
                       const std::map<NodeId, std::string>& leaf_labels,
                       const std::vector<TreeEdge>& edges);

/// Incremental builder used by the gadget constructors.
class TreeBuilder {
 public:
  NodeId add_internal();
  NodeId add_leaf(std::string label);
  void connect(NodeId a, NodeId b, Length length);
  /// New leaf hanging off `parent` at the given length.
  NodeId pendant(NodeId parent, std::string label, Length length);
  LeafTree build() const;

 private:
  std::vector<std::optional<std::string>> labels_;
  std::vector<TreeEdge> edges_;
};

LeafTree subdivide_to_unit(const LeafTree& tree);

Length leaf_distance(const LeafTree& tree, std::string_view a, std::string_view b);

struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<Length> d;  // row-major, labels.size() squared

  std::size_t size() const { return labels.size(); }
  Length at(std::size_t i, std::size_t j) const { return d[i * size() + j]; }
  Length& at(std::size_t i, std::size_t j) { return d[i * size() + j]; }
  bool operator==(const DistanceMatrix&) const = default;
};

/// Rows and columns follow sorted leaf labels.
DistanceMatrix distance_matrix(const LeafTree& tree);

/// m_T(v): nearest other leaf. Throws UnknownLabel or SingleLeaf.
Length min_leaf_distance(const LeafTree& tree, std::string_view v);

struct FourPointViolation {
  std::array<std::string, 4> labels;  // (u, v, w, t)
  Length uv_wt = 0;
  Length uw_vt = 0;
  Length vw_ut = 0;
};

struct FourPointReport {
  bool ok = true;
  std::optional<FourPointViolation> violation;
};

/// d(u,v)+d(w,t) <= max(d(u,w)+d(v,t), d(v,w)+d(u,t)) over all ordered
/// quadruples of distinct points; the first violation in index order is
/// reported. Throws MalformedMatrix.
FourPointReport check_four_point(const DistanceMatrix& d);

struct ParityReport {
  bool ok = true;
  std::optional<std::array<std::string, 3>> violation;
};

/// Every triple must have even perimeter.
ParityReport check_parity(const DistanceMatrix& d);

void validate_matrix(const DistanceMatrix& d);

/// Graph on leaf labels (sorted) with uv an edge iff 0 < d(u,v) <= k.
Graph leaf_power_graph(const LeafTree& tree, Length k);

struct Discrepancy {
  enum class Kind { kLeafSetMismatch, kMissingEdge, kExtraEdge };
  Kind kind;
  std::string a;
  std::string b;
  Length distance = 0;
};

struct RootCheck {
  bool ok = true;
  std::vector<Discrepancy> discrepancies;
};

RootCheck verify_leaf_root(const LeafTree& tree, const Graph& g, Length k);

struct CaterpillarReport {
  bool ok = false;
  /// Internal nodes of the canonical tree along the spine, end to end. Empty
  /// for the two-leaf tree.
  std::vector<NodeId> spine;
};

/// True iff the canonical tree's internal nodes induce a path. Throws
/// SingleLeaf for fewer than two leaves.
CaterpillarReport is_caterpillar_subdivision(const LeafTree& tree);

/// Renames leaves; labels not in the map keep their name, prefixed.
LeafTree relabel(const LeafTree& tree, const std::string& prefix,
                 const std::map<std::string, std::string>& overrides);

/// Glues `b` onto `a` at a leaf they share: the common leaf and its parent on
/// the unit subdivision are identified. Every distance inside `a` and inside
/// `b` is preserved.
LeafTree merge_at_leaf(const LeafTree& a, const LeafTree& b, std::string_view shared);

}  // namespace leafpow
