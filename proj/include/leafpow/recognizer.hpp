#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leafpow/graph.hpp"
#include "leafpow/tree.hpp"

namespace leafpow {

inline constexpr Length kUnbounded = std::numeric_limits<Length>::max() / 4;

/// Unweighted tree shape. Nodes 0..leaf_count-1 are the leaf slots, the rest
/// are internal nodes of degree >= 3. `slots[i]` is the graph vertex placed in
/// slot i; it is empty for an unlabeled shape.
struct TopologySkeleton {
  std::size_t leaf_count = 0;
  std::size_t node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<Vertex> slots;

  std::size_t internal_count() const { return node_count - leaf_count; }
  /// Internal nodes induce a path.
  bool is_caterpillar() const;
  /// Unlabeled isomorphism code (leaf slots ignored).
  std::string shape_code() const;
};

struct LengthBound {
  Length lo = 2;
  Length hi = kUnbounded;
};

/// Extra requirements on a root, keyed by vertex labels. Pair keys are stored
/// with the smaller label first.
class DistanceConstraintSet {
 public:
  /// lo <= d(a,b) <= hi. Repeated calls intersect.
  void bound(const std::string& a, const std::string& b, Length lo, Length hi = kUnbounded);
  /// d(a,b) == d.
  void pin(const std::string& a, const std::string& b, Length d);
  /// m_T(v) >= d.
  void min_distance(const std::string& v, Length d);

  const std::map<std::pair<std::string, std::string>, LengthBound>& bounds() const {
    return bounds_;
  }
  const std::map<std::pair<std::string, std::string>, Length>& pins() const { return pins_; }
  const std::map<std::string, Length>& min_distances() const { return min_dist_; }
  bool empty() const { return bounds_.empty() && pins_.empty() && min_dist_.empty(); }

  /// Throws InvalidArgument when lo > hi, lo < 2, or a pin falls outside its
  /// bound; UnknownLabel when a label is missing from `g`.
  void validate(const Graph& g) const;
  /// Human-readable list of constraints the tree breaks (empty when none).
  std::vector<std::string> violations(const LeafTree& tree) const;

 private:
  std::map<std::pair<std::string, std::string>, LengthBound> bounds_;
  std::map<std::pair<std::string, std::string>, Length> pins_;
  std::map<std::string, Length> min_dist_;
};

enum class Verdict { kRoot, kNoRoot, kBudgetExceeded };

std::string_view verdict_name(Verdict v);

struct SearchStats {
  /// Complete labeled topologies whose length system was solved.
  std::uint64_t topologies = 0;
  /// Partial trees visited, complete ones included.
  std::uint64_t partial_topologies = 0;
  /// Length systems handed to the solver.
  std::uint64_t systems = 0;
  double elapsed_ms = 0;
};

struct RecognitionResult {
  Verdict verdict = Verdict::kNoRoot;
  std::optional<LeafTree> witness;
  SearchStats stats;

  bool has_root() const { return verdict == Verdict::kRoot; }
};

struct RecognizeOptions {
  bool linear_only = false;
  /// Limit on visited partial trees.
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;
};

/// Every unlabeled shape with `n_leaves` leaves and internal degree >= 3, once
/// each, ordered by internal-node count then shape code. Throws TooFewLeaves.
std::vector<TopologySkeleton> enumerate_shapes(std::size_t n_leaves, bool linear_only);

/// Streams every leaf-labeled topology on slots 0..n-1 exactly once (slot i
/// carries vertex i). The callback returns false to stop early. Returns the
/// number of topologies produced. Throws TooFewLeaves.
std::uint64_t enumerate_topologies(std::size_t n_leaves, bool linear_only,
                                   const std::function<bool(const TopologySkeleton&)>& visit);

/// Edge lengths (indexed like `s.edges`) realizing G as a k-leaf power on this
/// skeleton under `c`, or nullopt when none exists. Throws SlotMismatch.
std::optional<std::vector<Length>> solve_lengths(const TopologySkeleton& s, const Graph& g,
                                                 Length k, const DistanceConstraintSet& c);

/// Weighted tree from a labeled skeleton and its lengths.
LeafTree skeleton_tree(const TopologySkeleton& s, const Graph& g, const std::vector<Length>& lengths);

RecognitionResult recognize(const Graph& g, Length k, const DistanceConstraintSet& c = {},
                            const RecognizeOptions& options = {});

struct SmallGraphVerdict {
  std::size_t n = 0;
  /// Edge bits as in graph_from_mask.
  unsigned long long mask = 0;
  bool is_leaf_power = false;
};

/// recognize() on every labeled graph with at most n_max vertices (n_max <= 6).
std::vector<SmallGraphVerdict> recognize_all_small(std::size_t n_max, Length k);

}  // namespace leafpow
