// Shared helpers for the test binaries. The oracles here deliberately avoid
// the library's recognizer, chordality and tree code.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "leafpow/graph.hpp"
#include "leafpow/tree.hpp"

namespace testsupport {

using leafpow::Graph;
using leafpow::Length;
using leafpow::LeafTree;
using leafpow::NodeId;
using leafpow::TreeEdge;

/// Random leaf tree with `leaves` leaves named l0, l1, ... and lengths in
/// [1, max_len]. Leaves are inserted on random edges or at random internal
/// nodes, so every shape can occur.
inline LeafTree random_tree(std::mt19937& rng, std::size_t leaves, Length max_len) {
  std::vector<std::optional<std::string>> labels{"l0", "l1"};
  std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
  for (std::size_t i = 2; i < leaves; ++i) {
    std::vector<NodeId> internal;
    for (NodeId v = 0; v < labels.size(); ++v) {
      if (!labels[v]) internal.push_back(v);
    }
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() + internal.size() - 1);
    const std::size_t p = pick(rng);
    const NodeId leaf = labels.size() + (p < edges.size() ? 1 : 0);
    if (p < edges.size()) {
      const NodeId w = labels.size();
      labels.emplace_back();
      const NodeId b = edges[p].second;
      edges[p].second = w;
      edges.emplace_back(w, b);
      edges.emplace_back(w, leaf);
    } else {
      edges.emplace_back(internal[p - edges.size()], leaf);
    }
    labels.emplace_back("l" + std::to_string(i));
  }
  std::uniform_int_distribution<Length> len(1, max_len);
  std::vector<TreeEdge> weighted;
  for (const auto& [a, b] : edges) weighted.push_back({a, b, len(rng)});
  if (leaves == 1) return LeafTree::from_parts({std::string("l0")}, {});
  return LeafTree::from_parts(labels, weighted).canonical();
}

// --- brute-force leaf-power oracle -----------------------------------------

/// Prüfer decoding on nodes 0..m-1.
inline std::vector<std::pair<int, int>> prufer_edges(const std::vector<int>& seq, int m) {
  std::vector<int> degree(m, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < m; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < m; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return edges;
}

/// Adjacency masks (graph_from_mask bit order) of every n-vertex graph with a
/// k-leaf root. Enumerates every labeled tree whose first n nodes are the
/// leaves and whose other nodes (at most n-2) have degree >= 3, with every
/// edge length in [1, k+1].
inline std::set<unsigned long long> brute_force_leaf_powers(int n, int k) {
  std::set<unsigned long long> out;
  if (n <= 1) {
    out.insert(0);
    return out;
  }
  const int pairs = n * (n - 1) / 2;
  for (int s = 0; s <= n - 2; ++s) {
    const int m = n + s;
    std::vector<std::vector<std::pair<int, int>>> trees;
    if (m == 2) {
      trees.push_back({{0, 1}});
    } else {
      std::vector<int> seq(m - 2, 0);
      while (true) {
        std::vector<int> count(m, 0);
        for (int x : seq) ++count[x];
        bool ok = true;
        for (int v = 0; v < m && ok; ++v) ok = v < n ? count[v] == 0 : count[v] >= 2;
        if (ok) trees.push_back(prufer_edges(seq, m));
        int i = 0;
        while (i < m - 2 && ++seq[i] == m) seq[i++] = 0;
        if (i == m - 2) break;
      }
    }
    for (const auto& edges : trees) {
      // Edge set of every leaf-to-leaf path.
      std::vector<std::vector<int>> adj(m);
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].first].push_back(e);
        adj[edges[e].second].push_back(e);
      }
      std::vector<unsigned> path(pairs, 0);
      int bit = 0;
      for (int a = 0; a < n; ++a) {
        std::vector<unsigned> to(m, 0);
        std::vector<int> seen(m, 0);
        std::vector<int> stack{a};
        seen[a] = 1;
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int e : adj[x]) {
            int y = edges[e].first == x ? edges[e].second : edges[e].first;
            if (seen[y]) continue;
            seen[y] = 1;
            to[y] = to[x] | (1u << e);
            stack.push_back(y);
          }
        }
        for (int b = a + 1; b < n; ++b) path[bit++] = to[b];
      }
      const int E = static_cast<int>(edges.size());
      std::vector<int> len(E, 1);
      while (true) {
        unsigned long long mask = 0;
        for (int p = 0; p < pairs; ++p) {
          int d = 0;
          for (int e = 0; e < E; ++e) {
            if (path[p] >> e & 1u) d += len[e];
          }
          if (d <= k) mask |= 1ULL << p;
        }
        out.insert(mask);
        int i = 0;
        while (i < E && ++len[i] > k + 1) len[i++] = 1;
        if (i == E) break;
      }
    }
  }
  return out;
}

// --- characterization oracles ---------------------------------------------

inline bool is_cluster_graph(const Graph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (std::size_t w = 0; w < g.size(); ++w) {
        if (u != w && g.adjacent(u, v) && g.adjacent(v, w) && !g.adjacent(u, w)) return false;
      }
    }
  }
  return true;
}

/// True iff some |H| vertices of g induce a copy of h (all injections tried).
inline bool has_induced(const Graph& g, const Graph& h) {
  const std::size_t m = h.size();
  if (m > g.size()) return false;
  std::vector<char> chosen(g.size(), 0);
  std::fill(chosen.begin(), chosen.begin() + m, 1);
  std::sort(chosen.begin(), chosen.end(), std::greater<>());
  do {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (chosen[i]) subset.push_back(i);
    }
    do {
      bool same = true;
      for (std::size_t a = 0; a < m && same; ++a) {
        for (std::size_t b = a + 1; b < m && same; ++b) {
          same = h.adjacent(a, b) == g.adjacent(subset[a], subset[b]);
        }
      }
      if (same) return true;
    } while (std::next_permutation(subset.begin(), subset.end()));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return false;
}

/// Chordal on at most 5 vertices: no induced C4 or C5.
inline bool is_chordal_small(const Graph& g) {
  return !has_induced(g, leafpow::named::cycle(4)) && !has_induced(g, leafpow::named::cycle(5));
}

inline bool is_3_leaf_power_small(const Graph& g) {
  return is_chordal_small(g) && !has_induced(g, leafpow::named::bull()) &&
         !has_induced(g, leafpow::named::dart()) && !has_induced(g, leafpow::named::gem());
}

inline std::vector<std::pair<std::string, std::string>> label_edges(
    std::initializer_list<std::pair<const char*, const char*>> edges) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : edges) out.emplace_back(a, b);
  return out;
}

}  // namespace testsupport
