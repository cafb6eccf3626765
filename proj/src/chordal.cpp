#include "leafpow/chordal.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace leafpow {

namespace {

// Small dynamic bitset; graphs here stay well under a few hundred vertices.
class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<Bits> closed_neighborhood_bits(const Graph& g) {
  std::vector<Bits> out(g.size(), Bits(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    out[v].set(v);
    for (Vertex w : g.neighbors(v)) out[v].set(w);
  }
  return out;
}

// v is simple in the subgraph induced by `alive`.
bool simple_in(const Graph& g, const std::vector<Bits>& closed, const Bits& alive,
               Vertex v) {
  std::vector<Bits> nbhd;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (alive.test(u) && closed[v].test(u)) nbhd.push_back(closed[u] & alive);
  }
  for (std::size_t i = 0; i < nbhd.size(); ++i) {
    for (std::size_t j = i + 1; j < nbhd.size(); ++j) {
      if (!nbhd[i].subset_of(nbhd[j]) && !nbhd[j].subset_of(nbhd[i])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.size()) return false;
  std::vector<std::size_t> pos(g.size(), g.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.size() || pos[order[i]] != g.size()) return false;
    pos[order[i]] = i;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(order[i])) {
      if (pos[w] > i) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

ChordalityResult is_chordal(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    numbered[best] = 1;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  std::reverse(visit.begin(), visit.end());
  ChordalityResult result;
  result.holds = is_perfect_elimination_ordering(g, visit);
  if (result.holds) result.witness = EliminationOrdering{visit, OrderingKind::kPerfect};
  return result;
}

bool is_simple_vertex(const Graph& g, Vertex v) {
  g.label(v);
  Bits alive(g.size());
  for (Vertex u = 0; u < g.size(); ++u) alive.set(u);
  return simple_in(g, closed_neighborhood_bits(g), alive, v);
}

ChordalityResult is_strongly_chordal(const Graph& g) {
  std::vector<Vertex> priority(g.size());
  std::iota(priority.begin(), priority.end(), Vertex{0});
  return is_strongly_chordal(g, priority);
}

ChordalityResult is_strongly_chordal(const Graph& g, std::span<const Vertex> priority) {
  if (priority.size() != g.size()) {
    throw Error(ErrorCode::kInvalidArgument, "priority must list every vertex");
  }
  const auto closed = closed_neighborhood_bits(g);
  Bits alive(g.size());
  for (Vertex u = 0; u < g.size(); ++u) alive.set(u);
  std::vector<Vertex> order;
  order.reserve(g.size());
  std::vector<char> removed(g.size(), 0);
  while (order.size() < g.size()) {
    bool progressed = false;
    for (Vertex v : priority) {
      if (removed[v] || !simple_in(g, closed, alive, v)) continue;
      removed[v] = 1;
      alive.reset(v);
      order.push_back(v);
      progressed = true;
      break;
    }
    if (!progressed) return {};
  }
  return {true, EliminationOrdering{std::move(order), OrderingKind::kSimple}};
}

bool is_simple_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.size()) return false;
  const auto closed = closed_neighborhood_bits(g);
  Bits alive(g.size());
  for (Vertex u = 0; u < g.size(); ++u) alive.set(u);
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : order) {
    if (v >= g.size() || seen[v]) return false;
    seen[v] = 1;
    if (!simple_in(g, closed, alive, v)) return false;
    alive.reset(v);
  }
  return true;
}

}  // namespace leafpow
