#include "doctest.h"
#include "leafpow/chordal.hpp"
#include "leafpow/recognizer.hpp"
#include "support.hpp"

using namespace leafpow;

// Ground truth by enumerating every small weighted tree and reading off its
// k-power; the recognizer must agree on every labeled graph.
TEST_CASE("recognizer agrees with brute force on graphs with at most 5 vertices") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 1; n <= 5; ++n) {
      const std::set<unsigned long long> truth = testsupport::brute_force_leaf_powers(n, k);
      const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
      for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) {
        const Graph g = graph_from_mask(static_cast<std::size_t>(n), mask);
        CAPTURE(k);
        CAPTURE(mask);
        REQUIRE(recognize(g, k).has_root() == (truth.count(mask) > 0));
      }
    }
  }
}

TEST_CASE("2-leaf powers are exactly the cluster graphs") {
  for (const SmallGraphVerdict& v : recognize_all_small(5, 2)) {
    const Graph g = graph_from_mask(v.n, v.mask);
    REQUIRE(v.is_leaf_power == testsupport::is_cluster_graph(g));
  }
}

TEST_CASE("3-leaf powers are the chordal bull-, dart- and gem-free graphs") {
  for (const SmallGraphVerdict& v : recognize_all_small(5, 3)) {
    const Graph g = graph_from_mask(v.n, v.mask);
    REQUIRE(v.is_leaf_power == testsupport::is_3_leaf_power_small(g));
  }
}

TEST_CASE("every leaf power is strongly chordal") {
  for (Length k = 2; k <= 6; k += 2) {
    for (const SmallGraphVerdict& v : recognize_all_small(6, k)) {
      if (v.is_leaf_power) REQUIRE(is_strongly_chordal(graph_from_mask(v.n, v.mask)).holds);
    }
  }
}

TEST_CASE("small chordal checks agree with the library") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned long long mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      REQUIRE(is_chordal(g).holds == testsupport::is_chordal_small(g));
    }
  }
}
