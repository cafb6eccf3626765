#include "doctest.h"
#include "leafpow/gadgets.hpp"
#include "leafpow/recognizer.hpp"
#include "support.hpp"

using namespace leafpow;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

TopologySkeleton star_skeleton(std::size_t leaves) {
  TopologySkeleton s;
  s.leaf_count = leaves;
  s.node_count = leaves + 1;
  for (NodeId i = 0; i < leaves; ++i) {
    s.edges.emplace_back(leaves, i);
    s.slots.push_back(i);
  }
  return s;
}

TopologySkeleton single_edge() {
  TopologySkeleton s;
  s.leaf_count = 2;
  s.node_count = 2;
  s.edges = {{0, 1}};
  s.slots = {0, 1};
  return s;
}

}  // namespace

TEST_CASE("shape enumeration") {
  CHECK(enumerate_shapes(2, false).size() == 1);
  CHECK(enumerate_shapes(3, false).size() == 1);
  CHECK(enumerate_shapes(4, false).size() == 2);
  CHECK(enumerate_shapes(5, false).size() == 3);
  CHECK(enumerate_shapes(6, false).size() == 7);
  const auto six = enumerate_shapes(6, false);
  for (std::size_t i = 1; i < six.size(); ++i) {
    const bool ordered = six[i - 1].internal_count() < six[i].internal_count() ||
                         (six[i - 1].internal_count() == six[i].internal_count() &&
                          six[i - 1].shape_code() < six[i].shape_code());
    CHECK(ordered);
  }
  // Six leaves: every shape but the one with a degree-3 centre and three cherries.
  CHECK(enumerate_shapes(6, true).size() == 6);
  CHECK(code_of([] { enumerate_shapes(1, false); }) == ErrorCode::kTooFewLeaves);
}

TEST_CASE("labeled topology counts") {
  // Leaf-labeled trees without degree-2 internal nodes.
  const std::vector<std::uint64_t> expected{1, 1, 4, 26, 236, 2752};
  for (std::size_t n = 2; n <= 7; ++n) {
    const std::uint64_t count = enumerate_topologies(n, false, [&](const TopologySkeleton& s) {
      CHECK(s.leaf_count == n);
      return true;
    });
    CHECK(count == expected[n - 2]);
  }
  std::uint64_t calls = 0;
  enumerate_topologies(5, false, [&](const TopologySkeleton&) { return ++calls < 3; });
  CHECK(calls == 3);
}

TEST_CASE("linear topologies are caterpillars") {
  std::uint64_t all = 0;
  std::uint64_t caterpillars = 0;
  enumerate_topologies(6, false, [&](const TopologySkeleton& s) {
    ++all;
    if (s.is_caterpillar()) ++caterpillars;
    return true;
  });
  const std::uint64_t linear = enumerate_topologies(6, true, [](const TopologySkeleton& s) {
    CHECK(s.is_caterpillar());
    return true;
  });
  CHECK(linear == caterpillars);
  CHECK(linear < all);
}

TEST_CASE("solve_lengths") {
  const Graph k3 = named::complete(3);
  const auto star = solve_lengths(star_skeleton(3), k3, 2, {});
  REQUIRE(star);
  CHECK(*star == std::vector<Length>{1, 1, 1});

  const Graph k2 = named::complete(2);
  const auto edge = solve_lengths(single_edge(), k2, 2, {});
  REQUIRE(edge);
  CHECK(*edge == std::vector<Length>{2});

  DistanceConstraintSet c;
  c.pin("v1", "v3", 3);
  const Graph d = named::diamond();
  for (const TopologySkeleton& shape : enumerate_shapes(4, false)) {
    TopologySkeleton s = shape;
    s.slots = {0, 1, 2, 3};
    CHECK_FALSE(solve_lengths(s, d, 5, c).has_value());
  }
  CHECK(code_of([&] { solve_lengths(star_skeleton(3), d, 5, {}); }) == ErrorCode::kSlotMismatch);
}

TEST_CASE("recognize small examples") {
  CHECK(recognize(named::complete(4), 2).has_root());
  CHECK_FALSE(recognize(named::path(3), 2).has_root());
  CHECK(recognize(named::path(3), 3).has_root());
  CHECK_FALSE(recognize(named::cycle(4), 5).has_root());
  CHECK_FALSE(recognize(named::sun3(), 6).has_root());
  CHECK(recognize(named::diamond(), 3).has_root());
  CHECK(recognize(Graph{}, 3).has_root());
  CHECK(recognize(new_graph(1, {"x"}, {}), 3).has_root());
  CHECK(code_of([] { recognize(named::path(3), 1); }) == ErrorCode::kKTooSmall);

  const RecognitionResult r = recognize(top_gadget(5).graph, 5);
  REQUIRE(r.has_root());
  CHECK(verify_leaf_root(*r.witness, top_gadget(5).graph, 5).ok);
  CHECK(r.stats.topologies >= 1);
  CHECK(r.stats.systems >= r.stats.topologies);
  CHECK(verdict_name(r.verdict) == "Root");
}

TEST_CASE("recognize_all_small") {
  const auto two = recognize_all_small(2, 4);
  CHECK(two.size() == 3);
  for (const auto& v : two) CHECK(v.is_leaf_power);
  const auto three = recognize_all_small(3, 2);
  std::size_t yes = 0;
  for (const auto& v : three) {
    if (v.n == 3) yes += v.is_leaf_power;
  }
  CHECK(yes == 5);  // empty, three single edges, triangle
  CHECK(code_of([] { recognize_all_small(7, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("witness twin rule") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (unsigned long long mask = 0; mask < (1ULL << (n * (n - 1) / 2)); mask += 5) {
      const Graph g = graph_from_mask(n, mask);
      const RecognitionResult r = recognize(g, 4);
      if (!r.has_root()) continue;
      REQUIRE(verify_leaf_root(*r.witness, g, 4).ok);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!g.adjacent(u, v)) continue;
          const Length d = leaf_distance(*r.witness, g.label(u), g.label(v));
          REQUIRE(d >= (are_true_twins(g, u, v) ? 2 : 3));
        }
      }
    }
  }
}

TEST_CASE("linear recognition produces caterpillars") {
  const RecognitionResult r = recognize(top_gadget(5).graph, 5, {}, {.linear_only = true});
  REQUIRE(r.has_root());
  CHECK(is_caterpillar_subdivision(*r.witness).ok);
  const Graph g = linear_top_gadget(5).graph;
  const RecognitionResult lin = recognize(g, 5, {}, {.linear_only = true});
  REQUIRE(lin.has_root());
  CHECK(is_caterpillar_subdivision(*lin.witness).ok);
}

TEST_CASE("constraints only remove roots") {
  const Graph d = named::diamond();
  DistanceConstraintSet far;
  far.min_distance("b", 4);
  const RecognitionResult r = recognize(d, 5, far);
  REQUIRE(r.has_root());
  CHECK(min_leaf_distance(*r.witness, "b") >= 4);
  DistanceConstraintSet farther = far;
  farther.min_distance("b", 5);
  CHECK_FALSE(recognize(d, 5, farther).has_root());

  const Graph interior = interior_gadget(5).graph;
  DistanceConstraintSet t_far;
  t_far.min_distance("t", 5);
  const RecognitionResult with_t = recognize(interior, 5, t_far);
  REQUIRE(with_t.has_root());
  CHECK(min_leaf_distance(*with_t.witness, "b") == 3);
  DistanceConstraintSet both = t_far;
  both.min_distance("b", 4);
  CHECK_FALSE(recognize(interior, 5, both).has_root());
}

TEST_CASE("constraint set bookkeeping") {
  DistanceConstraintSet c;
  c.bound("b", "a", 3, 9);
  c.bound("a", "b", 4, 12);
  REQUIRE(c.bounds().size() == 1);
  CHECK(c.bounds().begin()->first.first == "a");
  CHECK(c.bounds().begin()->second.lo == 4);
  CHECK(c.bounds().begin()->second.hi == 9);
  c.pin("a", "b", 6);
  CHECK(code_of([&] { c.pin("b", "a", 7); }) == ErrorCode::kInvalidArgument);
  const Graph ab = graph_from_label_edges({"a", "b"}, {});
  c.validate(ab);
  DistanceConstraintSet bad;
  bad.bound("a", "zz", 3);
  CHECK(code_of([&] { bad.validate(ab); }) == ErrorCode::kUnknownLabel);
  DistanceConstraintSet low;
  low.bound("a", "b", 1);
  CHECK(code_of([&] { low.validate(ab); }) == ErrorCode::kInvalidArgument);

  const LeafTree t = new_leaf_tree(2, {{0, "a"}, {1, "b"}}, {{0, 1, 5}});
  CHECK(c.violations(t).size() == 1);
  DistanceConstraintSet ok;
  ok.pin("a", "b", 5);
  CHECK(ok.violations(t).empty());
}

TEST_CASE("disconnected inputs") {
  const Graph two_p3 = graph_from_label_edges(
      {"a", "b", "c", "d", "e", "f"},
      testsupport::label_edges({{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}}));
  const RecognitionResult r = recognize(two_p3, 3);
  REQUIRE(r.has_root());
  CHECK(verify_leaf_root(*r.witness, two_p3, 3).ok);
  CHECK_FALSE(recognize(two_p3, 2).has_root());

  const RecognitionResult lin = recognize(two_p3, 3, {}, {.linear_only = true});
  REQUIRE(lin.has_root());
  CHECK(is_caterpillar_subdivision(*lin.witness).ok);

  DistanceConstraintSet cross;
  cross.pin("a", "d", 9);
  const RecognitionResult pinned = recognize(two_p3, 3, cross);
  REQUIRE(pinned.has_root());
  CHECK(leaf_distance(*pinned.witness, "a", "d") == 9);

  const Graph isolated = graph_from_label_edges({"p", "q", "r"}, {});
  CHECK(recognize(isolated, 2).has_root());
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  RecognizeOptions tiny;
  tiny.node_budget = 1;
  const RecognitionResult r = recognize(assemble_Hn(5, 0).graph, 5, {}, tiny);
  CHECK(r.verdict == Verdict::kBudgetExceeded);
  CHECK_FALSE(r.witness.has_value());
  CHECK(verdict_name(r.verdict) == "BudgetExceeded");
}

TEST_CASE("every Root verdict on graphs with at most 5 vertices carries a verified witness") {
  for (Length k = 2; k <= 5; ++k) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (unsigned long long mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
        const Graph g = graph_from_mask(n, mask);
        const RecognitionResult r = recognize(g, k);
        if (r.has_root()) REQUIRE(verify_leaf_root(*r.witness, g, k).ok);
      }
    }
  }
}
