#include <filesystem>
#include <random>

#include "doctest.h"
#include "leafpow/formats.hpp"
#include "leafpow/gadgets.hpp"
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

}  // namespace

TEST_CASE("edge-list text is exact") {
  CHECK(emit_graph(named::path(3)) == "n 3\na\nb\nc\na b\nb c\n");
  CHECK(emit_graph(Graph{}) == "n 0\n");
  const Graph d = bot_gadget().graph;
  CHECK(parse_graph(emit_graph(d)) == d);
  const Graph crlf = parse_graph("n 2\r\nx\r\ny\r\nx y\r\n\r\n");
  CHECK(crlf.labels() == std::vector<std::string>{"x", "y"});
  CHECK(crlf.adjacent(0, 1));
  const Graph xy = parse_graph("n 2\nx\ny\nx   y\n");
  CHECK(xy.edge_count() == 1);
}

TEST_CASE("edge-list parse errors") {
  CHECK(code_of([] { parse_graph(""); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_graph("m 2\na\nb\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_graph("n 3\na\nb\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_graph("n 2\na\nb\na b c\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_graph("n 2\na\nb\na z\n"); }) == ErrorCode::kUnknownLabel);
  CHECK(code_of([] { parse_graph("n 2\na\na\n"); }) == ErrorCode::kDuplicateLabel);
}

TEST_CASE("DOT graphs round-trip") {
  const Graph g = assemble_Hn(5, 1).graph;
  const std::string dot = emit_graph_dot(g);
  CHECK(dot.rfind("graph G {\n", 0) == 0);
  CHECK(parse_graph_dot(dot) == g);
  CHECK(emit_graph_dot(parse_graph_dot(dot)) == dot);
  CHECK(code_of([] { parse_graph_dot("digraph {\n}\n"); }) == ErrorCode::kParse);
}

TEST_CASE("tree text is exact") {
  CHECK(emit_tree(bot_root(5)) == "(b:2,v1:3,v2:2,v3:3)");
  CHECK(emit_tree(bot_root(6)) == "(b:2,v1:3,(v2:2,v3:3):1)");
  CHECK(emit_tree(LeafTree{}) == "()");
  TreeBuilder one;
  one.add_leaf("solo");
  CHECK(emit_tree(one.build()) == "solo");
  const LeafTree edge = new_leaf_tree(2, {{0, "a"}, {1, "b"}}, {{0, 1, 4}});
  CHECK(emit_tree(edge) == "(a:1,b:3)");
  CHECK(distance_matrix(parse_tree("(a:1,b:3)")) == distance_matrix(edge));
  const LeafTree unit = new_leaf_tree(2, {{0, "a"}, {1, "b"}}, {{0, 1, 1}});
  CHECK(code_of([&] { emit_tree(unit); }) == ErrorCode::kParse);
}

TEST_CASE("tree parser") {
  const LeafTree t = parse_tree("  ( a : 1 ,\n (b:2, c:3) : 4 , d:1 ) ; ");
  CHECK(t.leaf_count() == 4);
  CHECK(leaf_distance(t, "b", "c") == 5);
  CHECK(leaf_distance(t, "a", "b") == 7);
  CHECK(parse_tree("solo").leaf_count() == 1);
  CHECK(parse_tree("()").node_count() == 0);
  CHECK(code_of([] { parse_tree("(a:1,b:2"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_tree("(a:1,b:x)"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_tree("(a:1,b:2) junk"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_tree("(a:0,b:2,c:1)"); }) == ErrorCode::kNonPositiveLength);
  CHECK(code_of([] { parse_tree("(a:1,a:2,c:1)"); }) == ErrorCode::kDuplicateLeafLabel);
}

TEST_CASE("tree text round-trips on constructed and random trees") {
  std::vector<LeafTree> trees;
  for (int k = 5; k <= 8; ++k) {
    trees.push_back(top_root(k));
    trees.push_back(bot_root(k));
    trees.push_back(interior_root_T(k));
    trees.push_back(interior_root_R(k));
    trees.push_back(linear_top_root(k));
    trees.push_back(merged_root_minus_bot(k, 2));
    trees.push_back(merged_root_minus_top(k, 2));
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> leaves(3, 12);
  for (int i = 0; i < 300; ++i) trees.push_back(testsupport::random_tree(rng, leaves(rng), 10));
  for (const LeafTree& t : trees) {
    const std::string text = emit_tree(t);
    const LeafTree back = parse_tree(text);
    REQUIRE(distance_matrix(back) == distance_matrix(t));
    REQUIRE(emit_tree(back) == text);
  }
}

TEST_CASE("tree DOT export names every node") {
  const std::string dot = emit_tree_dot(bot_root(6));
  CHECK(dot.rfind("graph T {\n", 0) == 0);
  CHECK(dot.find("[label=\"v3\"]") != std::string::npos);
  CHECK(dot.find("[shape=point]") != std::string::npos);
}

TEST_CASE("labels that cannot be written are refused") {
  const std::vector<Edge> none;
  const Graph g({"has space"}, none);
  CHECK(code_of([&] { emit_graph(g); }) == ErrorCode::kParse);
}

TEST_CASE("files and digests") {
  const auto path = std::filesystem::temp_directory_path() / "leafpow_formats_test.g";
  write_file(path.string(), emit_graph(named::diamond()));
  CHECK(parse_graph(read_file(path.string())) == named::diamond());
  std::filesystem::remove(path);
  CHECK(code_of([] { read_file("/nonexistent/dir/file"); }) == ErrorCode::kIo);
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
  CHECK(digest("a").size() == 16);
}
