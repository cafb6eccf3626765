#include "leafpow/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace leafpow {

namespace {

bool is_label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' &&
         c != ',' && c != ':' && c != ';' && c != '"';
}

void check_label(const std::string& label) {
  if (label.empty() || !std::all_of(label.begin(), label.end(), is_label_char)) {
    throw Error(ErrorCode::kParse, "label '" + label + "' is not writable");
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

std::string emit_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.size()) + "\n";
  for (const auto& l : g.labels()) {
    check_label(l);
    out += l + "\n";
  }
  for (const auto& [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty graph file");
  const auto header = split_words(lines[0]);
  std::size_t n = 0;
  if (header.size() != 2 || header[0] != "n" ||
      std::from_chars(header[1].data(), header[1].data() + header[1].size(), n).ec !=
          std::errc{}) {
    throw Error(ErrorCode::kParse, "expected 'n <count>' header");
  }
  if (lines.size() < n + 1) throw Error(ErrorCode::kParse, "missing vertex labels");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto words = split_words(lines[i]);
    if (words.size() != 1) throw Error(ErrorCode::kParse, "bad label line " + std::to_string(i + 1));
    labels.push_back(words[0]);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    const auto words = split_words(lines[i]);
    if (words.empty()) continue;
    if (words.size() != 2) throw Error(ErrorCode::kParse, "bad edge line " + std::to_string(i + 1));
    edges.emplace_back(words[0], words[1]);
  }
  return graph_from_label_edges(std::move(labels), edges);
}

std::string emit_graph_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& l : g.labels()) {
    check_label(l);
    out += "  \"" + l + "\";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  \"" + g.label(u) + "\" -- \"" + g.label(v) + "\";\n";
  }
  out += "}\n";
  return out;
}

Graph parse_graph_dot(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front().rfind("graph", 0) != 0) {
    throw Error(ErrorCode::kParse, "expected 'graph G {'");
  }
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  auto quoted = [](std::string_view line, std::size_t& pos) {
    std::size_t open = line.find('"', pos);
    std::size_t close = open == std::string_view::npos ? open : line.find('"', open + 1);
    if (close == std::string_view::npos) throw Error(ErrorCode::kParse, "unterminated quote");
    pos = close + 1;
    return std::string(line.substr(open + 1, close - open - 1));
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.find('}') != std::string_view::npos && line.find('"') == std::string_view::npos) {
      break;
    }
    if (line.find('"') == std::string_view::npos) continue;
    std::size_t pos = 0;
    std::string a = quoted(line, pos);
    if (line.find("--", pos) != std::string_view::npos) {
      edges.emplace_back(a, quoted(line, pos));
    } else {
      labels.push_back(a);
    }
  }
  return graph_from_label_edges(std::move(labels), edges);
}

namespace {

void emit_subtree(const LeafTree& t, NodeId node, NodeId parent,
                  const std::vector<NodeId>& min_leaf, std::string& out) {
  if (t.is_leaf(node)) {
    out += t.label(node);
    return;
  }
  std::vector<Arc> children;
  for (const Arc& a : t.arcs(node)) {
    if (a.to != parent) children.push_back(a);
  }
  std::sort(children.begin(), children.end(), [&](const Arc& x, const Arc& y) {
    return min_leaf[x.to] < min_leaf[y.to];
  });
  out += '(';
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += ',';
    emit_subtree(t, children[i].to, node, min_leaf, out);
    out += ':' + std::to_string(children[i].length);
  }
  out += ')';
}

// Smallest leaf id below each node when the tree hangs from `root`. Canonical
// leaf ids follow label order.
NodeId fill_min_leaf(const LeafTree& t, NodeId node, NodeId parent,
                     std::vector<NodeId>& min_leaf) {
  NodeId best = t.is_leaf(node) ? node : t.node_count();
  for (const Arc& a : t.arcs(node)) {
    if (a.to != parent) best = std::min(best, fill_min_leaf(t, a.to, node, min_leaf));
  }
  return min_leaf[node] = best;
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LeafTree parse() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        finish();
        return LeafTree{};
      }
      pos_ = save;
    }
    node();
    finish();
    return LeafTree::from_parts(labels_, edges_).canonical();
  }

 private:
  NodeId node() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      labels_.emplace_back();
      const NodeId self = labels_.size() - 1;
      while (true) {
        const NodeId child = node();
        expect(':');
        edges_.push_back({self, child, length()});
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        return self;
      }
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a label or '('");
    labels_.emplace_back(std::string(text_.substr(start, pos_ - start)));
    return labels_.size() - 1;
  }

  Length length() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Length value = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc{} || res.ptr != text_.data() + pos_) fail("expected an integer length");
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ';') ++pos_;
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::optional<std::string>> labels_;
  std::vector<TreeEdge> edges_;
};

}  // namespace

std::string emit_tree(const LeafTree& tree) {
  const LeafTree t = tree.canonical();
  if (t.node_count() == 0) return "()";
  for (const auto& l : t.leaf_labels()) check_label(l);
  if (t.node_count() == 1) return t.label(0);
  if (t.internal_count() == 0) {
    const Length len = t.arcs(0).front().length;
    if (len < 2) throw Error(ErrorCode::kParse, "two leaves at distance 1 have no text form");
    return "(" + t.label(0) + ":1," + t.label(1) + ":" + std::to_string(len - 1) + ")";
  }
  const NodeId root = t.arcs(0).front().to;
  std::vector<NodeId> min_leaf(t.node_count(), t.node_count());
  fill_min_leaf(t, root, root, min_leaf);
  std::string out;
  emit_subtree(t, root, root, min_leaf, out);
  return out;
}

LeafTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string emit_tree_dot(const LeafTree& tree) {
  const LeafTree t = tree.canonical();
  std::string out = "graph T {\n";
  for (NodeId v = 0; v < t.node_count(); ++v) {
    out += "  n" + std::to_string(v);
    out += t.is_leaf(v) ? " [label=\"" + t.label(v) + "\"];\n" : " [shape=point];\n";
  }
  for (const TreeEdge& e : t.edges()) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"" +
           std::to_string(e.length) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << contents;
}

std::string digest(std::string_view contents) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : contents) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kHex[h & 0xf];
  return out;
}

}  // namespace leafpow
