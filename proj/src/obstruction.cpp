#include "leafpow/obstruction.hpp"

#include <chrono>
#include <unordered_map>

#include "leafpow/formats.hpp"

namespace leafpow {

namespace {

using Clock = std::chrono::steady_clock;

// Recognition calls memoized by the labeled edge set of the probed graph.
class MemoRecognizer {
 public:
  MemoRecognizer(Length k, const RecognizeOptions& options)
      : k_(k), options_(options), start_(Clock::now()) {}

  const RecognitionResult& operator()(const Graph& g) {
    std::string key = emit_graph(g);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    RecognizeOptions opts = options_;
    if (options_.time_budget) {
      const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
      opts.time_budget = std::max(std::chrono::milliseconds(0), *options_.time_budget - spent);
    }
    return memo_.emplace(std::move(key), recognize(g, k_, {}, opts)).first->second;
  }

 private:
  Length k_;
  RecognizeOptions options_;
  Clock::time_point start_;
  std::unordered_map<std::string, RecognitionResult> memo_;
};

[[noreturn]] void out_of_budget(const std::vector<std::string>& removed, const Graph& current) {
  std::string msg = "descent stopped after removing " + std::to_string(removed.size()) +
                    " vertices; current subgraph:";
  for (const auto& l : current.labels()) msg += " " + l;
  throw Error(ErrorCode::kBudgetExceeded, msg);
}

}  // namespace

MinimalityCertificate extract_minimal(const Graph& g, Length k, const RecognizeOptions& options) {
  MemoRecognizer rec(k, options);
  const RecognitionResult& first = rec(g);
  if (first.verdict == Verdict::kBudgetExceeded) out_of_budget({}, g);
  if (first.has_root()) throw Error(ErrorCode::kInputIsLeafPower, "input has a k-leaf root");

  MinimalityCertificate cert;
  cert.parent = g;
  cert.k = k;
  Graph current = g;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Vertex v = 0; v < current.size(); ++v) {
      Graph probe = delete_vertex(current, v);
      const RecognitionResult& r = rec(probe);
      if (r.verdict == Verdict::kBudgetExceeded) out_of_budget(cert.removed, current);
      if (r.verdict == Verdict::kNoRoot) {
        cert.removed.push_back(current.label(v));
        current = std::move(probe);
        shrunk = true;
        break;
      }
    }
  }
  for (Vertex v = 0; v < current.size(); ++v) {
    cert.checks.push_back({current.label(v), rec(delete_vertex(current, v))});
  }
  cert.self_check = rec(current);
  cert.subgraph = std::move(current);
  return cert;
}

CertificateReport verify_certificate(const MinimalityCertificate& cert) {
  CertificateReport report;
  auto fail = [&](std::string what) {
    report.ok = false;
    report.problems.push_back(std::move(what));
  };
  const Graph& sub = cert.subgraph;
  const Graph& parent = cert.parent;

  VertexSet members;
  for (const auto& l : sub.labels()) {
    auto v = parent.find(l);
    if (!v) {
      fail("vertex " + l + " is not in the parent graph");
      return report;
    }
    members.push_back(*v);
  }
  for (Vertex a = 0; a < sub.size(); ++a) {
    for (Vertex b = a + 1; b < sub.size(); ++b) {
      if (sub.adjacent(a, b) != parent.adjacent(members[a], members[b])) {
        fail("subgraph is not induced at " + sub.label(a) + "," + sub.label(b));
      }
    }
  }
  if (!is_connected(sub)) fail("subgraph is disconnected");

  if (recognize(sub, cert.k).verdict != Verdict::kNoRoot) fail("subgraph has a root");
  if (cert.self_check.verdict != Verdict::kNoRoot) fail("recorded self-check is not NoRoot");
  if (cert.checks.size() != sub.size()) fail("one deletion check per vertex expected");
  for (const DeletionCheck& c : cert.checks) {
    auto v = sub.find(c.removed);
    if (!v || !c.result.has_root() ||
        !verify_leaf_root(*c.result.witness, delete_vertex(sub, *v), cert.k).ok) {
      fail("recorded check for " + c.removed + " is not a verified root");
    }
  }
  for (Vertex v = 0; v < sub.size(); ++v) {
    const Graph minus = delete_vertex(sub, v);
    const RecognitionResult r = recognize(minus, cert.k);
    if (!r.has_root() || !verify_leaf_root(*r.witness, minus, cert.k).ok) {
      fail("deleting " + sub.label(v) + " leaves no root");
    }
  }
  return report;
}

}  // namespace leafpow
