#pragma once

#include <string>
#include <vector>

#include "leafpow/graph.hpp"
#include "leafpow/recognizer.hpp"

namespace leafpow {

struct DeletionCheck {
  std::string removed;
  RecognitionResult result;  // must be Root
};

/// A non-k-leaf-power induced subgraph all of whose one-vertex deletions are
/// k-leaf powers.
struct MinimalityCertificate {
  Graph subgraph;
  Graph parent;
  Length k = 0;
  /// Vertices deleted by the descent, in order.
  std::vector<std::string> removed;
  /// One entry per subgraph vertex, in index order.
  std::vector<DeletionCheck> checks;
  RecognitionResult self_check;  // must be NoRoot
};

/// Greedy descent: probe deletions in ascending index order, keep the first
/// that still leaves a non-k-leaf-power, restart from index 0. Throws
/// InputIsLeafPower when G itself has a root and BudgetExceeded when a
/// recognition call runs out of budget (the message names the partial
/// descent). The time budget covers the whole descent; the node budget
/// applies per recognition call.
MinimalityCertificate extract_minimal(const Graph& g, Length k,
                                      const RecognizeOptions& options = {});

struct CertificateReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks a certificate from scratch: induced in its parent, connected,
/// self-check NoRoot, every deletion Root with a verified witness.
CertificateReport verify_certificate(const MinimalityCertificate& cert);

}  // namespace leafpow
