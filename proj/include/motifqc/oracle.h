// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_ORACLE_H_
#define MOTIFQC_ORACLE_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "motifqc/graph.h"

namespace motifqc {

struct QueryCounts {
  int64_t matrix = 0;
  int64_t list = 0;
  int64_t degree = 0;

  int64_t Total() const { return matrix + list + degree; }
};

struct QueryBudget {
  static constexpr int64_t kUnlimited = std::numeric_limits<int64_t>::max();
  int64_t matrix = kUnlimited;
  int64_t list = kUnlimited;
  int64_t degree = kUnlimited;
  int64_t total = kUnlimited;
};

enum class QueryKind { kMatrix, kList, kDegree };

struct QueryRecord {
  QueryKind kind;
  int64_t a;
  int64_t b;
};

// Induced subgraph on the distinct vertices of a multiset.
struct SampledSubgraph {
  Graph graph;
  std::vector<Vertex> ids;             // original id of subgraph vertex i
  std::vector<int64_t> multiplicity;   // occurrences in the multiset
};

// Metered access to a graph. Testers receive only this object.
class QueryOracle {
 public:
  explicit QueryOracle(const AdjacencySource& target, QueryBudget budget = {},
                       bool keep_log = false)
      : target_(target), budget_(budget), keep_log_(keep_log) {}

  int n() const { return target_.n(); }

  absl::StatusOr<bool> Pair(Vertex u, Vertex v);
  // 1-indexed; nullopt when i exceeds the degree.
  absl::StatusOr<std::optional<Vertex>> Neighbor(Vertex u, int64_t i);
  absl::StatusOr<int> Degree(Vertex u);
  // Charges C(d, 2) matrix queries up front; d = distinct vertex count.
  absl::StatusOr<SampledSubgraph> InducedOn(absl::Span<const Vertex> multiset);

  // Unmetered full read for reference subroutines that are not sublinear.
  // Tallied separately and never counted as queries.
  int ReferenceDegeneracy();

  const QueryCounts& counts() const { return counts_; }
  int64_t reference_reads() const { return reference_reads_; }
  const QueryBudget& budget() const { return budget_; }
  const std::vector<QueryRecord>& log() const { return log_; }

 private:
  absl::Status Charge(QueryKind kind, int64_t amount);
  absl::Status CheckVertex(Vertex u) const;

  const AdjacencySource& target_;
  QueryBudget budget_;
  bool keep_log_;
  QueryCounts counts_;
  int64_t reference_reads_ = 0;
  std::vector<QueryRecord> log_;
};

// True for the status a budget overrun produces.
bool IsBudgetError(const absl::Status& status);

}  // namespace motifqc

#endif  // MOTIFQC_ORACLE_H_
