// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/oracle.h"

#include "absl/status/status.h"

namespace motifqc {
namespace {

std::string CountsText(const QueryCounts& c) {
  return "matrix=" + std::to_string(c.matrix) + " list=" + std::to_string(c.list) +
         " degree=" + std::to_string(c.degree);
}

}  // namespace

bool IsBudgetError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kResourceExhausted;
}

absl::Status QueryOracle::Charge(QueryKind kind, int64_t amount) {
  int64_t* counter = nullptr;
  int64_t cap = 0;
  switch (kind) {
    case QueryKind::kMatrix:
      counter = &counts_.matrix;
      cap = budget_.matrix;
      break;
    case QueryKind::kList:
      counter = &counts_.list;
      cap = budget_.list;
      break;
    case QueryKind::kDegree:
      counter = &counts_.degree;
      cap = budget_.degree;
      break;
  }
  if (amount > cap - *counter || amount > budget_.total - counts_.Total()) {
    return absl::ResourceExhaustedError("query budget exhausted (" +
                                        CountsText(counts_) + ")");
  }
  *counter += amount;
  return absl::OkStatus();
}

absl::Status QueryOracle::CheckVertex(Vertex u) const {
  if (u < 0 || u >= target_.n()) {
    return absl::InvalidArgumentError("vertex out of range: " + std::to_string(u));
  }
  return absl::OkStatus();
}

absl::StatusOr<bool> QueryOracle::Pair(Vertex u, Vertex v) {
  if (absl::Status st = CheckVertex(u); !st.ok()) return st;
  if (absl::Status st = CheckVertex(v); !st.ok()) return st;
  if (u == v) return absl::InvalidArgumentError("pair query on a single vertex");
  if (absl::Status st = Charge(QueryKind::kMatrix, 1); !st.ok()) return st;
  if (keep_log_) log_.push_back({QueryKind::kMatrix, u, v});
  return target_.Adjacent(u, v);
}

absl::StatusOr<std::optional<Vertex>> QueryOracle::Neighbor(Vertex u, int64_t i) {
  if (absl::Status st = CheckVertex(u); !st.ok()) return st;
  if (i < 1) return absl::InvalidArgumentError("neighbor index is 1-based");
  if (absl::Status st = Charge(QueryKind::kList, 1); !st.ok()) return st;
  if (keep_log_) log_.push_back({QueryKind::kList, u, i});
  if (i > target_.n()) return std::optional<Vertex>();
  return target_.Neighbor(u, static_cast<int>(i - 1));
}

absl::StatusOr<int> QueryOracle::Degree(Vertex u) {
  if (absl::Status st = CheckVertex(u); !st.ok()) return st;
  if (absl::Status st = Charge(QueryKind::kDegree, 1); !st.ok()) return st;
  if (keep_log_) log_.push_back({QueryKind::kDegree, u, 0});
  return target_.Degree(u);
}

absl::StatusOr<SampledSubgraph> QueryOracle::InducedOn(
    absl::Span<const Vertex> multiset) {
  for (Vertex v : multiset) {
    if (absl::Status st = CheckVertex(v); !st.ok()) return st;
  }
  DistinctVertices dv = Collapse(multiset);
  const int64_t d = static_cast<int64_t>(dv.vertices.size());
  if (absl::Status st = Charge(QueryKind::kMatrix, d * (d - 1) / 2); !st.ok()) {
    return st;
  }
  std::vector<Row> rows(d, Row(WordsFor(static_cast<int>(d)), 0));
  for (int64_t i = 0; i < d; ++i) {
    for (int64_t j = i + 1; j < d; ++j) {
      if (keep_log_) log_.push_back({QueryKind::kMatrix, dv.vertices[i], dv.vertices[j]});
      if (target_.Adjacent(dv.vertices[i], dv.vertices[j])) {
        rows[i][j >> 6] |= uint64_t{1} << (j & 63);
        rows[j][i >> 6] |= uint64_t{1} << (i & 63);
      }
    }
  }
  SampledSubgraph out;
  out.graph = Graph::FromRows(static_cast<int>(d), std::move(rows));
  out.ids = std::move(dv.vertices);
  out.multiplicity = std::move(dv.multiplicity);
  return out;
}

int QueryOracle::ReferenceDegeneracy() {
  ++reference_reads_;
  return Degeneracy(target_.Materialize());
}

}  // namespace motifqc
