// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_GRAPH_H_
#define MOTIFQC_GRAPH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"

namespace motifqc {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Read-only adjacency access. Graph implements it directly; lazily evaluated
// random graphs implement it without materializing all pairs.
class AdjacencySource {
 public:
  virtual ~AdjacencySource() = default;
  virtual int n() const = 0;
  virtual bool Adjacent(Vertex u, Vertex v) const = 0;
  virtual int Degree(Vertex u) const = 0;
  // 0-indexed position in the ascending neighbor list.
  virtual std::optional<Vertex> Neighbor(Vertex u, int index) const = 0;
  virtual const class Graph& Materialize() const = 0;
};

// Fixed-width bitset over vertex ids, used for adjacency rows.
using Row = std::vector<uint64_t>;

inline int WordsFor(int n) { return (n + 63) / 64; }

// Immutable simple undirected graph. Keeps both dense bitset rows and sorted
// neighbor lists.
class Graph final : public AdjacencySource {
 public:
  Graph() = default;

  // Duplicate edges are merged. Self-loops and out-of-range ids are errors.
  static absl::StatusOr<Graph> FromEdges(int n, absl::Span<const Edge> edges);
  // Rows must be symmetric with an empty diagonal.
  static Graph FromRows(int n, std::vector<Row> rows);

  static Graph Empty(int n);
  static Graph Complete(int n);
  static Graph Path(int n);
  static Graph Cycle(int n);
  static Graph Star(int n);

  int n() const override { return n_; }
  bool Adjacent(Vertex u, Vertex v) const override {
    return (rows_[u][v >> 6] >> (v & 63)) & 1;
  }
  int Degree(Vertex u) const override {
    return static_cast<int>(offsets_[u + 1] - offsets_[u]);
  }
  std::optional<Vertex> Neighbor(Vertex u, int index) const override;
  const Graph& Materialize() const override { return *this; }

  absl::Span<const Vertex> Neighbors(Vertex u) const {
    return absl::MakeConstSpan(targets_.data() + offsets_[u], Degree(u));
  }
  const Row& AdjacencyRow(Vertex u) const { return rows_[u]; }
  int64_t NumEdges() const { return static_cast<int64_t>(targets_.size()) / 2; }
  std::vector<Edge> Edges() const;

  // Subgraph on the listed distinct vertices; vertex i of the result is
  // vertices[i].
  Graph InducedSubgraph(absl::Span<const Vertex> vertices) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  void BuildLists();

  int n_ = 0;
  std::vector<Row> rows_;
  std::vector<int64_t> offsets_{0};
  std::vector<Vertex> targets_;
};

// Degeneracy by minimum-degree peeling.
int Degeneracy(const Graph& g);

// Small labeled pattern graph on labels 0..k-1.
class Motif {
 public:
  static constexpr int kMaxLabels = 11;

  Motif() = default;
  static absl::StatusOr<Motif> FromEdges(int k,
                                         absl::Span<const std::pair<int, int>> edges);
  static Motif FromMask(int k, uint64_t mask);
  static Motif Complete(int k);
  static Motif Empty(int k);
  static Motif Path(int k);
  static Motif Star(int k);
  static Motif Cycle(int k);
  // Parses "k:a-b,c-d"; "k:" is the edgeless motif.
  static absl::StatusOr<Motif> Parse(const std::string& text);

  // Bit index of the label pair {i, j}.
  static int PairBit(int i, int j);
  static int NumPairs(int k) { return k * (k - 1) / 2; }

  int k() const { return k_; }
  uint64_t mask() const { return mask_; }
  bool HasEdge(int i, int j) const { return (mask_ >> PairBit(i, j)) & 1; }
  int NumEdges() const;
  int LabelDegree(int i) const;
  int MaxDegree() const;
  std::vector<std::pair<int, int>> Edges() const;
  // Induced sub-motif on the labels in label_mask, relabeled in label order.
  Motif InducedOn(uint32_t label_mask) const;
  std::string ToString() const;

  bool operator==(const Motif& o) const { return k_ == o.k_ && mask_ == o.mask_; }
  bool operator<(const Motif& o) const {
    return k_ != o.k_ ? k_ < o.k_ : mask_ < o.mask_;
  }

 private:
  int k_ = 0;
  uint64_t mask_ = 0;
};

// Ordered sequence of vertex ids with repetition.
using VertexMultiset = std::vector<Vertex>;

// Distinct vertices of a multiset in ascending order with their multiplicities.
struct DistinctVertices {
  std::vector<Vertex> vertices;
  std::vector<int64_t> multiplicity;
};
DistinctVertices Collapse(absl::Span<const Vertex> multiset);

}  // namespace motifqc

#endif  // MOTIFQC_GRAPH_H_
