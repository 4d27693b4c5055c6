// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/graph.h"

#include <algorithm>
#include <bit>
#include <map>

#include "absl/status/status.h"

namespace motifqc {

absl::StatusOr<Graph> Graph::FromEdges(int n, absl::Span<const Edge> edges) {
  if (n < 0) return absl::InvalidArgumentError("negative vertex count");
  std::vector<Row> rows(n, Row(WordsFor(n), 0));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      return absl::InvalidArgumentError("edge endpoint out of range: " +
                                         std::to_string(u) + " " +
                                         std::to_string(v));
    }
    if (u == v) {
      return absl::InvalidArgumentError("self-loop at " + std::to_string(u));
    }
    rows[u][v >> 6] |= uint64_t{1} << (v & 63);
    rows[v][u >> 6] |= uint64_t{1} << (u & 63);
  }
  return FromRows(n, std::move(rows));
}

Graph Graph::FromRows(int n, std::vector<Row> rows) {
  Graph g;
  g.n_ = n;
  g.rows_ = std::move(rows);
  g.BuildLists();
  return g;
}

void Graph::BuildLists() {
  offsets_.assign(n_ + 1, 0);
  for (int u = 0; u < n_; ++u) {
    int64_t d = 0;
    for (uint64_t w : rows_[u]) d += std::popcount(w);
    offsets_[u + 1] = offsets_[u] + d;
  }
  targets_.resize(offsets_[n_]);
  for (int u = 0; u < n_; ++u) {
    int64_t pos = offsets_[u];
    for (size_t w = 0; w < rows_[u].size(); ++w) {
      uint64_t bits = rows_[u][w];
      while (bits) {
        targets_[pos++] = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }
}

Graph Graph::Empty(int n) { return FromRows(n, std::vector<Row>(n, Row(WordsFor(n), 0))); }

Graph Graph::Complete(int n) {
  std::vector<Row> rows(n, Row(WordsFor(n), 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) rows[u][v >> 6] |= uint64_t{1} << (v & 63);
    }
  }
  return FromRows(n, std::move(rows));
}

Graph Graph::Path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return *FromEdges(n, edges);
}

Graph Graph::Cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return *FromEdges(n, edges);
}

Graph Graph::Star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return *FromEdges(n, edges);
}

std::optional<Vertex> Graph::Neighbor(Vertex u, int index) const {
  if (index < 0 || index >= Degree(u)) return std::nullopt;
  return targets_[offsets_[u] + index];
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(NumEdges());
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : Neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::InducedSubgraph(absl::Span<const Vertex> vertices) const {
  const int d = static_cast<int>(vertices.size());
  std::vector<Row> rows(d, Row(WordsFor(d), 0));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (Adjacent(vertices[i], vertices[j])) {
        rows[i][j >> 6] |= uint64_t{1} << (j & 63);
        rows[j][i >> 6] |= uint64_t{1} << (i & 63);
      }
    }
  }
  return FromRows(d, std::move(rows));
}

int Degeneracy(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(n);
  int max_deg = 0;
  for (int u = 0; u < n; ++u) {
    deg[u] = g.Degree(u);
    max_deg = std::max(max_deg, deg[u]);
  }
  // Bucket queue keyed by current degree.
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (int u = 0; u < n; ++u) buckets[deg[u]].push_back(u);
  std::vector<char> removed(n, 0);
  int result = 0;
  int level = 0;
  for (int done = 0; done < n;) {
    level = std::max(level - 1, 0);
    while (buckets[level].empty()) ++level;
    Vertex u = buckets[level].back();
    buckets[level].pop_back();
    if (removed[u] || deg[u] != level) continue;
    removed[u] = 1;
    ++done;
    result = std::max(result, level);
    for (Vertex v : g.Neighbors(u)) {
      if (!removed[v]) buckets[--deg[v]].push_back(v);
    }
  }
  return result;
}

int Motif::PairBit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

absl::StatusOr<Motif> Motif::FromEdges(int k,
                                       absl::Span<const std::pair<int, int>> edges) {
  if (k < 1 || k > kMaxLabels) {
    return absl::OutOfRangeError("motif label count out of range: " +
                                 std::to_string(k));
  }
  uint64_t mask = 0;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) {
      return absl::InvalidArgumentError("bad motif edge " + std::to_string(a) +
                                        "-" + std::to_string(b));
    }
    const uint64_t bit = uint64_t{1} << PairBit(a, b);
    if (mask & bit) return absl::InvalidArgumentError("duplicate motif edge");
    mask |= bit;
  }
  return FromMask(k, mask);
}

Motif Motif::FromMask(int k, uint64_t mask) {
  Motif m;
  m.k_ = k;
  m.mask_ = mask;
  return m;
}

Motif Motif::Complete(int k) {
  const int pairs = NumPairs(k);
  return FromMask(k, pairs == 64 ? ~uint64_t{0} : (uint64_t{1} << pairs) - 1);
}

Motif Motif::Empty(int k) { return FromMask(k, 0); }

Motif Motif::Path(int k) {
  uint64_t mask = 0;
  for (int i = 0; i + 1 < k; ++i) mask |= uint64_t{1} << PairBit(i, i + 1);
  return FromMask(k, mask);
}

Motif Motif::Star(int k) {
  uint64_t mask = 0;
  for (int i = 1; i < k; ++i) mask |= uint64_t{1} << PairBit(0, i);
  return FromMask(k, mask);
}

Motif Motif::Cycle(int k) {
  Motif m = Path(k);
  if (k >= 3) m.mask_ |= uint64_t{1} << PairBit(0, k - 1);
  return m;
}

absl::StatusOr<Motif> Motif::Parse(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) {
    return absl::InvalidArgumentError("motif must look like k:a-b,c-d");
  }
  int k = 0;
  try {
    k = std::stoi(text.substr(0, colon));
  } catch (...) {
    return absl::InvalidArgumentError("bad motif label count");
  }
  std::vector<std::pair<int, int>> edges;
  std::string rest = text.substr(colon + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string item = rest.substr(pos, comma - pos);
    const size_t dash = item.find('-');
    if (dash == std::string::npos) {
      return absl::InvalidArgumentError("bad motif edge '" + item + "'");
    }
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)),
                         std::stoi(item.substr(dash + 1)));
    } catch (...) {
      return absl::InvalidArgumentError("bad motif edge '" + item + "'");
    }
    pos = comma + 1;
  }
  return FromEdges(k, edges);
}

int Motif::NumEdges() const { return std::popcount(mask_); }

int Motif::LabelDegree(int i) const {
  int d = 0;
  for (int j = 0; j < k_; ++j) {
    if (j != i && HasEdge(i, j)) ++d;
  }
  return d;
}

int Motif::MaxDegree() const {
  int best = 0;
  for (int i = 0; i < k_; ++i) best = std::max(best, LabelDegree(i));
  return best;
}

std::vector<std::pair<int, int>> Motif::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < k_; ++j) {
    for (int i = 0; i < j; ++i) {
      if (HasEdge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Motif Motif::InducedOn(uint32_t label_mask) const {
  std::vector<int> labels;
  for (int i = 0; i < k_; ++i) {
    if ((label_mask >> i) & 1) labels.push_back(i);
  }
  uint64_t mask = 0;
  for (size_t b = 1; b < labels.size(); ++b) {
    for (size_t a = 0; a < b; ++a) {
      if (HasEdge(labels[a], labels[b])) {
        mask |= uint64_t{1} << PairBit(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return FromMask(static_cast<int>(labels.size()), mask);
}

std::string Motif::ToString() const {
  std::string out = std::to_string(k_) + ":";
  bool first = true;
  for (const auto& [a, b] : Edges()) {
    if (!first) out += ",";
    out += std::to_string(a) + "-" + std::to_string(b);
    first = false;
  }
  return out;
}

DistinctVertices Collapse(absl::Span<const Vertex> multiset) {
  std::map<Vertex, int64_t> counts;
  for (Vertex v : multiset) ++counts[v];
  DistinctVertices out;
  out.vertices.reserve(counts.size());
  out.multiplicity.reserve(counts.size());
  for (const auto& [v, c] : counts) {
    out.vertices.push_back(v);
    out.multiplicity.push_back(c);
  }
  return out;
}

}  // namespace motifqc
