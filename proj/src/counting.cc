// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/counting.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "absl/status/status.h"

namespace motifqc {
namespace {

absl::Status CheckCap(int k, int cap) {
  if (k < 1) return absl::InvalidArgumentError("motif size must be positive");
  if (k > cap || k > Motif::kMaxLabels) {
    return absl::OutOfRangeError("motif size " + std::to_string(k) +
                                 " exceeds cap " + std::to_string(cap));
  }
  return absl::OkStatus();
}

// Shared bitset helpers over rows of a fixed word count.
struct Bits {
  int words;
  uint64_t tail;  // mask of valid bits in the last word

  explicit Bits(int n)
      : words(WordsFor(n)),
        tail(n % 64 == 0 ? ~uint64_t{0} : (uint64_t{1} << (n % 64)) - 1) {}

  void Fill(Row& r) const {
    std::fill(r.begin(), r.end(), ~uint64_t{0});
    if (words > 0) r[words - 1] &= tail;
  }
};

inline void ClearBit(Row& r, Vertex v) { r[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

// Weighted population count: sum of weights over set bits.
class Weigher {
 public:
  Weigher(int n, absl::Span<const int64_t> weights) : weights_(weights) {
    if (weights_.empty()) return;
    heavy_.assign(WordsFor(n), 0);
    for (int v = 0; v < n; ++v) {
      if (weights_[v] != 1) {
        heavy_[v >> 6] |= uint64_t{1} << (v & 63);
        any_heavy_ = true;
      }
    }
  }

  uint64_t Weight(Vertex v) const {
    return weights_.empty() ? 1 : static_cast<uint64_t>(weights_[v]);
  }

  uint64_t Sum(const Row& r) const {
    uint64_t total = 0;
    for (size_t w = 0; w < r.size(); ++w) total += std::popcount(r[w]);
    if (!any_heavy_) return total;
    for (size_t w = 0; w < r.size(); ++w) {
      uint64_t bits = r[w] & heavy_[w];
      while (bits) {
        const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        total += static_cast<uint64_t>(weights_[v]) - 1;
        bits &= bits - 1;
      }
    }
    return total;
  }

  // Weighted count of the set bits of a & b.
  uint64_t SumAnd(const Row& a, const Row& b) const {
    uint64_t total = 0;
    for (size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
    if (!any_heavy_) return total;
    for (size_t w = 0; w < a.size(); ++w) {
      uint64_t bits = a[w] & b[w] & heavy_[w];
      while (bits) {
        const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        total += static_cast<uint64_t>(weights_[v]) - 1;
        bits &= bits - 1;
      }
    }
    return total;
  }

  // Sum of squared weights over the set bits of a & b.
  uint64_t SumSquaresAnd(const Row& a, const Row& b) const {
    uint64_t total = 0;
    for (size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
    if (!any_heavy_) return total;
    for (size_t w = 0; w < a.size(); ++w) {
      uint64_t bits = a[w] & b[w] & heavy_[w];
      while (bits) {
        const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        const uint64_t x = static_cast<uint64_t>(weights_[v]);
        total += x * x - 1;
        bits &= bits - 1;
      }
    }
    return total;
  }

 private:
  absl::Span<const int64_t> weights_;
  Row heavy_;
  bool any_heavy_ = false;
};

// Backtracking over injections of the motif labels, with candidate sets built
// by intersecting adjacency rows (or their complements for induced non-edges).
class MotifEnumerator {
 public:
  MotifEnumerator(const Graph& g, absl::Span<const int64_t> weights,
                  const Motif& h, bool induced)
      : g_(g), bits_(g.n()), weigher_(g.n(), weights), k_(h.k()),
        induced_(induced) {
    // Place labels so that each one has as many placed neighbors as possible.
    std::vector<char> placed(k_, 0);
    for (int t = 0; t < k_; ++t) {
      int best = -1, best_score = -1;
      for (int i = 0; i < k_; ++i) {
        if (placed[i]) continue;
        int score = 0;
        for (int j = 0; j < k_; ++j) {
          if (placed[j] && h.HasEdge(i, j)) score += k_;
        }
        if (t == 0) score = h.LabelDegree(i);
        if (score > best_score) best = i, best_score = score;
      }
      placed[best] = 1;
      order_.push_back(best);
    }
    edge_.assign(k_ * k_, 0);
    for (int t = 0; t < k_; ++t) {
      for (int b = 0; b < t; ++b) {
        edge_[t * k_ + b] = h.HasEdge(order_[t], order_[b]);
      }
    }
  }

  uint64_t Run(Exec exec) const {
    const int n = g_.n();
    if (k_ > n) return 0;
    if (k_ == 1) {
      Row all(bits_.words);
      bits_.Fill(all);
      return weigher_.Sum(all);
    }
    uint64_t total = 0;
    if (exec == Exec::kParallel) {
#pragma omp parallel
      {
        Scratch scratch(k_, bits_.words);
#pragma omp for schedule(dynamic, 4) reduction(+ : total)
        for (int v = 0; v < n; ++v) total += FromFirst(v, scratch);
      }
    } else {
      Scratch scratch(k_, bits_.words);
      for (int v = 0; v < n; ++v) total += FromFirst(v, scratch);
    }
    return total;
  }

 private:
  struct Scratch {
    Scratch(int k, int words) : cand(k, Row(words)), phi(k) {}
    std::vector<Row> cand;
    std::vector<Vertex> phi;
  };

  uint64_t FromFirst(Vertex v, Scratch& s) const {
    s.phi[0] = v;
    return Rec(1, weigher_.Weight(v), s);
  }

  uint64_t Rec(int t, uint64_t wprod, Scratch& s) const {
    Row& cand = s.cand[t];
    bits_.Fill(cand);
    for (int b = 0; b < t; ++b) {
      const Row& row = g_.AdjacencyRow(s.phi[b]);
      if (edge_[t * k_ + b]) {
        for (int w = 0; w < bits_.words; ++w) cand[w] &= row[w];
      } else if (induced_) {
        for (int w = 0; w < bits_.words; ++w) cand[w] &= ~row[w];
      }
    }
    for (int b = 0; b < t; ++b) ClearBit(cand, s.phi[b]);
    if (t == k_ - 1) return wprod * weigher_.Sum(cand);
    if (t == k_ - 2) return wprod * LastTwo(t, cand, s);
    uint64_t total = 0;
    for (int w = 0; w < bits_.words; ++w) {
      uint64_t bits = cand[w];
      while (bits) {
        const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        s.phi[t] = v;
        total += Rec(t + 1, wprod * weigher_.Weight(v), s);
      }
    }
    return total;
  }

  // Levels k-2 and k-1 together: the last label's constraints from earlier
  // labels are intersected once, then each choice at level k-2 costs one pass.
  uint64_t LastTwo(int t, const Row& cand, Scratch& s) const {
    Row& base = s.cand[t + 1];
    bits_.Fill(base);
    for (int b = 0; b < t; ++b) {
      const Row& row = g_.AdjacencyRow(s.phi[b]);
      if (edge_[(t + 1) * k_ + b]) {
        for (int w = 0; w < bits_.words; ++w) base[w] &= row[w];
      } else if (induced_) {
        for (int w = 0; w < bits_.words; ++w) base[w] &= ~row[w];
      }
    }
    for (int b = 0; b < t; ++b) ClearBit(base, s.phi[b]);
    const bool adjacent = edge_[(t + 1) * k_ + t];
    if (!adjacent && !induced_) {
      // Only distinctness ties the last label to this one.
      return weigher_.Sum(cand) * weigher_.Sum(base) - weigher_.SumSquaresAnd(cand, base);
    }
    const uint64_t base_sum = adjacent ? 0 : weigher_.Sum(base);
    uint64_t total = 0;
    for (int w = 0; w < bits_.words; ++w) {
      uint64_t bits = cand[w];
      while (bits) {
        const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const Row& row = g_.AdjacencyRow(v);
        uint64_t inner;
        if (adjacent) {
          inner = weigher_.SumAnd(base, row);
        } else {
          // base minus N(v) minus v itself.
          inner = base_sum - weigher_.SumAnd(base, row);
          if ((base[v >> 6] >> (v & 63)) & 1) inner -= weigher_.Weight(v);
        }
        total += weigher_.Weight(v) * inner;
      }
    }
    return total;
  }

  const Graph& g_;
  Bits bits_;
  Weigher weigher_;
  int k_;
  bool induced_;
  std::vector<int> order_;
  std::vector<char> edge_;
};

// Unordered cliques v1 < v2 < ... weighted by the product of weights.
class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, absl::Span<const int64_t> weights, int ell)
      : g_(g), bits_(g.n()), weigher_(g.n(), weights), ell_(ell) {}

  uint64_t Run(Exec exec) const {
    const int n = g_.n();
    if (ell_ > n) return 0;
    if (ell_ == 1) {
      Row all(bits_.words);
      bits_.Fill(all);
      return weigher_.Sum(all);
    }
    uint64_t total = 0;
    if (exec == Exec::kParallel) {
#pragma omp parallel
      {
        std::vector<Row> scratch(ell_, Row(bits_.words));
#pragma omp for schedule(dynamic, 4) reduction(+ : total)
        for (int v = 0; v < n; ++v) total += FromFirst(v, scratch);
      }
    } else {
      std::vector<Row> scratch(ell_, Row(bits_.words));
      for (int v = 0; v < n; ++v) total += FromFirst(v, scratch);
    }
    return total;
  }

 private:
  // cand <- row restricted to ids above v.
  void Above(const Row& row, Vertex v, Row& cand) const {
    const int w0 = v >> 6;
    for (int w = 0; w < w0; ++w) cand[w] = 0;
    const int shift = (v & 63) + 1;
    cand[w0] = shift == 64 ? 0 : row[w0] & (~uint64_t{0} << shift);
    for (int w = w0 + 1; w < bits_.words; ++w) cand[w] = row[w];
  }

  uint64_t FromFirst(Vertex v, std::vector<Row>& scratch) const {
    Above(g_.AdjacencyRow(v), v, scratch[1]);
    return Rec(1, weigher_.Weight(v), scratch);
  }

  // scratch[t] holds candidates for position t.
  uint64_t Rec(int t, uint64_t wprod, std::vector<Row>& scratch) const {
    const Row& cand = scratch[t];
    if (t == ell_ - 1) return wprod * weigher_.Sum(cand);
    uint64_t total = 0;
    Row& next = scratch[t + 1];
    for (int w = 0; w < bits_.words; ++w) {
      uint64_t bits = cand[w];
      while (bits) {
        const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        Above(g_.AdjacencyRow(v), v, next);
        bool any = false;
        for (int x = 0; x < bits_.words; ++x) {
          next[x] &= cand[x];
          any |= next[x] != 0;
        }
        if (any) total += Rec(t + 1, wprod * weigher_.Weight(v), scratch);
      }
    }
    return total;
  }

  const Graph& g_;
  Bits bits_;
  Weigher weigher_;
  int ell_;
};

uint64_t Factorial(int k) {
  uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

uint64_t WeightedMotifCount(const Graph& g, absl::Span<const int64_t> weights,
                            const Motif& h, bool induced, Exec exec) {
  return MotifEnumerator(g, weights, h, induced).Run(exec);
}

uint64_t WeightedCliqueCount(const Graph& g, absl::Span<const int64_t> weights,
                             int ell, Exec exec) {
  return CliqueEnumerator(g, weights, ell).Run(exec) * Factorial(ell);
}

absl::StatusOr<uint64_t> CountCliques(const Graph& g, int ell, Exec exec, int cap) {
  if (absl::Status st = CheckCap(ell, cap); !st.ok()) return st;
  return WeightedCliqueCount(g, {}, ell, exec);
}

absl::StatusOr<uint64_t> CountLabeledInduced(const Graph& g, const Motif& h,
                                             Exec exec, int cap) {
  if (absl::Status st = CheckCap(h.k(), cap); !st.ok()) return st;
  return WeightedMotifCount(g, {}, h, /*induced=*/true, exec);
}

absl::StatusOr<uint64_t> CountLabeledNoninduced(const Graph& g, const Motif& h,
                                                Exec exec, int cap) {
  if (absl::Status st = CheckCap(h.k(), cap); !st.ok()) return st;
  return WeightedMotifCount(g, {}, h, /*induced=*/false, exec);
}

absl::StatusOr<uint64_t> CountInMultiset(const Graph& g, const VertexMultiset& s,
                                         const Motif& h, bool induced, int cap) {
  if (absl::Status st = CheckCap(h.k(), cap); !st.ok()) return st;
  for (Vertex v : s) {
    if (v < 0 || v >= g.n()) {
      return absl::InvalidArgumentError("multiset vertex out of range");
    }
  }
  const DistinctVertices dv = Collapse(s);
  const Graph sub = g.InducedSubgraph(dv.vertices);
  return WeightedMotifCount(sub, dv.multiplicity, h, induced, Exec::kSerial);
}

std::vector<uint32_t> LabelSubsets(int k, int ell) {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (uint32_t{1} << k); ++m) {
    if (std::popcount(m) == ell) out.push_back(m);
  }
  return out;
}

absl::StatusOr<std::vector<Motif>> SubgraphsOn(const Motif& h, int ell) {
  if (ell < 1 || ell > h.k()) {
    return absl::InvalidArgumentError("subgraph size must lie in [1, k]");
  }
  std::vector<Motif> out;
  for (uint32_t m : LabelSubsets(h.k(), ell)) out.push_back(h.InducedOn(m));
  return out;
}

std::vector<std::vector<Motif>> SupergraphsSameVertices(const Motif& h) {
  const int pairs = Motif::NumPairs(h.k());
  std::vector<int> missing;
  for (int b = 0; b < pairs; ++b) {
    if (!((h.mask() >> b) & 1)) missing.push_back(b);
  }
  std::vector<std::vector<Motif>> out(missing.size() + 1);
  for (uint64_t sub = 0; sub < (uint64_t{1} << missing.size()); ++sub) {
    uint64_t mask = h.mask();
    for (size_t i = 0; i < missing.size(); ++i) {
      if ((sub >> i) & 1) mask |= uint64_t{1} << missing[i];
    }
    out[std::popcount(sub)].push_back(Motif::FromMask(h.k(), mask));
  }
  return out;
}

Graph LineGraph(const Motif& h) {
  const auto edges = h.Edges();
  std::vector<Edge> adj;
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) {
        adj.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return *Graph::FromEdges(static_cast<int>(edges.size()), adj);
}

namespace {

double MaxDensity(const Motif& h) {
  double best = 0.0;
  for (uint32_t m = 1; m < (uint32_t{1} << h.k()); ++m) {
    const Motif f = h.InducedOn(m);
    best = std::max(best, static_cast<double>(f.NumEdges()) / f.k());
  }
  return best;
}

}  // namespace

MotifStats ComputeMotifStats(const Motif& h) {
  MotifStats st;
  st.max_degree = h.MaxDegree();
  st.m_h = MaxDensity(h);
  for (const auto& group : SupergraphsSameVertices(h)) {
    for (const Motif& sup : group) st.m_h_star = std::max(st.m_h_star, MaxDensity(sup));
  }
  const Graph lg = LineGraph(h);
  for (int v = 0; v < lg.n(); ++v) {
    st.line_graph_max_degree = std::max(st.line_graph_max_degree, lg.Degree(v));
  }
  st.line_graph_degeneracy = Degeneracy(lg);
  st.sigma = std::min((st.line_graph_max_degree + 4) / 2.0,
                      (st.line_graph_degeneracy + 6) / 2.0);
  return st;
}

}  // namespace motifqc
