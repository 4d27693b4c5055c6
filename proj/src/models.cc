// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/models.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <tuple>

#include "absl/status/status.h"
#include "motifqc/rng.h"

namespace motifqc {
namespace {

constexpr uint64_t kCoinTag = 0xC011;
constexpr uint64_t kPlantTag = 0x9147;
constexpr uint64_t kRegularTag = 0x4E6;

bool ValidProb(double p) { return p >= 0.0 && p <= 1.0; }

// Index of the unordered pair u < v in row-major upper-triangular order.
inline uint64_t PairIndex(int64_t n, int64_t u, int64_t v) {
  if (u > v) std::swap(u, v);
  return static_cast<uint64_t>(u * (2 * n - u - 1) / 2 + (v - u - 1));
}

// Pair probability as a function of the endpoints, plus forced edges.
class Coins {
 public:
  static absl::StatusOr<Coins> Make(const ModelSpec& spec) {
    Coins c;
    c.key_ = DeriveSeed(spec.seed, {kCoinTag});
    if (const auto* m = std::get_if<Gnp>(&spec.model)) {
      c.n_ = m->n;
      c.block_.assign(m->n, 0);
      c.probs_ = {{m->p}};
    } else if (const auto* m = std::get_if<Sbm>(&spec.model)) {
      c.n_ = ModelVertexCount(spec.model);
      for (size_t b = 0; b < m->sizes.size(); ++b) {
        c.block_.insert(c.block_.end(), m->sizes[b], static_cast<int>(b));
      }
      c.probs_ = m->probs;
    } else if (const auto* m = std::get_if<PlantedClique>(&spec.model)) {
      c.n_ = m->n;
      c.block_.assign(m->n, 0);
      c.probs_ = {{m->p}};
      c.forced_.assign(m->n, 0);
      for (Vertex v : PlantedSet(*m, spec.seed)) c.forced_[v] = 1;
    } else if (const auto* m = std::get_if<MotifNoDist>(&spec.model)) {
      c.n_ = m->n;
      c.block_.assign(m->n - m->ell, 0);
      c.block_.insert(c.block_.end(), m->ell, 1);
      c.probs_ = {{m->p, 0.5}, {0.5, 0.5}};
    } else {
      return absl::InvalidArgumentError("model has no pairwise coins");
    }
    return c;
  }

  int n() const { return n_; }

  bool Edge(Vertex u, Vertex v) const {
    if (!forced_.empty() && forced_[u] && forced_[v]) return true;
    const double p = probs_[block_[u]][block_[v]];
    return CounterUniform(key_, PairIndex(n_, u, v)) < p;
  }

  std::vector<Row> Rows(Exec exec) const {
    const int words = WordsFor(n_);
    std::vector<Row> rows(n_, Row(words, 0));
    // Each row owns its upper part; the mirror is filled afterwards.
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::kParallel)
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (Edge(u, v)) rows[u][v >> 6] |= uint64_t{1} << (v & 63);
      }
    }
    for (int u = 0; u < n_; ++u) {
      for (int w = 0; w < words; ++w) {
        uint64_t bits = rows[u][w];
        while (bits) {
          const int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          rows[v][u >> 6] |= uint64_t{1} << (u & 63);
        }
      }
    }
    return rows;
  }

 private:
  int n_ = 0;
  uint64_t key_ = 0;
  std::vector<int> block_;
  std::vector<std::vector<double>> probs_;
  std::vector<char> forced_;
};

class LazyGraph final : public AdjacencySource {
 public:
  explicit LazyGraph(Coins coins)
      : coins_(std::move(coins)), rows_(coins_.n()) {}

  int n() const override { return coins_.n(); }
  bool Adjacent(Vertex u, Vertex v) const override {
    return u != v && coins_.Edge(u, v);
  }
  int Degree(Vertex u) const override {
    return static_cast<int>(RowOf(u).size());
  }
  std::optional<Vertex> Neighbor(Vertex u, int index) const override {
    const auto& row = RowOf(u);
    if (index < 0 || index >= static_cast<int>(row.size())) return std::nullopt;
    return row[index];
  }
  const Graph& Materialize() const override {
    if (!full_) {
      full_ = std::make_unique<Graph>(Graph::FromRows(n(), coins_.Rows(Exec::kSerial)));
    }
    return *full_;
  }

 private:
  const std::vector<Vertex>& RowOf(Vertex u) const {
    if (!rows_[u]) {
      rows_[u] = std::make_unique<std::vector<Vertex>>();
      for (Vertex v = 0; v < n(); ++v) {
        if (v != u && coins_.Edge(u, v)) rows_[u]->push_back(v);
      }
    }
    return *rows_[u];
  }

  Coins coins_;
  mutable std::vector<std::unique_ptr<std::vector<Vertex>>> rows_;
  mutable std::unique_ptr<Graph> full_;
};

// Steger-Wormald: pair random free points whose vertices are distinct and not
// yet adjacent; restart when no such pair remains.
absl::StatusOr<Graph> SampleRegular(const DRegular& m, uint64_t seed) {
  Rng rng(DeriveSeed(seed, {kRegularTag}));
  const int64_t points = static_cast<int64_t>(m.n) * m.d;
  std::vector<Vertex> stubs(points);
  for (int attempt = 0; attempt < kRegularAttempts; ++attempt) {
    for (int64_t i = 0; i < points; ++i) stubs[i] = static_cast<Vertex>(i / m.d);
    std::vector<Row> rows(m.n, Row(WordsFor(m.n), 0));
    auto adjacent = [&](Vertex u, Vertex v) { return (rows[u][v >> 6] >> (v & 63)) & 1; };
    auto suitable = [&](int64_t i, int64_t j) {
      return stubs[i] != stubs[j] && !adjacent(stubs[i], stubs[j]);
    };
    int64_t free = points;
    bool stuck = false;
    while (free > 0 && !stuck) {
      int64_t i = -1, j = -1;
      for (int64_t tries = 0; tries < 64 * free; ++tries) {
        const int64_t a = static_cast<int64_t>(rng.Below(free));
        const int64_t b = static_cast<int64_t>(rng.Below(free));
        if (a != b && suitable(a, b)) {
          i = a;
          j = b;
          break;
        }
      }
      if (i < 0) {
        // Rejection failed repeatedly; scan for any remaining suitable pair.
        std::vector<std::pair<int64_t, int64_t>> options;
        for (int64_t a = 0; a < free; ++a) {
          for (int64_t b = a + 1; b < free; ++b) {
            if (suitable(a, b)) options.emplace_back(a, b);
          }
        }
        if (options.empty()) {
          stuck = true;
          break;
        }
        std::tie(i, j) = options[rng.Below(options.size())];
      }
      const Vertex u = stubs[i], v = stubs[j];
      rows[u][v >> 6] |= uint64_t{1} << (v & 63);
      rows[v][u >> 6] |= uint64_t{1} << (u & 63);
      if (i < j) std::swap(i, j);
      std::swap(stubs[i], stubs[--free]);
      std::swap(stubs[j], stubs[--free]);
    }
    if (!stuck) return Graph::FromRows(m.n, std::move(rows));
  }
  return absl::InternalError("regular sampler got stuck in " +
                             std::to_string(kRegularAttempts) + " attempts");
}

}  // namespace

absl::Status Validate(const ModelSpec& spec) {
  if (const auto* m = std::get_if<Gnp>(&spec.model)) {
    if (m->n < 0) return absl::InvalidArgumentError("n must be nonnegative");
    if (!ValidProb(m->p)) return absl::InvalidArgumentError("p must lie in [0,1]");
  } else if (const auto* m = std::get_if<Sbm>(&spec.model)) {
    const size_t b = m->sizes.size();
    if (b == 0) return absl::InvalidArgumentError("sbm needs at least one block");
    if (m->probs.size() != b) {
      return absl::InvalidArgumentError("sbm probability matrix has wrong shape");
    }
    for (size_t i = 0; i < b; ++i) {
      if (m->sizes[i] < 0) return absl::InvalidArgumentError("negative block size");
      if (m->probs[i].size() != b) {
        return absl::InvalidArgumentError("sbm probability matrix has wrong shape");
      }
      for (size_t j = 0; j < b; ++j) {
        if (!ValidProb(m->probs[i][j])) {
          return absl::InvalidArgumentError("sbm probabilities must lie in [0,1]");
        }
        if (m->probs[i][j] != m->probs[j][i]) {
          return absl::InvalidArgumentError("sbm probability matrix must be symmetric");
        }
      }
    }
  } else if (const auto* m = std::get_if<PlantedClique>(&spec.model)) {
    if (m->n < 0 || m->ell < 0 || m->ell > m->n) {
      return absl::InvalidArgumentError("planted size must lie in [0, n]");
    }
    if (!ValidProb(m->p)) return absl::InvalidArgumentError("p must lie in [0,1]");
  } else if (const auto* m = std::get_if<MotifNoDist>(&spec.model)) {
    if (m->n < 0 || m->ell < 0 || m->ell > m->n) {
      return absl::InvalidArgumentError("planted size must lie in [0, n]");
    }
    if (!ValidProb(m->p)) return absl::InvalidArgumentError("p must lie in [0,1]");
  } else if (const auto* m = std::get_if<DRegular>(&spec.model)) {
    if (m->n < 0 || m->d < 0 || m->d >= std::max(m->n, 1)) {
      return absl::InvalidArgumentError("d must lie in [0, n)");
    }
    if ((static_cast<int64_t>(m->n) * m->d) % 2 != 0) {
      return absl::InvalidArgumentError("n*d must be even");
    }
  }
  return absl::OkStatus();
}

int ModelVertexCount(const ModelVariant& model) {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Sbm>) {
          int n = 0;
          for (int s : m.sizes) n += s;
          return n;
        } else {
          return m.n;
        }
      },
      model);
}

int PlantedSize(const ModelVariant& model) {
  if (const auto* m = std::get_if<PlantedClique>(&model)) return m->ell;
  if (const auto* m = std::get_if<MotifNoDist>(&model)) return m->ell;
  return 0;
}

std::string ModelName(const ModelVariant& model) {
  static const char* kNames[] = {"gnp", "sbm", "planted_clique", "motif_no_dist",
                                 "d_regular"};
  return kNames[model.index()];
}

std::vector<Vertex> PlantedSet(const PlantedClique& model, uint64_t seed) {
  Rng rng(DeriveSeed(seed, {kPlantTag}));
  std::vector<Vertex> ids(model.n);
  for (int i = 0; i < model.n; ++i) ids[i] = i;
  // Partial Fisher-Yates: the first ell slots are a uniform ell-subset.
  for (int i = 0; i < model.ell; ++i) {
    const int j = i + static_cast<int>(rng.Below(static_cast<uint64_t>(model.n - i)));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(model.ell);
  std::sort(ids.begin(), ids.end());
  return ids;
}

absl::StatusOr<Graph> Sample(const ModelSpec& spec, Exec exec) {
  if (absl::Status st = Validate(spec); !st.ok()) return st;
  if (const auto* m = std::get_if<DRegular>(&spec.model)) {
    return SampleRegular(*m, spec.seed);
  }
  absl::StatusOr<Coins> coins = Coins::Make(spec);
  if (!coins.ok()) return coins.status();
  return Graph::FromRows(coins->n(), coins->Rows(exec));
}

absl::StatusOr<std::unique_ptr<AdjacencySource>> SampleLazy(const ModelSpec& spec) {
  if (absl::Status st = Validate(spec); !st.ok()) return st;
  absl::StatusOr<Coins> coins = Coins::Make(spec);
  if (!coins.ok()) return coins.status();
  return std::unique_ptr<AdjacencySource>(new LazyGraph(*std::move(coins)));
}

double FallingFactorial(int64_t n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return n < k ? 0.0 : r;
}

double Binomial(int64_t n, int k) {
  if (k < 0 || n < k) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / (i + 1);
  return r;
}

double ExpectedCountGnp(const Motif& h, int64_t n, double p, bool induced) {
  const int k = h.k();
  const int e = h.NumEdges();
  double value = FallingFactorial(n, k) * std::pow(p, e);
  if (induced) value *= std::pow(1.0 - p, Motif::NumPairs(k) - e);
  return value;
}

absl::StatusOr<double> ExpectedCountSbm(const Motif& h, const std::vector<int>& sizes,
                                        const std::vector<std::vector<double>>& probs,
                                        bool induced) {
  ModelSpec check{Sbm{sizes, probs}, 0};
  if (absl::Status st = Validate(check); !st.ok()) return st;
  const int k = h.k();
  const int b = static_cast<int>(sizes.size());
  std::vector<int> assign(k, 0);
  double total = 0.0;
  // Odometer over all block assignments of the k labels.
  while (true) {
    std::vector<int> per_block(b, 0);
    for (int i = 0; i < k; ++i) ++per_block[assign[i]];
    double term = 1.0;
    for (int j = 0; j < b && term != 0.0; ++j) {
      term *= FallingFactorial(sizes[j], per_block[j]);
    }
    for (int j = 1; j < k && term != 0.0; ++j) {
      for (int i = 0; i < j; ++i) {
        const double q = probs[assign[i]][assign[j]];
        if (h.HasEdge(i, j)) {
          term *= q;
        } else if (induced) {
          term *= 1.0 - q;
        }
      }
    }
    total += term;
    int pos = 0;
    while (pos < k && ++assign[pos] == b) assign[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

}  // namespace motifqc
