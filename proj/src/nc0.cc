// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/nc0.h"

#include <algorithm>
#include <bit>
#include <set>

#include "absl/status/status.h"
#include "motifqc/counting.h"
#include "motifqc/models.h"

namespace motifqc {
namespace {

absl::Status ValidateTerms(const NC0Terms& terms) {
  for (const Term& t : terms.terms) {
    if (t.empty()) return absl::InvalidArgumentError("empty term");
    for (const Literal& lit : t) {
      if (lit.a < 0 || lit.b < 0 || lit.a >= terms.n || lit.b >= terms.n || lit.a == lit.b) {
        return absl::InvalidArgumentError("literal pair out of range");
      }
    }
  }
  if (SupportPairs(terms) > kMaxPairsPerTerm) {
    return absl::OutOfRangeError("a term touches more than " +
                                 std::to_string(kMaxPairsPerTerm) + " pairs");
  }
  return absl::OkStatus();
}

std::pair<Vertex, Vertex> Ordered(const Literal& lit) {
  return {std::min(lit.a, lit.b), std::max(lit.a, lit.b)};
}

}  // namespace

int SupportPairs(const NC0Terms& terms) {
  int best = 0;
  for (const Term& t : terms.terms) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Literal& lit : t) pairs.insert(Ordered(lit));
    best = std::max(best, static_cast<int>(pairs.size()));
  }
  return best;
}

absl::StatusOr<int64_t> Nc0Evaluate(const NC0Terms& terms, const Graph& g) {
  if (absl::Status st = ValidateTerms(terms); !st.ok()) return st;
  if (g.n() != terms.n) return absl::InvalidArgumentError("graph size differs from terms");
  int64_t total = 0;
  for (const Term& t : terms.terms) {
    bool all = true;
    for (const Literal& lit : t) all = all && (g.Adjacent(lit.a, lit.b) == lit.positive);
    total += all;
  }
  return total;
}

absl::StatusOr<std::map<Motif, int64_t>> Nc0Decompose(const NC0Terms& terms) {
  if (absl::Status st = ValidateTerms(terms); !st.ok()) return st;
  std::map<Motif, int64_t> out;
  for (const Term& t : terms.terms) {
    std::vector<Vertex> verts;
    for (const Literal& lit : t) {
      verts.push_back(lit.a);
      verts.push_back(lit.b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int k = static_cast<int>(verts.size());
    auto label = [&](Vertex x) {
      return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    uint64_t fixed = 0, value = 0;
    bool contradiction = false;
    for (const Literal& lit : t) {
      const uint64_t bit = uint64_t{1} << Motif::PairBit(label(lit.a), label(lit.b));
      const uint64_t want = lit.positive ? bit : 0;
      if ((fixed & bit) && (value & bit) != want) contradiction = true;
      fixed |= bit;
      value |= want;
    }
    if (contradiction) continue;
    std::vector<int> free_bits;
    for (int b = 0; b < Motif::NumPairs(k); ++b) {
      if (!((fixed >> b) & 1)) free_bits.push_back(b);
    }
    for (uint64_t sub = 0; sub < (uint64_t{1} << free_bits.size()); ++sub) {
      uint64_t mask = value;
      for (size_t i = 0; i < free_bits.size(); ++i) {
        if ((sub >> i) & 1) mask |= uint64_t{1} << free_bits[i];
      }
      ++out[Motif::FromMask(k, mask)];
    }
  }
  return out;
}

absl::StatusOr<double> Nc0Symmetrized(const NC0Terms& terms, const Graph& g) {
  absl::StatusOr<std::map<Motif, int64_t>> dec = Nc0Decompose(terms);
  if (!dec.ok()) return dec.status();
  double total = 0.0;
  for (const auto& [h, coeff] : *dec) {
    absl::StatusOr<uint64_t> c = CountLabeledInduced(g, h);
    if (!c.ok()) return c.status();
    // A pattern on v vertices is hit by (n - v)! of the n! relabelings per copy.
    total += coeff * static_cast<double>(*c) / FallingFactorial(g.n(), h.k());
  }
  return total;
}

absl::StatusOr<Verdict> GraphParameterQuality(QueryOracle& oracle, const NC0Terms& terms,
                                              double p, double eps,
                                              const EfficientOverrides& overrides,
                                              Rng& rng) {
  if (absl::Status st = ValidateTerms(terms); !st.ok()) return st;
  const int bound = 2 * SupportPairs(terms);
  if (bound > kDefaultMotifCap) return absl::OutOfRangeError("support bound exceeds the cap");
  const QueryCounts start = oracle.counts();
  Verdict v;
  for (int k = 2; k <= bound; ++k) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << Motif::NumPairs(k)); ++mask) {
      const Motif h = Motif::FromMask(k, mask);
      absl::StatusOr<Verdict> inner =
          InducedMotifQualityEfficient(oracle, h, p, eps, overrides, rng);
      if (!inner.ok()) return inner.status();
      v.checks.insert(v.checks.end(), inner->checks.begin(), inner->checks.end());
      v.wall_seconds += inner->wall_seconds;
      if (!inner->accepted()) {
        v.decision = Decision::kReject;
        v.stage = "motif " + h.ToString() + ": " + inner->stage;
        v.failing = inner->failing;
        break;
      }
    }
    if (!v.accepted()) break;
  }
  if (v.accepted()) v.stage = "all checks passed";
  const QueryCounts now = oracle.counts();
  v.queries = {now.matrix - start.matrix, now.list - start.list, now.degree - start.degree};
  return v;
}

}  // namespace motifqc
