// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_MODELS_H_
#define MOTIFQC_MODELS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "motifqc/counting.h"
#include "motifqc/graph.h"

namespace motifqc {

struct Gnp {
  int n = 0;
  double p = 0.0;
};

// Blocks occupy contiguous id ranges in order.
struct Sbm {
  std::vector<int> sizes;
  std::vector<std::vector<double>> probs;
};

// G(n, p) plus all pairs inside a uniformly random ell-set.
struct PlantedClique {
  int n = 0;
  double p = 0.0;
  int ell = 0;
};

// G(n, p) outside the last ell ids; every pair touching them has prob 1/2.
// Bit-identical to Sbm{{n - ell, ell}, {{p, .5}, {.5, .5}}} under one seed.
struct MotifNoDist {
  int n = 0;
  double p = 0.0;
  int ell = 0;
};

// Pairing model, retried until simple.
struct DRegular {
  int n = 0;
  int d = 0;
};

using ModelVariant = std::variant<Gnp, Sbm, PlantedClique, MotifNoDist, DRegular>;

struct ModelSpec {
  ModelVariant model;
  uint64_t seed = 0;
};

inline constexpr int kRegularAttempts = 1000;

absl::Status Validate(const ModelSpec& spec);
int ModelVertexCount(const ModelVariant& model);
// Planted-set size for the planted models, 0 otherwise.
int PlantedSize(const ModelVariant& model);
std::string ModelName(const ModelVariant& model);

absl::StatusOr<Graph> Sample(const ModelSpec& spec, Exec exec = Exec::kParallel);

// Adjacency evaluated pair by pair from the same coins as Sample(); rows are
// built on first degree or neighbor access. Not available for DRegular.
absl::StatusOr<std::unique_ptr<AdjacencySource>> SampleLazy(const ModelSpec& spec);

// Planted vertex set of a PlantedClique spec, ascending.
std::vector<Vertex> PlantedSet(const PlantedClique& model, uint64_t seed);

// Labeled copies: C(n,k) k! p^e (1-p)^(C(k,2)-e); the noninduced form drops
// the (1-p) factor.
double ExpectedCountGnp(const Motif& h, int64_t n, double p, bool induced = true);
absl::StatusOr<double> ExpectedCountSbm(const Motif& h, const std::vector<int>& sizes,
                                        const std::vector<std::vector<double>>& probs,
                                        bool induced = true);

// n (n-1) ... (n-k+1) as a double.
double FallingFactorial(int64_t n, int k);
double Binomial(int64_t n, int k);

}  // namespace motifqc

#endif  // MOTIFQC_MODELS_H_
