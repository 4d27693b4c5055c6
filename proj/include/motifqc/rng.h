// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_RNG_H_
#define MOTIFQC_RNG_H_

#include <array>
#include <cstdint>
#include <initializer_list>

namespace motifqc {

// Philox4x32-10 block function (Salmon et al., Random123).
std::array<uint32_t, 4> Philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key);

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Hash of a seed and a sequence of stream tags.
uint64_t DeriveSeed(uint64_t seed, std::initializer_list<uint64_t> parts);

// Uniform double in [0, 1) from a (key, index) pair; a pure function.
double CounterUniform(uint64_t key, uint64_t index, uint32_t lane = 0);

// Sequential stream over Philox blocks with counter = (position, stream).
// Integer and real draws are implemented here, not via <random>
// distributions, so results are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0);

  uint64_t Next();
  double Uniform();
  // Uniform integer in [0, bound), bound > 0.
  uint64_t Below(uint64_t bound);

 private:
  std::array<uint32_t, 2> key_;
  uint64_t stream_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buffer_{};
  int used_ = 4;
};

}  // namespace motifqc

#endif  // MOTIFQC_RNG_H_
