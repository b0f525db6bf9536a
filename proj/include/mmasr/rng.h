// mmasr/rng.h

// Copyright 2026   MMASR Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef MMASR_RNG_H_
#define MMASR_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace mmasr {

// Deterministic RNG wrapper. All distributions are hand-rolled from the
// mt19937_64 bit stream so that sequences are identical across standard
// library implementations, not just across runs of the same binary.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n). n must be > 0.
  int64_t UniformInt(int64_t n);

  // Standard normal via Box-Muller (the second draw is cached).
  double Normal();

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// Derives a purpose-specific seed from a base seed and a label, so that one
// user-facing --seed can fan out into independent streams (FNV-1a over the
// label mixed with the base seed).
uint64_t DeriveSeed(uint64_t base, std::string_view purpose);

}  // namespace mmasr

#endif  // MMASR_RNG_H_
