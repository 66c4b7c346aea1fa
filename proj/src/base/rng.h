// base/rng.h

// Copyright 2026  nsasv authors

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

#ifndef NSASV_BASE_RNG_H_
#define NSASV_BASE_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "base/hash.h"

namespace nsasv {

// Seeded random source.  The uniform and gaussian draws are implemented by
// hand (not with std:: distributions) so a given seed produces the same
// stream on every standard library; experiment reproducibility depends on it.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed), seed_base_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() {
    return (engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n).
  int64_t UniformInt(int64_t n) {
    return static_cast<int64_t>(Uniform() * static_cast<double>(n)) % n;
  }

  // Standard normal via Box-Muller; pairs are cached.
  double Gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = Uniform(), u2 = Uniform();
    while (u1 <= 0.0) u1 = Uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Child stream with a seed derived from this stream's seed and a label.
  // Forking with distinct labels gives independent reproducible streams.
  Rng Fork(const std::string& label) const {
    return Rng(HashCombine(seed_base_, Fnv1a64(label)));
  }

 private:
  std::mt19937_64 engine_;
  uint64_t seed_base_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Canonical fan-out from a master seed: every stage derives its own stream.
inline Rng MakeRng(uint64_t master_seed, const std::string& stream_name) {
  return Rng(HashCombine(master_seed, Fnv1a64(stream_name)));
}

}  // namespace nsasv

#endif  // NSASV_BASE_RNG_H_
