// Copyright 2026 The mumw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MUMW_RANDOM_H
#define MUMW_RANDOM_H

#include <cstdint>
#include <random>

#include "mumw/numerics.h"

namespace mumw {

/// Seeded generator with a platform-independent output stream.
///
/// std::mt19937_64 is bit-exact across standard libraries; the distribution
/// objects of <random> are not, so uniform and normal variates are derived
/// here directly from the raw 64-bit words.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// An independent stream for sample `index` under `seed`. Results depend
  /// only on (seed, index), never on how samples are split across workers.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random unit vector in C^d (normalized complex Gaussian).
ComplexVector haar_vector(Index d, Rng& rng);

/// d x d matrix of i.i.d. standard complex Gaussians.
ComplexMatrix complex_gaussian(Index rows, Index cols, Rng& rng);

}  // namespace mumw

#endif  // MUMW_RANDOM_H
