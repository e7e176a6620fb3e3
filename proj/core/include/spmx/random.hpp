#pragma once

#include <cstdint>
#include <random>

#include "spmx/sperm_matrix.hpp"

namespace spmx {

/// Seeded generator with platform-stable output: mt19937_64 is fully
/// specified by the standard, and bounded draws use rejection sampling
/// instead of implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform permutation of [0, n) (Fisher-Yates).
  Perm perm(int n);

 private:
  std::mt19937_64 engine_;
};

/// Uniform member of the S-permutation matrices for grid parameter n:
/// 2n independent uniform offset words, row words first.
SPermMatrix random_sperm(int n, Rng& rng);

}  // namespace spmx
