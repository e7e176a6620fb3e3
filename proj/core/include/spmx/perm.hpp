#pragma once

#include <cstdint>
#include <vector>

#include "spmx/errors.hpp"

namespace spmx {

/// Permutation of {0, ..., n-1} in one-line notation: images()[i] is the
/// image of i. Immutable after construction.
class Perm {
 public:
  Perm() = default;  // the empty permutation (n = 0)

  /// Validates that `images` is a bijection on [0, n); throws DomainError.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;

  /// Composition in application order: (f.then(g))(x) = g(f(x)).
  Perm then(const Perm& g) const;

  bool is_identity() const;
  bool is_derangement() const;
  int fixed_points() const;

  /// Rank of this permutation among all n! permutations of [0, n),
  /// ordered lexicographically by one-line notation. n <= 20.
  std::uint64_t lex_rank() const;
  static Perm from_lex_rank(int n, std::uint64_t rank);

  /// All permutations of [0, n) in lexicographic order. Guarded for n <= 10.
  static std::vector<Perm> all(int n);

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

/// Number of permutations of [0, n) as a plain integer. n <= 20.
std::uint64_t factorial_u64(int n);

/// Reads a 0/1 permutation matrix (given as rows) off to its permutation:
/// entry (i, j) = 1 exactly when the result maps i to j.
/// Throws NotPermutationMatrix when some row or column count differs from 1.
Perm theta(const std::vector<std::vector<int>>& matrix_rows);

/// Inverse direction: the n x n 0/1 matrix with a 1 at (i, p(i)) per row.
std::vector<std::vector<int>> theta_inv(const Perm& p);

}  // namespace spmx
