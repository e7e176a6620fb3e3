#pragma once

#include <cstdint>
#include <vector>

#include "spmx/perm.hpp"

namespace spmx {

/// Packed n^4-bit row-major image of an n^2 x n^2 0/1 matrix.
class DenseBits {
 public:
  explicit DenseBits(int n);

  int n() const { return n_; }
  int dim() const { return n_ * n_; }  // side length of the dense matrix

  bool get(int row, int col) const;
  void set(int row, int col);
  void clear(int row, int col);

  int popcount() const;

  /// True when some cell holds a 1 in both matrices. Throws SizeMismatch.
  bool intersects(const DenseBits& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const DenseBits&) const = default;

 private:
  std::size_t bit_index(int row, int col) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Offset encoding of an n^2 x n^2 S-permutation matrix.
///
/// Block (k, l) carries its single 1 at offsets
///   row:    row_off(k)[l]   (within block-row band k)
///   column: col_off(l)[k]   (within block-column band l)
/// and the one-1-per-global-row/column constraints are equivalent to each
/// offset word being a permutation. All indices are 0-based.
class SPermMatrix {
 public:
  /// Validates sizes and the 2n permutation words; throws DomainError.
  SPermMatrix(int n, std::vector<Perm> row_off, std::vector<Perm> col_off);

  int n() const { return n_; }
  const Perm& row_off(int block_row) const { return row_off_[block_row]; }
  const Perm& col_off(int block_col) const { return col_off_[block_col]; }
  const std::vector<Perm>& row_offsets() const { return row_off_; }
  const std::vector<Perm>& col_offsets() const { return col_off_; }

  /// Rank of this matrix in the deterministic enumeration order:
  /// lexicographic over the concatenation (row_off[0..n), col_off[0..n)),
  /// each word ranked lexicographically in one-line notation. n <= 4.
  std::uint64_t sigma_index() const;

  bool operator==(const SPermMatrix&) const = default;

 private:
  int n_;
  std::vector<Perm> row_off_;
  std::vector<Perm> col_off_;
};

/// Theta images of the diagonal blocks of a CAD factor pair: c[k] for the
/// left factor block acting on block-row k, d[l] for the right factor block
/// acting on block-column l.
struct CadFactors {
  std::vector<Perm> c;
  std::vector<Perm> d;

  static CadFactors identity(int n);
  bool operator==(const CadFactors&) const = default;
};

/// Flattens the offset encoding to the dense 0/1 image.
DenseBits to_dense(const SPermMatrix& a);

/// Checks the three one-1-per-line families (rows, then columns, then
/// blocks) and recovers the offset encoding. Throws NotSPermutation naming
/// the first violated constraint.
SPermMatrix validate_sperm(const DenseBits& d);

/// The S-permutation matrix whose dense image is the triple product
/// C * dense(a) * D, where C and D are the block-diagonal permutation
/// matrices with blocks theta_inv(f.c[k]) and theta_inv(f.d[l]).
/// On offsets: row offsets of block-row k map through f.c[k]'s inverse,
/// column offsets of block-column l map through f.d[l].
SPermMatrix compose_cad(const SPermMatrix& a, const CadFactors& f);

}  // namespace spmx
