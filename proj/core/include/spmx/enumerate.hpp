#pragma once

#include <cstdint>
#include <iterator>

#include "spmx/sperm_matrix.hpp"

namespace spmx {

/// Number of n^2 x n^2 S-permutation matrices, (n!)^{2n}, as a u64. n <= 4.
std::uint64_t sigma_count_u64(int n);

/// The full set of S-permutation matrices for grid parameter n, as a random
/// access range in the deterministic order documented on
/// SPermMatrix::sigma_index. Enumeration is guarded: n <= 3 unless
/// force_large, n = 4 at most even then ((5!)^10 overflows the u64 index).
class SigmaRange {
 public:
  explicit SigmaRange(int n, bool force_large = false);

  int n() const { return n_; }
  std::uint64_t size() const { return size_; }

  /// Decodes the matrix at a given enumeration index.
  SPermMatrix at(std::uint64_t index) const;

  class iterator {
   public:
    using value_type = SPermMatrix;
    using difference_type = std::int64_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const SigmaRange* range, std::uint64_t index) : range_(range), index_(index) {}

    SPermMatrix operator*() const { return range_->at(index_); }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { iterator old = *this; ++index_; return old; }
    bool operator==(const iterator&) const = default;

    std::uint64_t index() const { return index_; }

   private:
    const SigmaRange* range_;
    std::uint64_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  int n_;
  std::uint64_t size_;
};

}  // namespace spmx
