#include "spmx/enumerate.hpp"

#include <string>

namespace spmx {

std::uint64_t sigma_count_u64(int n) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  if (n > 4) throw TooLarge("(n!)^{2n} overflows 64 bits for n > 4");
  const std::uint64_t f = factorial_u64(n);
  std::uint64_t out = 1;
  for (int i = 0; i < 2 * n; ++i) out *= f;
  return out;
}

SigmaRange::SigmaRange(int n, bool force_large) : n_(n) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  if (n > 4)
    throw TooLarge("enumeration is not supported for n > 4 ((n!)^{2n} exceeds the u64 index)");
  if (n > 3 && !force_large)
    throw TooLarge("enumerating (4!)^8 = 110075314176 matrices requires force_large");
  size_ = sigma_count_u64(n);
}

SPermMatrix SigmaRange::at(std::uint64_t index) const {
  if (index >= size_) throw DomainError("enumeration index out of range");
  const std::uint64_t base = factorial_u64(n_);
  // Digits most-significant first: row_off[0], ..., row_off[n-1],
  // col_off[0], ..., col_off[n-1].
  std::vector<std::uint64_t> digits(2 * static_cast<std::size_t>(n_));
  for (int slot = 2 * n_ - 1; slot >= 0; --slot) {
    digits[slot] = index % base;
    index /= base;
  }
  std::vector<Perm> row_off, col_off;
  row_off.reserve(n_);
  col_off.reserve(n_);
  for (int k = 0; k < n_; ++k) row_off.push_back(Perm::from_lex_rank(n_, digits[k]));
  for (int l = 0; l < n_; ++l) col_off.push_back(Perm::from_lex_rank(n_, digits[n_ + l]));
  return SPermMatrix(n_, std::move(row_off), std::move(col_off));
}

}  // namespace spmx
