#include "spmx/sperm_matrix.hpp"

#include <bit>
#include <string>

namespace spmx {

DenseBits::DenseBits(int n) : n_(n) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  const std::size_t bits = static_cast<std::size_t>(n) * n * n * n;
  words_.assign((bits + 63) / 64, 0);
}

std::size_t DenseBits::bit_index(int row, int col) const {
  return static_cast<std::size_t>(row) * dim() + static_cast<std::size_t>(col);
}

bool DenseBits::get(int row, int col) const {
  const std::size_t b = bit_index(row, col);
  return (words_[b >> 6] >> (b & 63)) & 1u;
}

void DenseBits::set(int row, int col) {
  const std::size_t b = bit_index(row, col);
  words_[b >> 6] |= std::uint64_t{1} << (b & 63);
}

void DenseBits::clear(int row, int col) {
  const std::size_t b = bit_index(row, col);
  words_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
}

int DenseBits::popcount() const {
  int count = 0;
  for (const auto w : words_) count += std::popcount(w);
  return count;
}

bool DenseBits::intersects(const DenseBits& other) const {
  if (n_ != other.n_) throw SizeMismatch("dense images have different grid parameters");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

SPermMatrix::SPermMatrix(int n, std::vector<Perm> row_off, std::vector<Perm> col_off)
    : n_(n), row_off_(std::move(row_off)), col_off_(std::move(col_off)) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  if (static_cast<int>(row_off_.size()) != n || static_cast<int>(col_off_.size()) != n)
    throw DomainError("expected n row-offset and n column-offset words");
  for (const auto& p : row_off_)
    if (p.size() != n) throw DomainError("row-offset word has wrong size");
  for (const auto& p : col_off_)
    if (p.size() != n) throw DomainError("column-offset word has wrong size");
}

std::uint64_t SPermMatrix::sigma_index() const {
  if (n_ > 4) throw TooLarge("sigma_index overflows 64 bits for n > 4");
  const std::uint64_t base = factorial_u64(n_);
  std::uint64_t index = 0;
  for (const auto& p : row_off_) index = index * base + p.lex_rank();
  for (const auto& p : col_off_) index = index * base + p.lex_rank();
  return index;
}

CadFactors CadFactors::identity(int n) {
  return CadFactors{std::vector<Perm>(n, Perm::identity(n)),
                    std::vector<Perm>(n, Perm::identity(n))};
}

DenseBits to_dense(const SPermMatrix& a) {
  const int n = a.n();
  DenseBits d(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      d.set(k * n + a.row_off(k)[l], l * n + a.col_off(l)[k]);
  return d;
}

SPermMatrix validate_sperm(const DenseBits& d) {
  const int n = d.n();
  const int dim = d.dim();

  for (int r = 0; r < dim; ++r) {
    int count = 0;
    for (int c = 0; c < dim; ++c) count += d.get(r, c);
    if (count != 1)
      throw NotSPermutation("row " + std::to_string(r) + " has " +
                            std::to_string(count) + " ones");
  }
  for (int c = 0; c < dim; ++c) {
    int count = 0;
    for (int r = 0; r < dim; ++r) count += d.get(r, c);
    if (count != 1)
      throw NotSPermutation("column " + std::to_string(c) + " has " +
                            std::to_string(count) + " ones");
  }

  // With rows and columns clean, record the 1-position per block.
  std::vector<std::vector<int>> row_words(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> col_words(n, std::vector<int>(n, -1));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      int count = 0;
      int row_offset = -1, col_offset = -1;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if (d.get(k * n + r, l * n + c)) {
            ++count;
            row_offset = r;
            col_offset = c;
          }
        }
      }
      if (count != 1)
        throw NotSPermutation("block (" + std::to_string(k) + ", " + std::to_string(l) +
                              ") has " + std::to_string(count) + " ones");
      row_words[k][l] = row_offset;
      col_words[l][k] = col_offset;
    }
  }

  std::vector<Perm> row_off, col_off;
  row_off.reserve(n);
  col_off.reserve(n);
  for (int k = 0; k < n; ++k) row_off.emplace_back(std::move(row_words[k]));
  for (int l = 0; l < n; ++l) col_off.emplace_back(std::move(col_words[l]));
  return SPermMatrix(n, std::move(row_off), std::move(col_off));
}

SPermMatrix compose_cad(const SPermMatrix& a, const CadFactors& f) {
  const int n = a.n();
  if (static_cast<int>(f.c.size()) != n || static_cast<int>(f.d.size()) != n)
    throw SizeMismatch("factor tuple does not match the matrix grid parameter");
  for (const auto& p : f.c)
    if (p.size() != n) throw SizeMismatch("left factor word has wrong size");
  for (const auto& p : f.d)
    if (p.size() != n) throw SizeMismatch("right factor word has wrong size");

  // Left block C_k sends the 1 of block (k, l) from row r to row
  // theta(C_k)^{-1}(r); right block D_l sends column c to theta(D_l)(c).
  // Pinned against the dense triple product C * dense(a) * D in tests.
  std::vector<Perm> row_off, col_off;
  row_off.reserve(n);
  col_off.reserve(n);
  for (int k = 0; k < n; ++k) {
    const Perm inv = f.c[k].inverse();
    std::vector<int> word(n);
    for (int l = 0; l < n; ++l) word[l] = inv[a.row_off(k)[l]];
    row_off.emplace_back(std::move(word));
  }
  for (int l = 0; l < n; ++l) {
    std::vector<int> word(n);
    for (int k = 0; k < n; ++k) word[k] = f.d[l][a.col_off(l)[k]];
    col_off.emplace_back(std::move(word));
  }
  return SPermMatrix(n, std::move(row_off), std::move(col_off));
}

}  // namespace spmx
