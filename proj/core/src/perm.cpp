#include "spmx/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spmx {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = images_[i];
    if (v < 0 || v >= n || seen[v]) {
      throw DomainError("one-line word is not a bijection on [0, " +
                        std::to_string(n) + ")");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.images_ = std::move(v);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm Perm::then(const Perm& g) const {
  if (g.size() != size()) throw SizeMismatch("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[i] = g.images_[images_[i]];
  Perm p;
  p.images_ = std::move(out);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::is_derangement() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] == i) return false;
  return true;
}

int Perm::fixed_points() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += images_[i] == i;
  return count;
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial_u64 expects 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t Perm::lex_rank() const {
  // Lehmer code evaluated in the factorial number system.
  const int n = size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_to_right = 0;
    for (int j = i + 1; j < n; ++j) smaller_to_right += images_[j] < images_[i];
    rank += static_cast<std::uint64_t>(smaller_to_right) * factorial_u64(n - 1 - i);
  }
  return rank;
}

Perm Perm::from_lex_rank(int n, std::uint64_t rank) {
  if (rank >= factorial_u64(n)) throw DomainError("lex rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial_u64(i);
    const auto digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  Perm p;
  p.images_ = std::move(out);
  return p;
}

std::vector<Perm> Perm::all(int n) {
  if (n < 0 || n > 10) throw TooLarge("refusing to materialize S_n for n > 10");
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 0);
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(factorial_u64(n)));
  do {
    Perm p;
    p.images_ = word;
    out.push_back(std::move(p));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Perm theta(const std::vector<std::vector<int>>& matrix_rows) {
  const int n = static_cast<int>(matrix_rows.size());
  std::vector<int> images(n, -1);
  std::vector<int> column_count(n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix_rows[i].size()) != n)
      throw NotPermutationMatrix("matrix is not square");
    int row_count = 0;
    for (int j = 0; j < n; ++j) {
      const int v = matrix_rows[i][j];
      if (v != 0 && v != 1) throw NotPermutationMatrix("entries must be 0 or 1");
      if (v == 1) {
        ++row_count;
        ++column_count[j];
        images[i] = j;
      }
    }
    if (row_count != 1)
      throw NotPermutationMatrix("row " + std::to_string(i) + " has " +
                                 std::to_string(row_count) + " ones");
  }
  for (int j = 0; j < n; ++j) {
    if (column_count[j] != 1)
      throw NotPermutationMatrix("column " + std::to_string(j) + " has " +
                                 std::to_string(column_count[j]) + " ones");
  }
  return Perm(std::move(images));
}

std::vector<std::vector<int>> theta_inv(const Perm& p) {
  const int n = p.size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rows[i][p(i)] = 1;
  return rows;
}

}  // namespace spmx
