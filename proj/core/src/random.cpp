#include "spmx/random.hpp"

#include <numeric>
#include <utility>

namespace spmx {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

Perm Rng::perm(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
    std::swap(word[i], word[j]);
  }
  return Perm(std::move(word));
}

SPermMatrix random_sperm(int n, Rng& rng) {
  std::vector<Perm> row_off, col_off;
  row_off.reserve(n);
  col_off.reserve(n);
  for (int k = 0; k < n; ++k) row_off.push_back(rng.perm(n));
  for (int l = 0; l < n; ++l) col_off.push_back(rng.perm(n));
  return SPermMatrix(n, std::move(row_off), std::move(col_off));
}

}  // namespace spmx
