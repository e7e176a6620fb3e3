#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spmx/bigint.hpp"
#include "spmx/sperm_matrix.hpp"

namespace spmx {

/// Mutually disjoint S-permutation matrices; order is meaningful (member v
/// carries value v+1 in the assembled table). k = n^2 members make the
/// family complete.
struct DisjointFamily {
  int n = 0;
  std::vector<SPermMatrix> members;

  int k() const { return static_cast<int>(members.size()); }
  bool complete() const { return k() == n * n; }
  bool operator==(const DisjointFamily&) const = default;
};

/// Validates pairwise disjointness; throws NotDisjoint with the offending
/// pair, DomainError on size problems (1 <= k <= n^2).
DisjointFamily make_family(int n, std::vector<SPermMatrix> members);

/// n^2 x n^2 table over [1, n^2].
struct SudokuMatrix {
  int n = 0;
  std::vector<int> cells;  // row-major, dim = n^2

  int dim() const { return n * n; }
  int at(int row, int col) const { return cells[static_cast<std::size_t>(row) * dim() + col]; }
  bool operator==(const SudokuMatrix&) const = default;
};

/// True iff every row, column and block is a permutation of [1, n^2].
bool is_sudoku(const SudokuMatrix& m);

/// Raw-table variant; throws ShapeError unless the table is n^2 x n^2 for
/// some n >= 1.
bool is_sudoku(const std::vector<std::vector<int>>& table);

/// Weighted sum over a complete family: cell (i, j) takes value v+1 where
/// member v holds the 1. Throws IncompleteFamily for k != n^2.
SudokuMatrix assemble(const DisjointFamily& family);

/// Splits a valid table into the per-value indicator matrices (each an
/// S-permutation matrix); inverse of assemble. Throws NotSudoku.
DisjointFamily decompose(const SudokuMatrix& m);

struct SearchParams {
  std::uint64_t budget = 1'000'000;  // total candidate draws
  int stall_threshold = 400;         // consecutive rejects before backtracking
};

struct SearchResult {
  std::optional<DisjointFamily> family;
  std::uint64_t draws = 0;
  std::uint64_t accepts = 0;
  std::uint64_t backtracks = 0;

  bool exhausted() const { return !family.has_value(); }
};

/// Randomized greedy family search with stall-triggered backtracking:
/// draw uniform candidates, accept those disjoint from every member, pop
/// the most recent member after stall_threshold consecutive rejects.
/// Deterministic for a fixed seed. 1 <= k <= n^2.
SearchResult find_family(int n, int k, std::uint64_t seed, SearchParams params = {});

struct CensusN2 {
  BigInt families;        // unordered complete disjoint 4-subsets
  BigInt sudoku_count;    // distinct assembled tables over all member orders
  BigInt disjoint_pairs;  // unordered disjoint 2-subsets
};

/// Exhaustive n = 2 census over the 16-matrix universe.
CensusN2 census_n2();

struct RateExperiment {
  int runs = 0;
  int successes = 0;
  int distinct_families = 0;  // up to member-set equality
  std::uint64_t per_run_budget = 0;
};

/// Repeats find_family(n, n^2) with per-run seeds seed + run_index and a
/// fixed per-run budget; reports the observed success count and the number
/// of distinct families. Runs are independent, so workers only affect wall
/// time.
RateExperiment family_rate_experiment(int n, int runs, std::uint64_t seed,
                                      SearchParams per_run = {}, int workers = 1);

}  // namespace spmx
