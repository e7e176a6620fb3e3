#pragma once

#include <optional>
#include <string>

#include "spmx/bigint.hpp"
#include "spmx/errors.hpp"

namespace spmx {

BigInt factorial(int n);

/// Count of permutations of [0, n) with exactly p fixed points,
/// e_p(n) = (n!/p!) * sum_{k=0}^{n-p} (-1)^k / k!, evaluated with integer
/// partial terms only. Throws DomainError unless 0 <= p <= n.
BigInt rencontres(int n, int p);

/// Count of fixed-point-free permutations of [0, n); equals rencontres(n, 0).
BigInt derangements(int n);

/// (n!)^{2n}: the number of n^2 x n^2 S-permutation matrices.
BigInt sigma_cardinality(int n);

/// The closed-form basic-case count (2 * n! * d_n - d_n^2)^n.
BigInt nu(int n);

/// Closed-form lower-bound layer: xi_lower = nu, eta_lower = sigma * nu / 2,
/// p_lower = nu / (sigma - 1) (0/1 for the degenerate n = 1).
BigInt xi_lower(int n);
BigInt eta_lower(int n);
Rational p_lower(int n);

/// sigma_n = (n^2)! * mu(n,n), the count of Sudoku matrices obtainable from
/// a complete-family count by ordering the members.
BigInt sigma_from_mu(int n, const BigInt& mu_nn);

enum class Provenance { formula, paper_constant, oracle };
std::string provenance_label(Provenance p);

struct ExactCounts {
  BigInt xi;
  BigInt r;         // xi - nu; may be negative when the formula overshoots
  BigInt eta;
  Rational p;
  Provenance source = Provenance::paper_constant;
};

struct CountReport {
  int n = 0;
  BigInt sigma_count;
  BigInt nu;
  BigInt xi_lower;
  BigInt eta_lower;
  Rational p_lower;
  std::optional<ExactCounts> exact;
};

/// Published reference values for n in {2, 3}; nullopt otherwise.
std::optional<ExactCounts> published_exact(int n);

/// Published Sudoku-matrix count sigma_n and complete-family count mu(n,n)
/// for n in {2, 3}. Throws Unsupported otherwise.
BigInt published_sigma(int n);
BigInt published_mu(int n);

/// Lower-bound formulas only.
CountReport formulas_report(int n);

enum class ExactSource { paper_constants, oracle };

/// Lower bounds plus exact values: either the published constants
/// (n in {2, 3}, throws Unsupported otherwise) or the exhaustive oracle
/// (n <= 3, throws TooLarge otherwise).
CountReport exact_report(int n, ExactSource source, int workers = 1);

}  // namespace spmx
