#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spmx/bigint.hpp"
#include "spmx/enumerate.hpp"
#include "spmx/random.hpp"
#include "spmx/sperm_matrix.hpp"

namespace spmx {

/// True iff no cell holds a 1 in both matrices, decided on the offset
/// encodings. Agrees with DenseBits::intersects (tested). Throws
/// SizeMismatch on different grid parameters.
bool is_disjoint(const SPermMatrix& a, const SPermMatrix& b);

/// Exact number of S-permutation matrices disjoint with `a`, by full
/// enumeration. Guarded: n <= 3.
BigInt xi_exact(const SPermMatrix& a);

struct XiInvariance {
  bool constant = false;
  BigInt value;            // the common count when constant
  std::uint64_t min_value = 0;
  std::uint64_t max_value = 0;
};

/// Computes xi_exact for every member of the enumeration and reports
/// whether all values agree. n <= 3 (the n = 3 sweep is ~2.18e9 pair
/// tests; shard it across workers).
XiInvariance xi_invariance_check(int n, int workers = 1);

/// Number of unordered disjoint pairs, by exhaustive sweep. n <= 3.
BigInt eta_exact(int n, int workers = 1);

/// xi_exact - nu(n), after checking xi is matrix-independent. The
/// closed-form count can overshoot, so the result may be negative. n <= 3.
/// Throws InvarianceViolated when xi is not constant.
BigInt residual_exact(int n, int workers = 1);

/// Derangement pattern of a factor tuple: bit k of c_pattern is set when
/// f.c[k] is a derangement, and likewise d_pattern for f.d[l].
struct PatternClass {
  int n = 0;
  std::uint32_t c_pattern = 0;
  std::uint32_t d_pattern = 0;

  /// All left words derangements, or all right words derangements.
  bool basic() const {
    const std::uint32_t full = (1u << n) - 1;
    return c_pattern == full || d_pattern == full;
  }
  bool operator==(const PatternClass&) const = default;
};

struct ClassTally {
  PatternClass cls;
  BigInt total_pairs;
  BigInt disjoint_pairs;
};

/// Iterates every factor tuple f, forms b = compose_cad(a, f), and tallies
/// disjointness of (a, b) per derangement pattern. Tuples are counted by
/// the pattern of the words as given (inversion preserves derangements).
/// Returns all 2^n x 2^n classes ordered by (c_pattern, d_pattern). n <= 3.
std::vector<ClassTally> cad_classify(const SPermMatrix& a, int workers = 1);

/// Sum of disjoint_pairs over basic (resp. non-basic) classes.
BigInt basic_disjoint_total(const std::vector<ClassTally>& tallies);
BigInt nonbasic_disjoint_total(const std::vector<ClassTally>& tallies);

/// True iff f -> compose_cad(a, f) hits (n!)^{2n} pairwise distinct
/// matrices when f runs over all factor tuples. n <= 3.
bool cad_bijection_check(const SPermMatrix& a);

/// Sampling estimate of the disjointness probability for one fixed matrix,
/// for sizes beyond the exhaustive guard: draws uniform partners and
/// reports the hit fraction with its standard error.
struct SampledDisjointness {
  std::uint64_t draws = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
};
SampledDisjointness sample_disjointness(const SPermMatrix& a, std::uint64_t draws,
                                        std::uint64_t seed);

/// One verification check: a named quantity, the expected value when one
/// is pinned, what the computation produced, and whether they agree.
struct VerifyCheck {
  std::string name;
  int n = 0;
  std::optional<std::string> expected;
  std::string actual;
  bool pass = false;
  std::int64_t elapsed_ms = 0;
};

struct VerifyReport {
  int n = 0;
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

/// The full oracle suite for one grid parameter: enumeration counts,
/// kernel agreement, xi invariance, eta, residual, classification,
/// bijection, probability, and (n = 2) the census — each compared against
/// the closed forms and the published constants where those exist.
/// For n <= 3 everything is exhaustive; n = 4 with force_large runs the
/// documented sampling mode instead. Throws TooLarge otherwise.
VerifyReport run_verification(int n, int workers = 1, bool force_large = false);

}  // namespace spmx
