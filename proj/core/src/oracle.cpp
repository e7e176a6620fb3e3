#include "spmx/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>

#include "spmx/counting.hpp"
#include "spmx/parallel.hpp"
#include "spmx/sudoku.hpp"

namespace spmx {

bool is_disjoint(const SPermMatrix& a, const SPermMatrix& b) {
  const int n = a.n();
  if (n != b.n()) throw SizeMismatch("matrices have different grid parameters");
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (a.row_off(k)[l] == b.row_off(k)[l] && a.col_off(l)[k] == b.col_off(l)[k])
        return false;
  return true;
}

namespace {

constexpr int kExhaustiveLimit = 3;

std::size_t words_per_matrix(int n) {
  return (static_cast<std::size_t>(n) * n * n * n + 63) / 64;
}

// Dense images of the whole enumeration, flattened with a fixed stride.
std::vector<std::uint64_t> dense_cache(int n) {
  SigmaRange range(n);
  const std::size_t stride = words_per_matrix(n);
  std::vector<std::uint64_t> cache(range.size() * stride);
  for (std::uint64_t i = 0; i < range.size(); ++i) {
    const DenseBits d = to_dense(range.at(i));
    std::copy(d.words().begin(), d.words().end(), cache.begin() + i * stride);
  }
  return cache;
}

template <int W>
void xi_rows(const std::uint64_t* cache, std::uint64_t count, std::uint64_t begin,
             std::uint64_t end, std::uint32_t* out) {
  for (std::uint64_t i = begin; i < end; ++i) {
    const std::uint64_t* a = cache + i * W;
    std::uint32_t hits = 0;
    for (std::uint64_t j = 0; j < count; ++j) {
      const std::uint64_t* b = cache + j * W;
      std::uint64_t overlap = 0;
      for (int w = 0; w < W; ++w) overlap |= a[w] & b[w];
      hits += overlap == 0;
    }
    out[i] = hits;
  }
}

// Per-matrix disjoint-partner counts over the full enumeration.
std::vector<std::uint32_t> sweep_counts(int n, int workers) {
  if (n > kExhaustiveLimit)
    throw TooLarge("exhaustive sweep is guarded at n <= 3; use sampling instead");
  const auto cache = dense_cache(n);
  const std::size_t stride = words_per_matrix(n);
  const std::uint64_t count = cache.size() / stride;
  std::vector<std::uint32_t> out(count, 0);
  parallel_shards(count, workers, [&](int, std::uint64_t begin, std::uint64_t end) {
    if (stride == 1)
      xi_rows<1>(cache.data(), count, begin, end, out.data());
    else
      xi_rows<2>(cache.data(), count, begin, end, out.data());
  });
  return out;
}

std::uint64_t tuple_count(int n) { return sigma_count_u64(n); }

// Factor tuple at a given rank: digits most-significant first,
// c[0..n) then d[0..n), each digit a lexicographic permutation rank.
CadFactors tuple_at(int n, std::uint64_t index, const std::vector<Perm>& perms) {
  const std::uint64_t base = perms.size();
  std::vector<std::uint64_t> digits(2 * static_cast<std::size_t>(n));
  for (int slot = 2 * n - 1; slot >= 0; --slot) {
    digits[slot] = index % base;
    index /= base;
  }
  CadFactors f;
  f.c.reserve(n);
  f.d.reserve(n);
  for (int k = 0; k < n; ++k) f.c.push_back(perms[digits[k]]);
  for (int l = 0; l < n; ++l) f.d.push_back(perms[digits[n + l]]);
  return f;
}

}  // namespace

BigInt xi_exact(const SPermMatrix& a) {
  const int n = a.n();
  if (n > kExhaustiveLimit) throw TooLarge("xi_exact is guarded at n <= 3");
  const auto cache = dense_cache(n);
  const std::size_t stride = words_per_matrix(n);
  const std::uint64_t count = cache.size() / stride;
  const DenseBits mine = to_dense(a);
  std::uint64_t hits = 0;
  for (std::uint64_t j = 0; j < count; ++j) {
    std::uint64_t overlap = 0;
    for (std::size_t w = 0; w < stride; ++w) overlap |= mine.words()[w] & cache[j * stride + w];
    hits += overlap == 0;
  }
  return BigInt(hits);
}

XiInvariance xi_invariance_check(int n, int workers) {
  const auto counts = sweep_counts(n, workers);
  XiInvariance result;
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  result.min_value = *lo;
  result.max_value = *hi;
  result.constant = *lo == *hi;
  result.value = BigInt(*lo);
  return result;
}

BigInt eta_exact(int n, int workers) {
  const auto counts = sweep_counts(n, workers);
  std::uint64_t total = 0;
  for (const auto c : counts) total += c;
  // Every disjoint pair is seen once per orientation; the diagonal never hits.
  return BigInt(total / 2);
}

BigInt residual_exact(int n, int workers) {
  const auto sweep = xi_invariance_check(n, workers);
  if (!sweep.constant)
    throw InvarianceViolated("xi differs across matrices (min " +
                             std::to_string(sweep.min_value) + ", max " +
                             std::to_string(sweep.max_value) + ")");
  return sweep.value - nu(n);
}

std::vector<ClassTally> cad_classify(const SPermMatrix& a, int workers) {
  const int n = a.n();
  if (n > kExhaustiveLimit) throw TooLarge("cad_classify is guarded at n <= 3");
  const auto perms = Perm::all(n);
  std::vector<bool> derangement(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) derangement[i] = perms[i].is_derangement();

  const std::uint64_t tuples = tuple_count(n);
  const std::size_t classes = std::size_t{1} << (2 * n);
  const int shard_count = std::max(1, workers);
  std::vector<std::vector<std::uint64_t>> totals(shard_count,
                                                 std::vector<std::uint64_t>(classes, 0));
  std::vector<std::vector<std::uint64_t>> disjoint(shard_count,
                                                   std::vector<std::uint64_t>(classes, 0));

  parallel_shards(tuples, shard_count, [&](int shard, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      const CadFactors f = tuple_at(n, t, perms);
      std::uint32_t c_pattern = 0, d_pattern = 0;
      for (int k = 0; k < n; ++k)
        if (f.c[k].is_derangement()) c_pattern |= 1u << k;
      for (int l = 0; l < n; ++l)
        if (f.d[l].is_derangement()) d_pattern |= 1u << l;
      const std::size_t cls = (static_cast<std::size_t>(c_pattern) << n) | d_pattern;
      totals[shard][cls] += 1;
      if (is_disjoint(a, compose_cad(a, f))) disjoint[shard][cls] += 1;
    }
  });

  std::vector<ClassTally> out;
  out.reserve(classes);
  for (std::uint32_t c = 0; c < (1u << n); ++c) {
    for (std::uint32_t d = 0; d < (1u << n); ++d) {
      const std::size_t cls = (static_cast<std::size_t>(c) << n) | d;
      std::uint64_t t = 0, dj = 0;
      for (int s = 0; s < shard_count; ++s) {
        t += totals[s][cls];
        dj += disjoint[s][cls];
      }
      out.push_back(ClassTally{PatternClass{n, c, d}, BigInt(t), BigInt(dj)});
    }
  }
  return out;
}

BigInt basic_disjoint_total(const std::vector<ClassTally>& tallies) {
  BigInt total = 0;
  for (const auto& t : tallies)
    if (t.cls.basic()) total += t.disjoint_pairs;
  return total;
}

BigInt nonbasic_disjoint_total(const std::vector<ClassTally>& tallies) {
  BigInt total = 0;
  for (const auto& t : tallies)
    if (!t.cls.basic()) total += t.disjoint_pairs;
  return total;
}

bool cad_bijection_check(const SPermMatrix& a) {
  const int n = a.n();
  if (n > kExhaustiveLimit) throw TooLarge("cad_bijection_check is guarded at n <= 3");
  const auto perms = Perm::all(n);
  const std::uint64_t tuples = tuple_count(n);
  std::vector<char> seen(tuples, 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    const SPermMatrix b = compose_cad(a, tuple_at(n, t, perms));
    const std::uint64_t index = b.sigma_index();
    if (seen[index]) return false;
    seen[index] = 1;
  }
  return true;
}

SampledDisjointness sample_disjointness(const SPermMatrix& a, std::uint64_t draws,
                                        std::uint64_t seed) {
  Rng rng(seed);
  SampledDisjointness result;
  result.draws = draws;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const SPermMatrix b = random_sperm(a.n(), rng);
    if (is_disjoint(a, b)) ++result.hits;
  }
  if (draws > 0) {
    const double p = static_cast<double>(result.hits) / static_cast<double>(draws);
    result.estimate = p;
    result.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
  }
  return result;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class CheckRecorder {
 public:
  explicit CheckRecorder(VerifyReport& report) : report_(report) {}

  void add(std::string name, std::optional<std::string> expected, std::string actual,
           bool pass) {
    const auto now = Clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - mark_).count();
    mark_ = now;
    report_.checks.push_back(VerifyCheck{std::move(name), report_.n, std::move(expected),
                                         std::move(actual), pass, ms});
  }

 private:
  VerifyReport& report_;
  Clock::time_point mark_ = Clock::now();
};

std::string str(const BigInt& v) { return v.str(); }

std::string str(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

std::string format_estimate(const SampledDisjointness& s) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.6f +- %.6f (hits %llu / draws %llu)", s.estimate,
                s.standard_error, static_cast<unsigned long long>(s.hits),
                static_cast<unsigned long long>(s.draws));
  return buf;
}

void verify_exhaustive(VerifyReport& report, int n, int workers) {
  CheckRecorder rec(report);
  const auto published = published_exact(n);

  // Enumeration: exact count and distinctness of the stream.
  {
    SigmaRange range(n);
    std::uint64_t streamed = 0;
    std::vector<char> seen(range.size(), 0);
    bool duplicates = false;
    for (auto it = range.begin(); it != range.end(); ++it) {
      const SPermMatrix m = *it;
      ++streamed;
      const std::uint64_t index = m.sigma_index();
      if (seen[index]) duplicates = true;
      seen[index] = 1;
      if (index != it.index()) duplicates = true;  // order must match the documented rank
    }
    rec.add("enumeration_count", str(sigma_cardinality(n)), std::to_string(streamed),
            BigInt(streamed) == sigma_cardinality(n));
    rec.add("enumeration_distinct", "no duplicates", duplicates ? "duplicates" : "no duplicates",
            !duplicates);
  }

  // Offset kernel vs dense kernel.
  {
    std::uint64_t pairs = 0, disagreements = 0;
    if (n <= 2) {
      SigmaRange range(n);
      std::vector<SPermMatrix> all;
      std::vector<DenseBits> dense;
      for (const auto& m : range) {
        all.push_back(m);
        dense.push_back(to_dense(all.back()));
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          ++pairs;
          if (is_disjoint(all[i], all[j]) != !dense[i].intersects(dense[j])) ++disagreements;
        }
    } else {
      Rng rng(0x5EED0001);
      for (int i = 0; i < 100000; ++i) {
        const SPermMatrix a = random_sperm(n, rng);
        const SPermMatrix b = random_sperm(n, rng);
        ++pairs;
        if (is_disjoint(a, b) != !to_dense(a).intersects(to_dense(b))) ++disagreements;
      }
    }
    rec.add("kernel_agreement", "0 disagreements",
            std::to_string(disagreements) + " disagreements in " + std::to_string(pairs) + " pairs",
            disagreements == 0);
  }

  // The full pairwise sweep: invariance, xi, eta, residual.
  const XiInvariance sweep = xi_invariance_check(n, workers);
  rec.add("xi_invariant", "constant",
          sweep.constant ? "constant"
                         : "varies in [" + std::to_string(sweep.min_value) + ", " +
                               std::to_string(sweep.max_value) + "]",
          sweep.constant);
  if (published)
    rec.add("xi_vs_published", str(published->xi), str(sweep.value),
            sweep.value == published->xi);

  const BigInt eta = eta_exact(n, workers);
  if (published)
    rec.add("eta_vs_published", str(published->eta), str(eta), eta == published->eta);
  rec.add("eta_halving_identity", str(sigma_cardinality(n) * sweep.value / 2), str(eta),
          eta * 2 == sigma_cardinality(n) * sweep.value);

  const BigInt residual = sweep.value - nu(n);
  if (published)
    rec.add("residual_vs_published", str(published->r), str(residual),
            residual == published->r);
  rec.add("residual_nonnegative", ">= 0", str(residual), residual >= 0);

  // Derangement-pattern classification against the closed form.
  const SPermMatrix base = SigmaRange(n).at(0);
  const auto tallies = cad_classify(base, workers);
  {
    BigInt total = 0, disjoint_total = 0;
    bool bounded = true, basic_all = true;
    for (const auto& t : tallies) {
      total += t.total_pairs;
      disjoint_total += t.disjoint_pairs;
      if (t.disjoint_pairs > t.total_pairs) bounded = false;
      if (t.cls.basic() && t.disjoint_pairs != t.total_pairs) basic_all = false;
    }
    rec.add("class_conservation",
            "totals " + str(sigma_cardinality(n)) + ", disjoint " + str(sweep.value),
            "totals " + str(total) + ", disjoint " + str(disjoint_total),
            bounded && total == sigma_cardinality(n) && disjoint_total == sweep.value);
    rec.add("basic_tally_vs_nu", str(nu(n)), str(basic_disjoint_total(tallies)),
            basic_disjoint_total(tallies) == nu(n));
    rec.add("basic_all_disjoint", "every basic tuple disjoint",
            basic_all ? "every basic tuple disjoint" : "basic tuple with overlap", basic_all);
  }
  {
    Rng rng(0xC1A551F1);
    bool stable = true;
    for (int i = 0; i < 5; ++i) {
      const auto other = cad_classify(random_sperm(n, rng), workers);
      for (std::size_t c = 0; c < tallies.size(); ++c)
        if (other[c].total_pairs != tallies[c].total_pairs ||
            other[c].disjoint_pairs != tallies[c].disjoint_pairs)
          stable = false;
    }
    rec.add("class_invariance", "identical tallies for 5 random matrices",
            stable ? "identical" : "tallies differ", stable);
  }

  // Factor-tuple bijection.
  {
    bool ok = true;
    std::uint64_t checked = 0;
    if (n <= 2) {
      for (const auto& a : SigmaRange(n)) {
        ok = ok && cad_bijection_check(a);
        ++checked;
      }
    } else {
      Rng rng(0xB1JEC7 & 0xFFFFFF);
      for (int i = 0; i < 5; ++i) {
        ok = ok && cad_bijection_check(random_sperm(n, rng));
        ++checked;
      }
    }
    rec.add("cad_bijection", "all images distinct",
            std::string(ok ? "all images distinct" : "collision") + " (" +
                std::to_string(checked) + " base matrices)",
            ok);
  }

  // Disjointness probability.
  if (n >= 2) {
    const Rational p = Rational(sweep.value, sigma_cardinality(n) - 1);
    if (published) rec.add("p_vs_published", str(published->p), str(p), p == published->p);
  }

  // Census at n = 2.
  if (n == 2) {
    const CensusN2 census = census_n2();
    rec.add("census_families", str(published_mu(2)), str(census.families),
            census.families == published_mu(2));
    rec.add("census_sudoku_count", str(published_sigma(2)), str(census.sudoku_count),
            census.sudoku_count == published_sigma(2));
    rec.add("census_pairs_vs_eta", str(eta), str(census.disjoint_pairs),
            census.disjoint_pairs == eta);
    if (published)
      rec.add("census_pairs_vs_published", str(published->eta), str(census.disjoint_pairs),
              census.disjoint_pairs == published->eta);
  }
}

void verify_sampled(VerifyReport& report, int n) {
  CheckRecorder rec(report);
  constexpr std::uint64_t kSamples = 10000;

  {
    Rng rng(0x5EED0002);
    bool ok = true;
    for (std::uint64_t i = 0; i < kSamples; ++i) {
      const SPermMatrix a = random_sperm(n, rng);
      if (validate_sperm(to_dense(a)) != a) ok = false;
    }
    rec.add("sampled_roundtrip", "all round-trip", ok ? "all round-trip" : "mismatch", ok);
  }
  {
    Rng rng(0x5EED0003);
    std::uint64_t disagreements = 0, asymmetries = 0;
    for (std::uint64_t i = 0; i < kSamples; ++i) {
      const SPermMatrix a = random_sperm(n, rng);
      const SPermMatrix b = random_sperm(n, rng);
      const bool off = is_disjoint(a, b);
      if (off != !to_dense(a).intersects(to_dense(b))) ++disagreements;
      if (off != is_disjoint(b, a)) ++asymmetries;
    }
    rec.add("sampled_kernel_agreement", "0 disagreements",
            std::to_string(disagreements) + " disagreements", disagreements == 0);
    rec.add("sampled_symmetry", "0 asymmetries", std::to_string(asymmetries) + " asymmetries",
            asymmetries == 0);
  }
  {
    Rng rng(0x5EED0004);
    bool identity_fixed = true, pairs_distinct = true;
    for (int i = 0; i < 1000; ++i) {
      const SPermMatrix a = random_sperm(n, rng);
      if (compose_cad(a, CadFactors::identity(n)) != a) identity_fixed = false;
      CadFactors f1, f2;
      for (int k = 0; k < n; ++k) {
        f1.c.push_back(rng.perm(n));
        f1.d.push_back(rng.perm(n));
        f2.c.push_back(rng.perm(n));
        f2.d.push_back(rng.perm(n));
      }
      if (f1 != f2 && compose_cad(a, f1) == compose_cad(a, f2)) pairs_distinct = false;
    }
    rec.add("sampled_cad_identity", "identity factors fix every matrix",
            identity_fixed ? "fixed" : "moved", identity_fixed);
    rec.add("sampled_cad_injective_pairs", "no collisions",
            pairs_distinct ? "no collisions" : "collision", pairs_distinct);
  }
  {
    Rng seed_rng(0x5EED0005);
    const SPermMatrix a = random_sperm(n, seed_rng);
    const auto sampled = sample_disjointness(a, 200000, 0x5EED0006);
    const Rational lower = p_lower(n);
    const double lower_approx = static_cast<double>(boost::multiprecision::numerator(lower)) /
                                static_cast<double>(boost::multiprecision::denominator(lower));
    char expected[64];
    std::snprintf(expected, sizeof(expected), "reported (p_lower ~ %.6f)", lower_approx);
    rec.add("sampled_disjointness_rate", std::string(expected), format_estimate(sampled), true);
  }
}

}  // namespace

VerifyReport run_verification(int n, int workers, bool force_large) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  VerifyReport report;
  report.n = n;
  if (n <= kExhaustiveLimit) {
    verify_exhaustive(report, n, workers);
  } else if (force_large) {
    verify_sampled(report, n);
  } else {
    throw TooLarge("exhaustive verification is guarded at n <= 3; pass force_large for sampling");
  }
  return report;
}

}  // namespace spmx
