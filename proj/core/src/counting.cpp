#include "spmx/counting.hpp"

#include "spmx/oracle.hpp"

namespace spmx {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

// m! * sum_{k=0}^{m} (-1)^k / k!, accumulated as the integers m!/k!.
BigInt alternating_tail(int m) {
  BigInt partial = factorial(m);
  BigInt acc = 0;
  for (int k = 0; k <= m; ++k) {
    acc += (k % 2 == 0) ? partial : -partial;
    if (k < m) partial /= (k + 1);
  }
  return acc;
}

}  // namespace

BigInt rencontres(int n, int p) {
  if (n < 0 || p < 0 || p > n) throw DomainError("rencontres expects 0 <= p <= n");
  const BigInt binomial = factorial(n) / (factorial(p) * factorial(n - p));
  return binomial * alternating_tail(n - p);
}

BigInt derangements(int n) {
  if (n < 0) throw DomainError("derangements of a negative number");
  return alternating_tail(n);
}

BigInt sigma_cardinality(int n) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  return boost::multiprecision::pow(factorial(n), 2 * static_cast<unsigned>(n));
}

BigInt nu(int n) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  const BigInt d = derangements(n);
  const BigInt base = 2 * factorial(n) * d - d * d;
  return boost::multiprecision::pow(base, static_cast<unsigned>(n));
}

BigInt xi_lower(int n) { return nu(n); }

BigInt eta_lower(int n) { return sigma_cardinality(n) * nu(n) / 2; }

Rational p_lower(int n) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  if (n == 1) return Rational(0);  // no pair exists
  return Rational(nu(n), sigma_cardinality(n) - 1);
}

BigInt sigma_from_mu(int n, const BigInt& mu_nn) {
  if (n < 1) throw DomainError("grid parameter must be >= 1");
  if (mu_nn < 0) throw DomainError("family count must be >= 0");
  return factorial(n * n) * mu_nn;
}

std::string provenance_label(Provenance p) {
  switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::paper_constant: return "paper_constant";
    case Provenance::oracle: return "oracle";
  }
  return "unknown";
}

std::optional<ExactCounts> published_exact(int n) {
  if (n == 2)
    return ExactCounts{BigInt(9), BigInt(0), BigInt(72), Rational(3, 5),
                       Provenance::paper_constant};
  if (n == 3)
    return ExactCounts{BigInt(27008), BigInt(19008), BigInt(630042624),
                       Rational(27008, 46655), Provenance::paper_constant};
  return std::nullopt;
}

BigInt published_sigma(int n) {
  if (n == 2) return BigInt(288);
  if (n == 3) return BigInt("6670903752021072936960");
  throw Unsupported("no published Sudoku count for n = " + std::to_string(n));
}

BigInt published_mu(int n) {
  if (n == 2) return BigInt(12);
  if (n == 3) return BigInt("18383222420692992");
  throw Unsupported("no published complete-family count for n = " + std::to_string(n));
}

CountReport formulas_report(int n) {
  CountReport report;
  report.n = n;
  report.sigma_count = sigma_cardinality(n);
  report.nu = nu(n);
  report.xi_lower = xi_lower(n);
  report.eta_lower = eta_lower(n);
  report.p_lower = p_lower(n);
  return report;
}

CountReport exact_report(int n, ExactSource source, int workers) {
  CountReport report = formulas_report(n);
  if (source == ExactSource::paper_constants) {
    auto exact = published_exact(n);
    if (!exact) throw Unsupported("published constants exist only for n in {2, 3}");
    report.exact = std::move(*exact);
    return report;
  }

  const auto sweep = xi_invariance_check(n, workers);
  if (!sweep.constant)
    throw InvarianceViolated("xi differs across matrices; no single exact value exists");
  ExactCounts exact;
  exact.source = Provenance::oracle;
  exact.xi = sweep.value;
  exact.r = sweep.value - report.nu;
  exact.eta = report.sigma_count * sweep.value / 2;
  exact.p = n == 1 ? Rational(0) : Rational(sweep.value, report.sigma_count - 1);
  report.exact = std::move(exact);
  return report;
}

}  // namespace spmx
