#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spmx {

// σ_3 ≈ 6.67e21 exceeds 64 bits; all counting is exact.
using BigInt = boost::multiprecision::cpp_int;

// Stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace spmx
