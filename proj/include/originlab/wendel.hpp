#pragma once

#include <cstdint>

#include "originlab/rational.hpp"

namespace originlab {

/// Exact p_{n,d} = 1 - 2^{1-n} Σ_{k<d} C(n-1,k), clamped below at 0 so the
/// function is total (n <= d gives 0). Requires n >= 1 and d >= 1.
Rational p_exact(std::uint64_t n, std::uint64_t d);

/// Double-precision p_{n,d}. Sums the smaller binomial tail with ratio
/// recurrences anchored at a mantissa/exponent product, so no intermediate
/// overflows; relative error stays well below 1e-12 for n in the thousands.
double p_float(std::uint64_t n, std::uint64_t d);

/// Smallest n with p_exact(n, d) >= target. The normal approximation only
/// seeds the search; the returned value is decided by exact comparisons.
std::uint64_t window_estimate(std::uint64_t d, double target);

}  // namespace originlab
