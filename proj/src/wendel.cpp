#include "originlab/wendel.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "originlab/errors.hpp"

namespace originlab {

Rational p_exact(std::uint64_t n, std::uint64_t d) {
    require(n >= 1 && d >= 1, ErrorKind::InvalidParameter, "p_exact requires n >= 1 and d >= 1");
    if (n <= d) return Rational(0);
    const std::uint64_t top = n - 1;
    mpz_class term = 1;  // C(top, k)
    mpz_class sum = 0;
    for (std::uint64_t k = 0; k < d; ++k) {
        sum += term;
        term *= static_cast<unsigned long>(top - k);
        term /= static_cast<unsigned long>(k + 1);
    }
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(top));
    Rational tail(sum, pow2);
    tail.canonicalize();
    Rational p = 1 - tail;
    if (sgn(p) < 0) p = 0;
    return p;
}

namespace {

/// Σ_{j<=k} C(top, j) 2^{-top} for k <= top/2, where the terms increase in j.
double lower_binomial_sum(std::uint64_t top, std::uint64_t k) {
    // Anchor C(top,k) 2^{-top} as mantissa * 2^exponent.
    double mant = 1.0;
    long exponent = 0;
    for (std::uint64_t i = 1; i <= k; ++i) {
        mant *= static_cast<double>(top - k + i) / static_cast<double>(i);
        int e = 0;
        mant = std::frexp(mant, &e);
        exponent += e;
    }
    exponent -= static_cast<long>(top);

    // Backward ratio recurrence t_{j-1}/t_j = j / (top - j + 1), Neumaier sum.
    double sum = 1.0;
    double comp = 0.0;
    double ratio = 1.0;
    for (std::uint64_t j = k; j >= 1; --j) {
        ratio *= static_cast<double>(j) / static_cast<double>(top - j + 1);
        const double t = sum + ratio;
        if (std::abs(sum) >= std::abs(ratio)) {
            comp += (sum - t) + ratio;
        } else {
            comp += (ratio - t) + sum;
        }
        sum = t;
        if (ratio < 1e-22 * sum) break;
    }
    return std::ldexp(mant * (sum + comp), static_cast<int>(std::max<long>(exponent, -100000)));
}

}  // namespace

double p_float(std::uint64_t n, std::uint64_t d) {
    require(n >= 1 && d >= 1, ErrorKind::InvalidParameter, "p_float requires n >= 1 and d >= 1");
    if (n <= d) return 0.0;
    if (n == 2 * d) return 0.5;
    const std::uint64_t top = n - 1;
    // Sum whichever tail is the smaller one; the other follows by complement.
    if (2 * (d - 1) < top) return 1.0 - lower_binomial_sum(top, d - 1);
    return lower_binomial_sum(top, top - d);
}

std::uint64_t window_estimate(std::uint64_t d, double target) {
    require(d >= 1, ErrorKind::InvalidParameter, "window_estimate requires d >= 1");
    require(target > 0.0 && target < 1.0, ErrorKind::InvalidParameter, "window_estimate requires 0 < target < 1");
    const Rational exact_target(target);

    // Normal approximation p ≈ Φ((n - 1 - 2d) / sqrt(n - 1)), solved for n.
    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, target);
    const double s = (z + std::sqrt(z * z + 8.0 * static_cast<double>(d))) / 2.0;
    auto guess = static_cast<std::uint64_t>(std::llround(s * s + 1.0));
    guess = std::max<std::uint64_t>(guess, d + 1);

    auto reaches = [&](std::uint64_t n) { return p_exact(n, d) >= exact_target; };

    // Bracket (lo, hi] with p(lo) < target <= p(hi); p(d) = 0 < target.
    std::uint64_t lo = d;
    std::uint64_t hi = guess;
    if (reaches(guess)) {
        std::uint64_t step = 1;
        while (step < hi - d && reaches(hi - step)) {
            hi -= step;
            step *= 2;
        }
        lo = step < hi - d ? hi - step : d;
    } else {
        lo = guess;
        std::uint64_t step = 1;
        hi = guess + step;
        while (!reaches(hi)) {
            lo = hi;
            step *= 2;
            hi += step;
        }
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (reaches(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace originlab
