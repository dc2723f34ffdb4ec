#include <doctest.h>

#include <cmath>

#include "originlab/wendel.hpp"
#include "support.hpp"

using namespace originlab;
using testing_support::pascal_cdf;

TEST_CASE("p_exact closed-form values") {
    for (std::uint64_t d = 1; d <= 20; ++d) {
        CHECK(p_exact(d, d) == 0);
        CHECK(p_exact(2 * d, d) == Rational(1, 2));
        mpz_class two_d;
        mpz_ui_pow_ui(two_d.get_mpz_t(), 2, d);
        CHECK(p_exact(d + 1, d) == Rational(mpz_class(1), two_d));
    }
    CHECK(p_exact(5, 2) == Rational(11, 16));
    CHECK(p_exact(1, 3) == 0);
    CHECK(p_exact(2, 1) == Rational(1, 2));
    CHECK(p_exact(3, 1) == Rational(3, 4));
}

TEST_CASE("binomial-tail identity against Pascal's triangle") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t d = 1; d <= n; ++d) {
            CHECK(1 - p_exact(n, d) == pascal_cdf(n - 1, d - 1));
        }
    }
}

TEST_CASE("monotone in n and in d") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        for (std::uint64_t d = 1; d <= n; d += (n > 60 ? 7 : 1)) {
            CHECK(p_exact(n + 1, d) >= p_exact(n, d));
            CHECK(p_exact(n, d + 1) <= p_exact(n, d));
        }
    }
}

TEST_CASE("p_float matches p_exact") {
    CHECK(p_float(30, 15) == 0.5);
    CHECK(std::abs(p_float(5, 2) - 0.6875) <= 1e-12);
    const double v = p_float(1000, 400);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    double worst = 0.0;
    for (std::uint64_t n = 1; n <= 2000; n += (n < 100 ? 1 : 37)) {
        for (std::uint64_t d = 1; d <= n + 1; d += (n < 100 ? 1 : 13)) {
            const Rational e = p_exact(n, d);
            const double f = p_float(n, d);
            if (e == 0) {
                CHECK(f == 0.0);
                continue;
            }
            const double ed = e.get_d();
            if (ed == 0.0 || !std::isnormal(ed)) continue;
            worst = std::max(worst, std::abs(f - ed) / ed);
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("window_estimate brackets the threshold exactly") {
    CHECK(window_estimate(15, 0.5) == 30);
    CHECK(window_estimate(1, 0.5) == 2);
    const auto n = window_estimate(100, 0.99);
    CHECK(p_exact(n, 100) >= Rational(0.99));
    CHECK(p_exact(n - 1, 100) < Rational(0.99));
    for (std::uint64_t d = 1; d <= 40; ++d) {
        for (double target : {0.01, 0.25, 0.5, 0.9, 0.999}) {
            const auto m = window_estimate(d, target);
            CHECK(p_exact(m, d) >= Rational(target));
            if (m > 1) CHECK(p_exact(m - 1, d) < Rational(target));
        }
    }
}
