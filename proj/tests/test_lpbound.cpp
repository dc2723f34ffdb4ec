#include <doctest.h>

#include <random>

#include "originlab/errors.hpp"
#include "originlab/lpbound.hpp"
#include "originlab/sampling.hpp"
#include "support.hpp"

using namespace originlab;
using namespace testing_support;

namespace {

bool bounded(const LPInstance& inst, bool guide = true) { return is_bounded_variant(is_bounded(inst, {guide})); }

}  // namespace

TEST_CASE("is_bounded examples") {
    LPInstance a{M({{"1"}}), V({"1"})};
    auto v = is_bounded(a);
    REQUIRE(std::holds_alternative<Bounded>(v));
    CHECK(std::get<Bounded>(v).lambda == V({"1"}));

    LPInstance b{M({{"-1"}}), V({"1"})};
    v = is_bounded(b);
    REQUIRE(std::holds_alternative<Unbounded>(v));
    CHECK(sgn(std::get<Unbounded>(v).ray[0]) > 0);
    CHECK(verify_boundedness(b, v));

    LPInstance c{M({{"1", "0"}, {"0", "1"}}), V({"-1", "0"})};
    v = is_bounded(c);
    REQUIRE(std::holds_alternative<Unbounded>(v));
    const auto& ray = std::get<Unbounded>(v).ray;
    CHECK(sgn(ray[0]) < 0);
    CHECK(verify_boundedness(c, v));

    LPInstance d{M({{"1", "0"}, {"0", "1"}}), V({"1", "1"})};
    v = is_bounded(d);
    REQUIRE(std::holds_alternative<Bounded>(v));
    CHECK(std::get<Bounded>(v).lambda == V({"1", "1"}));
}

TEST_CASE("errors") {
    try {
        is_bounded({M({{"1", "2"}}), V({"0", "0"})});
        FAIL("zero cost accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroCostVector);
    }
    CHECK_THROWS_AS(is_bounded({M({{"1", "2"}}), V({"1"})}), Error);
}

TEST_CASE("verify_boundedness rejects bad certificates") {
    const LPInstance d{M({{"1", "0"}, {"0", "1"}}), V({"1", "1"})};
    CHECK_FALSE(verify_boundedness(d, Bounded{V({"1", "2"})}));
    CHECK_FALSE(verify_boundedness(d, Bounded{V({"1"})}));
    CHECK_FALSE(verify_boundedness(d, Unbounded{V({"1", "1"})}));
    const LPInstance b{M({{"-1"}}), V({"1"})};
    CHECK(verify_boundedness(b, Unbounded{V({"3"})}));
    CHECK_FALSE(verify_boundedness(b, Unbounded{V({"0"})}));
    CHECK_FALSE(verify_boundedness(b, Bounded{V({"-1"})}));
}

TEST_CASE("exhaustive agreement with the planar cone oracle") {
    std::size_t bounded_count = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        std::vector<QVector> rows(3, QVector(2));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) rows[i][j] = Rational((mask >> (2 * i + j) & 1) ? 1 : -1);
        const LPInstance inst{QMatrix::from_rows(rows), unit_vector(2, 0)};
        const auto v = is_bounded(inst);
        CHECK(verify_boundedness(inst, v));
        CHECK(is_bounded_variant(v) == cone_oracle_2d(rows, inst.c));
        bounded_count += is_bounded_variant(v);
    }
    CHECK(bounded_count > 0);
    CHECK(bounded_count < 64);
}

TEST_CASE("random planar instances agree with the cone oracle") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const QMatrix a = random_matrix(rng, n, 2, 2, 2);
        QVector c{small_rational(rng), small_rational(rng)};
        if (is_zero(c)) c[0] = 1;
        const LPInstance inst{a, c};
        const auto v = is_bounded(inst);
        CHECK(verify_boundedness(inst, v));
        CHECK(is_bounded_variant(v) == cone_oracle_2d(a.to_rows(), c));
        CHECK(bounded(inst, false) == is_bounded_variant(v));
    }
}

TEST_CASE("cost and row scaling leave the variant unchanged") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 400; ++t) {
        const std::size_t d = 1 + rng() % 4;
        const std::size_t n = 1 + rng() % 7;
        QMatrix a = random_matrix(rng, n, d, 2, 2);
        QVector c(d);
        for (auto& q : c) q = small_rational(rng);
        if (is_zero(c)) c[rng() % d] = -1;
        const bool base = bounded({a, c});

        const Rational alpha(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4));
        QVector c2 = c;
        for (auto& q : c2) q *= alpha;
        CHECK(bounded({a, c2}) == base);

        QMatrix a2 = a;
        const std::size_t row = rng() % n;
        for (std::size_t j = 0; j < d; ++j) a2(row, j) *= alpha;
        CHECK(bounded({a2, c}) == base);
        CHECK(bounded({a, c}, false) == base);
    }
}

TEST_CASE("guided certificates verify on Gaussian and Rademacher instances") {
    for (std::uint64_t t = 0; t < 150; ++t) {
        const std::size_t d = 2 + t % 6;
        const std::size_t n = d + t % (2 * d);
        const auto spec = t % 2 ? DistributionSpec::gaussian() : DistributionSpec::rademacher();
        const LPInstance inst{sample_matrix(spec, n, d, {13, t}), unit_vector(d, 0)};
        const auto v = is_bounded(inst);
        CHECK(verify_boundedness(inst, v));
        CHECK(is_bounded_variant(v) == bounded(inst, false));
    }
}

TEST_CASE("sandwich_check examples") {
    auto r = sandwich_check({M({{"1", "0"}, {"0", "1"}, {"-1", "-1"}}), V({"1", "1"})});
    CHECK(r.hull.cls == OriginClass::Interior);
    CHECK(is_bounded_variant(r.bounded));
    CHECK(r.pass);

    r = sandwich_check({M({{"-1"}}), V({"1"})});
    CHECK(r.hull.cls == OriginClass::Outside);
    CHECK_FALSE(is_bounded_variant(r.bounded));
    CHECK(r.pass);

    r = sandwich_check({M({{"1"}}), V({"1"})});
    CHECK(r.hull.cls == OriginClass::Interior);
    CHECK(is_bounded_variant(r.bounded));
    CHECK(r.pass);
}

TEST_CASE("sandwich holds on random instances") {
    const std::vector<DistributionSpec> specs{
        DistributionSpec::rademacher(), DistributionSpec::gaussian(), DistributionSpec::bernoulli_gaussian(0.4)};
    int checked = 0;
    for (std::uint64_t t = 0; t < 600; ++t) {
        const auto& spec = specs[t % specs.size()];
        const std::size_t d = 1 + t % 5;
        const std::size_t n = 1 + t % (2 * d + 2);
        const QMatrix a = sample_matrix(spec, n, d, {17, t});
        const QVector c = sample_cost_vector(CostSource{spec}, d, {17, t});
        const auto rep = sandwich_check({a, c});
        CHECK(rep.pass);
        ++checked;
    }
    CHECK(checked == 600);
}
