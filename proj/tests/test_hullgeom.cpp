#include <doctest.h>

#include <algorithm>
#include <random>

#include "originlab/errors.hpp"
#include "originlab/hullgeom.hpp"
#include "originlab/sampling.hpp"
#include "support.hpp"

using namespace originlab;
using namespace testing_support;

namespace {

PointSet P(std::initializer_list<std::initializer_list<const char*>> rows) {
    PointSet p;
    for (const auto& r : rows) p.push_back(V(r));
    return p;
}

PointSet random_points(std::mt19937_64& rng, std::size_t m, std::size_t d, int k = 2) {
    PointSet p(m, QVector(d));
    for (auto& x : p)
        for (auto& q : x) q = small_rational(rng, k, 2);
    return p;
}

OriginClass cls(const PointSet& p) { return classify_origin(p).cls; }

}  // namespace

TEST_CASE("contains_origin examples") {
    auto r = contains_origin(P({{"1", "0"}, {"-1", "0"}}));
    REQUIRE(std::holds_alternative<Witness>(r));
    CHECK(std::get<Witness>(r).lambda == V({"1/2", "1/2"}));

    r = contains_origin(P({{"1", "1"}, {"2", "1"}}));
    REQUIRE(std::holds_alternative<Separator>(r));
    const auto& y = std::get<Separator>(r).y;
    CHECK(sgn(y[0] + y[1]) < 0);
    CHECK(sgn(2 * y[0] + y[1]) < 0);

    r = contains_origin(P({{"1", "0"}, {"0", "1"}, {"-1", "-1"}}));
    REQUIRE(std::holds_alternative<Witness>(r));
    CHECK(std::get<Witness>(r).lambda == V({"1/3", "1/3", "1/3"}));

    CHECK_THROWS_AS(contains_origin(PointSet{}), Error);
}

TEST_CASE("interior_contains_origin examples") {
    auto r = interior_contains_origin(P({{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}}));
    CHECK(r.interior);
    CHECK(r.cone_witnesses.size() == 4);

    r = interior_contains_origin(P({{"1", "0"}, {"-1", "0"}}));
    CHECK_FALSE(r.interior);
    REQUIRE(r.separator.size() == 2);
    CHECK(r.separator[0] == 0);
    CHECK(r.separator[1] != 0);

    r = interior_contains_origin(P({{"1", "0"}, {"0", "1"}, {"-1", "-1"}}));
    CHECK(r.interior);
    CHECK_THROWS_AS(interior_contains_origin(PointSet{}), Error);
}

TEST_CASE("classify_origin examples") {
    const PointSet seg = P({{"1", "1"}, {"-1", "-1"}});
    auto v = classify_origin(seg);
    CHECK(v.cls == OriginClass::Boundary);
    REQUIRE(v.witness);
    CHECK(*v.witness == V({"1/2", "1/2"}));
    REQUIRE(v.separator);
    CHECK((*v.separator)[0] == -(*v.separator)[1]);
    CHECK(verify_verdict(seg, v));

    const PointSet square = P({{"1", "1"}, {"1", "-1"}, {"-1", "1"}, {"-1", "-1"}});
    v = classify_origin(square);
    CHECK(v.cls == OriginClass::Interior);
    CHECK(v.interior_proof);
    CHECK_FALSE(v.separator);
    CHECK(verify_verdict(square, v));

    CHECK(cls(P({{"1", "1"}, {"2", "1"}})) == OriginClass::Outside);
    CHECK(cls(P({{"0", "0"}})) == OriginClass::Boundary);
    CHECK(cls(P({{"3"}})) == OriginClass::Outside);
    CHECK(cls(P({{"3"}, {"-1/2"}})) == OriginClass::Interior);
    CHECK(cls(P({{"0"}, {"1"}})) == OriginClass::Boundary);
    // Full-dimensional hull with the origin on a facet.
    const PointSet facet = P({{"1", "0"}, {"-1", "0"}, {"0", "1"}});
    v = classify_origin(facet);
    CHECK(v.cls == OriginClass::Boundary);
    CHECK(affine_hull_dim(facet) == 2);
    CHECK(verify_verdict(facet, v));
    CHECK_THROWS_AS(classify_origin(PointSet{}), Error);
    CHECK_THROWS_AS(classify_origin(P({{"1", "0"}, {"1"}})), Error);
}

TEST_CASE("affine_hull_dim examples") {
    CHECK(affine_hull_dim(P({{"0", "0"}, {"1", "0"}, {"0", "1"}})) == 2);
    CHECK(affine_hull_dim(P({{"1", "1"}, {"2", "2"}})) == 1);
    CHECK(affine_hull_dim(P({{"3", "4"}})) == 0);
}

TEST_CASE("verify_verdict rejects bad certificates") {
    const PointSet square = P({{"1", "1"}, {"1", "-1"}, {"-1", "1"}, {"-1", "-1"}});
    auto v = classify_origin(square);
    auto bad = v;
    bad.cls = OriginClass::Boundary;
    CHECK_FALSE(verify_verdict(square, bad));
    bad = v;
    (*bad.witness)[0] += Rational(1, 10);
    CHECK_FALSE(verify_verdict(square, bad));
    bad = v;
    bad.witness.reset();
    CHECK_FALSE(verify_verdict(square, bad));

    const PointSet out = P({{"1", "1"}, {"2", "1"}});
    v = classify_origin(out);
    CHECK(verify_verdict(out, v));
    bad = v;
    bad.separator = V({"1", "0"});
    CHECK_FALSE(verify_verdict(out, bad));
    bad = v;
    bad.cls = OriginClass::Interior;
    CHECK_FALSE(verify_verdict(out, bad));
    // Boundary needs a nonzero separator.
    const PointSet seg = P({{"1", "1"}, {"-1", "-1"}});
    v = classify_origin(seg);
    bad = v;
    bad.separator = V({"0", "0"});
    CHECK_FALSE(verify_verdict(seg, bad));
    // An Interior claim on a degenerate set cannot verify.
    bad = v;
    bad.cls = OriginClass::Interior;
    bad.separator.reset();
    bad.interior_proof = SpanningSupport{{0, 1}};
    CHECK_FALSE(verify_verdict(seg, bad));
}

TEST_CASE("agrees with the supporting-line oracle on every planar sign pattern") {
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) {
            PointSet pts(n, QVector(2));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < 2; ++j) pts[i][j] = Rational((mask >> (2 * i + j) & 1) ? 1 : -1);
            const auto oracle = hull_oracle_2d(pts);
            const auto v = classify_origin(pts);
            CHECK(static_cast<int>(v.cls) == static_cast<int>(oracle));
            ++cases;
        }
    }
    CHECK(cases == 4 + 16 + 64 + 256);
}

TEST_CASE("agrees with the oracle on random planar rational sets") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 1500; ++t) {
        const PointSet pts = random_points(rng, 1 + rng() % 6, 2, 2);
        CHECK(static_cast<int>(cls(pts)) == static_cast<int>(hull_oracle_2d(pts)));
    }
}

TEST_CASE("independent routes agree and every verdict verifies") {
    std::mt19937_64 rng(2);
    const ClassifyOptions cone{InteriorMethod::ConeQueries, true};
    const ClassifyOptions exact{InteriorMethod::StrictDependency, false};
    for (int t = 0; t < 600; ++t) {
        const std::size_t d = 1 + rng() % 4;
        const PointSet pts = random_points(rng, 1 + rng() % 8, d, 1 + static_cast<int>(t % 3));
        const auto v = classify_origin(pts);
        CHECK(verify_verdict(pts, v));
        CHECK(classify_origin(pts, cone).cls == v.cls);
        CHECK(classify_origin(pts, exact).cls == v.cls);
        CHECK(std::holds_alternative<Witness>(contains_origin(pts)) == (v.cls != OriginClass::Outside));
        CHECK(interior_contains_origin(pts).interior == (v.cls == OriginClass::Interior));
    }
}

TEST_CASE("guided and exact routes agree on 53-bit Gaussian points") {
    const ClassifyOptions exact{InteriorMethod::StrictDependency, false};
    for (std::uint64_t t = 0; t < 150; ++t) {
        const std::size_t d = 2 + t % 5;
        const std::size_t n = 2 * d + (t % 3) - 1;
        const QMatrix m = sample_matrix(DistributionSpec::gaussian(), n, d, {31, t});
        const PointSet pts = m.to_rows();
        const auto v = classify_origin(pts);
        CHECK(verify_verdict(pts, v));
        CHECK(v.cls != OriginClass::Boundary);
        CHECK(classify_origin(pts, exact).cls == v.cls);
    }
}

TEST_CASE("class invariances") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t d = 1 + rng() % 3;
        PointSet pts = random_points(rng, 1 + rng() % 6, d, 2);
        const auto base = cls(pts);

        PointSet neg = pts;
        for (auto& x : neg)
            for (auto& q : x) q = -q;
        CHECK(cls(neg) == base);

        PointSet perm = pts;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(cls(perm) == base);

        PointSet dup = pts;
        dup.push_back(pts[rng() % pts.size()]);
        CHECK(cls(dup) == base);

        PointSet scaled = pts;
        const Rational alpha(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 7));
        for (auto& x : scaled)
            for (auto& q : x) q *= alpha;
        CHECK(cls(scaled) == base);

        if (base != OriginClass::Outside) {
            PointSet more = pts;
            more.push_back(random_points(rng, 1, d, 3)[0]);
            CHECK(cls(more) != OriginClass::Outside);
        }
        if (base == OriginClass::Interior) {
            PointSet with0 = pts;
            with0.push_back(QVector(d));
            CHECK(affine_hull_dim(with0) == d);
        }
    }
}

TEST_CASE("separator and witness never co-verify") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = 1 + rng() % 3;
        const PointSet pts = random_points(rng, 1 + rng() % 5, d, 2);
        const auto r = contains_origin(pts);
        // Build the opposite certificate from a neighbouring instance and check
        // it never verifies as a strict separator alongside a witness.
        PointSet other = pts;
        other[0][0] += 1;
        const auto r2 = contains_origin(other);
        std::vector<QVector> witnesses, separators;
        for (const auto* res : {&r, &r2}) {
            if (const auto* w = std::get_if<Witness>(res)) witnesses.push_back(w->lambda);
            else separators.push_back(std::get<Separator>(*res).y);
        }
        bool w_ok = false, s_ok = false;
        for (const auto& w : witnesses) {
            QVector acc(d);
            Rational total = 0;
            bool nonneg = true;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                nonneg = nonneg && sgn(w[i]) >= 0;
                total += w[i];
                for (std::size_t j = 0; j < d; ++j) acc[j] += w[i] * pts[i][j];
            }
            w_ok = w_ok || (nonneg && total == 1 && is_zero(acc));
        }
        for (const auto& y : separators) {
            bool strict = true;
            for (const auto& x : pts) strict = strict && sgn(dot(x, y)) < 0;
            s_ok = s_ok || strict;
        }
        CHECK_FALSE((w_ok && s_ok));
    }
}

TEST_CASE("degenerate inputs") {
    CHECK(cls(P({{"0", "0"}, {"0", "0"}})) == OriginClass::Boundary);
    CHECK(cls(P({{"1", "0", "0"}, {"-1", "0", "0"}, {"0", "1", "0"}, {"0", "-1", "0"}})) == OriginClass::Boundary);
    CHECK(cls(P({{"1", "0"}, {"1", "0"}, {"1", "0"}})) == OriginClass::Outside);
    CHECK(cls(P({{"0", "0"}, {"1", "7"}})) == OriginClass::Boundary);
    // Large coordinates take the GMP path.
    const PointSet big = P({{"123456789012345678901", "1"}, {"-1", "-1/98765432109876543210"}, {"0", "-5"}, {"-7", "3"}});
    const auto v = classify_origin(big);
    CHECK(verify_verdict(big, v));
    CHECK(v.cls == classify_origin(big, {InteriorMethod::ConeQueries, false}).cls);
}
