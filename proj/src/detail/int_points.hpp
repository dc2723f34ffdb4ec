#pragma once

// Point sets rescaled to primitive integer vectors. Origin containment, cone
// membership and separation are invariant under per-point positive scaling,
// so the exact kernels run on integers and results are mapped back through
// the recorded scale factors.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "detail/int_kernels.hpp"
#include "originlab/errors.hpp"
#include "originlab/rational.hpp"

namespace originlab::detail {

struct IntPoints {
    std::size_t m = 0;
    std::size_t d = 0;
    /// Row i is scale[i] * X_i, a primitive integer vector.
    IntMatrix<mpz_class> big;
    /// Same data when every entry is small enough for the int64 kernels.
    std::optional<IntMatrix<std::int64_t>> small;
    std::vector<Rational> scale;
    /// X as doubles for the floating-point guide.
    std::vector<double> approx;

    static IntPoints from_rows(std::span<const QVector> points) {
        IntPoints p;
        p.m = points.size();
        require(p.m >= 1, ErrorKind::ContractViolation, "point list is empty");
        p.d = points.front().size();
        require(p.d >= 1, ErrorKind::ContractViolation, "points must have dimension >= 1");
        p.big = IntMatrix<mpz_class>(p.m, p.d);
        p.scale.resize(p.m);
        p.approx.resize(p.m * p.d);
        constexpr long kSmallLimit = 1L << 24;
        bool small_ok = true;
        for (std::size_t i = 0; i < p.m; ++i) {
            const QVector& x = points[i];
            require(x.size() == p.d, ErrorKind::ContractViolation, "points have inconsistent dimensions");
            mpz_class l = 1;
            for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
            mpz_class g = 0;
            for (std::size_t j = 0; j < p.d; ++j) {
                mpz_class v = x[j].get_num() * (l / x[j].get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                p.big(i, j) = std::move(v);
                p.approx[i * p.d + j] = x[j].get_d();
            }
            if (g > 1) {
                for (std::size_t j = 0; j < p.d; ++j) mpz_divexact(p.big(i, j).get_mpz_t(), p.big(i, j).get_mpz_t(), g.get_mpz_t());
            }
            if (g == 0) g = 1;
            p.scale[i] = Rational(l, g);
            p.scale[i].canonicalize();
            for (std::size_t j = 0; j < p.d && small_ok; ++j) {
                if (mpz_cmpabs_ui(p.big(i, j).get_mpz_t(), kSmallLimit) >= 0) small_ok = false;
            }
        }
        if (small_ok) {
            IntMatrix<std::int64_t> s(p.m, p.d);
            for (std::size_t k = 0; k < p.big.data.size(); ++k) s.data[k] = p.big.data[k].get_si();
            p.small = std::move(s);
        }
        return p;
    }

    /// Maps integer weights on the scaled points back to convex weights on
    /// the original points.
    QVector convex_weights(std::span<const mpz_class> weights) const {
        QVector lambda(m);
        Rational total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            lambda[i] = Rational(weights[i]) * scale[i];
            total += lambda[i];
        }
        for (auto& l : lambda) l /= total;
        return lambda;
    }
};

/// Phase 1 for an arbitrary-sign right-hand side: negative rows are flipped
/// before the Bland tableau and the Farkas vector is flipped back.
template <class Ops>
Phase1Result<typename Ops::Int> phase1_signed(IntMatrix<typename Ops::Int> m, std::vector<typename Ops::Int> b) {
    std::vector<bool> flipped(b.size(), false);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (Ops::sign(b[i]) < 0) {
            flipped[i] = true;
            b[i] = Ops::neg(b[i]);
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = Ops::neg(m(i, j));
        }
    }
    auto res = phase1_bland<Ops>(m, b);
    if (!res.feasible) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (flipped[i]) res.farkas[i] = Ops::neg(res.farkas[i]);
        }
    }
    return res;
}

/// sign(⟨row_i, z⟩) with exact integer arithmetic.
inline int dot_sign(const IntMatrix<std::int64_t>& y, std::size_t row, std::span<const std::int64_t> z) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < y.cols; ++j) {
        const __int128 term = static_cast<__int128>(y(row, j)) * z[j];
        if (__builtin_add_overflow(acc, term, &acc)) throw Overflow{};
    }
    return (acc > 0) - (acc < 0);
}

inline int dot_sign(const IntMatrix<mpz_class>& y, std::size_t row, std::span<const std::int64_t> z) {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < y.cols; ++j) {
        if (z[j] != 0) mpz_addmul(acc.get_mpz_t(), y(row, j).get_mpz_t(), mpz_class(static_cast<long>(z[j])).get_mpz_t());
    }
    return sgn(acc);
}

/// Rounds a floating-point direction to an integer vector with ~40
/// significant bits. Returns nullopt for non-finite or zero input.
inline std::optional<std::vector<std::int64_t>> round_direction(std::span<const double> z) {
    double maxabs = 0.0;
    for (double v : z) {
        if (!std::isfinite(v)) return std::nullopt;
        maxabs = std::max(maxabs, std::abs(v));
    }
    if (maxabs == 0.0) return std::nullopt;
    const int shift = 40 - std::ilogb(maxabs);
    std::vector<std::int64_t> out(z.size());
    std::int64_t g = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        out[j] = std::llround(std::ldexp(z[j], shift));
        g = std::gcd(g, out[j]);
    }
    if (g > 1)
        for (auto& v : out) v /= g;
    return out;
}

template <class Ops>
std::vector<mpz_class> to_mpz(std::span<const typename Ops::Int> v) {
    std::vector<mpz_class> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(Ops::to_mpz(x));
    return out;
}

}  // namespace originlab::detail
