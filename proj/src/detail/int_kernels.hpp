#pragma once

// Fraction-free integer kernels shared by the exact modules. Every routine is
// templated on an arithmetic policy: `I64` works on int64_t with 128-bit
// intermediates and throws `Overflow` as soon as a value leaves int64 range,
// `Big` works on GMP integers. Callers try `I64` first and rerun with `Big`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "originlab/rational.hpp"

namespace originlab::detail {

struct Overflow {};

struct I64 {
    using Int = std::int64_t;
    using Wide = __int128;

    static Int narrow(Wide w) {
        if (w > INT64_MAX || w < INT64_MIN) throw Overflow{};
        return static_cast<Int>(w);
    }
    static Int from(const mpz_class& z) {
        if (!z.fits_slong_p()) throw Overflow{};
        return z.get_si();
    }
    static mpz_class to_mpz(Int v) { return mpz_class(static_cast<long>(v)); }
    static int sign(Int v) { return (v > 0) - (v < 0); }
    static bool is_zero(Int v) { return v == 0; }

    static Int add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int sub(Int a, Int b) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int neg(Int a) { return sub(0, a); }

    /// (a*p - b*q) / den, where the division is known to be exact.
    static Int cross_div(Int a, Int p, Int b, Int q, Int den) {
        const Wide x = static_cast<Wide>(a) * p;
        const Wide y = static_cast<Wide>(b) * q;
        Wide diff;
        if (__builtin_sub_overflow(x, y, &diff)) throw Overflow{};
        if (den == 1) return narrow(diff);
        return narrow(diff / den);
    }
    /// (a*p) / den, exact.
    static Int mul_div(Int a, Int p, Int den) {
        const Wide x = static_cast<Wide>(a) * p;
        if (den == 1) return narrow(x);
        return narrow(x / den);
    }
    /// sign(a*b - c*d)
    static int cmp_products(Int a, Int b, Int c, Int d) {
        const Wide x = static_cast<Wide>(a) * b;
        const Wide y = static_cast<Wide>(c) * d;
        return (x > y) - (x < y);
    }
};

struct Big {
    using Int = mpz_class;

    static Int from(const mpz_class& z) { return z; }
    static mpz_class to_mpz(const Int& v) { return v; }
    static int sign(const Int& v) { return sgn(v); }
    static bool is_zero(const Int& v) { return sgn(v) == 0; }
    static Int add(const Int& a, const Int& b) { return a + b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int neg(const Int& a) { return -a; }

    static Int cross_div(const Int& a, const Int& p, const Int& b, const Int& q, const Int& den) {
        Int r;
        mpz_mul(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        mpz_submul(r.get_mpz_t(), b.get_mpz_t(), q.get_mpz_t());
        if (den != 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        return r;
    }
    static Int mul_div(const Int& a, const Int& p, const Int& den) {
        Int r;
        mpz_mul(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        if (den != 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        return r;
    }
    static int cmp_products(const Int& a, const Int& b, const Int& c, const Int& d) {
        const Int x = a * b;
        const Int y = c * d;
        return cmp(x, y) > 0 ? 1 : (cmp(x, y) < 0 ? -1 : 0);
    }
};

/// Row-major integer matrix.
template <class Int>
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}

    Int& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

template <class To, class From>
IntMatrix<typename To::Int> convert(const IntMatrix<From>& m) {
    IntMatrix<typename To::Int> out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        if constexpr (std::is_same_v<From, mpz_class>) {
            out.data[i] = To::from(m.data[i]);
        } else {
            out.data[i] = To::from(mpz_class(static_cast<long>(m.data[i])));
        }
    }
    return out;
}

/// Exact rank by fraction-free (Bareiss) elimination. The matrix is consumed.
template <class Ops>
std::size_t bareiss_rank(IntMatrix<typename Ops::Int> m) {
    using Int = typename Ops::Int;
    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = m.rows;
        for (std::size_t r = rank; r < m.rows; ++r) {
            if (!Ops::is_zero(m(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot == m.rows) continue;
        if (pivot != rank) {
            for (std::size_t c = col; c < m.cols; ++c) std::swap(m(pivot, c), m(rank, c));
        }
        const Int piv = m(rank, col);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            const Int factor = m(r, col);
            for (std::size_t c = col + 1; c < m.cols; ++c) {
                m(r, c) = Ops::cross_div(m(r, c), piv, factor, m(rank, c), prev);
            }
            m(r, col) = Int(0);
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

/// Solution of a square system A x = b as integer numerators over a common
/// positive denominator (x_i = numer[i] / denom).
template <class Int>
struct ScaledSolution {
    std::vector<Int> numer;
    Int denom;
};

/// Solves A x = b exactly by Bareiss forward elimination and fraction-free
/// back substitution. Returns nullopt when A is singular.
template <class Ops>
std::optional<ScaledSolution<typename Ops::Int>> bareiss_solve(IntMatrix<typename Ops::Int> a,
                                                               std::vector<typename Ops::Int> b) {
    using Int = typename Ops::Int;
    const std::size_t n = a.rows;
    Int prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t r = k; r < n; ++r) {
            if (!Ops::is_zero(a(r, k))) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a(pivot, c), a(k, c));
            std::swap(b[pivot], b[k]);
        }
        const Int piv = a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Int factor = a(r, k);
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) = Ops::cross_div(a(r, c), piv, factor, a(k, c), prev);
            b[r] = Ops::cross_div(b[r], piv, factor, b[k], prev);
            a(r, k) = Int(0);
        }
        prev = piv;
    }
    ScaledSolution<Int> sol;
    if (n == 0) {
        sol.denom = Int(1);
        return sol;
    }
    const Int det = a(n - 1, n - 1);  // ± det(A)
    sol.numer.assign(n, Int(0));
    for (std::size_t i = n; i-- > 0;) {
        Int acc = Ops::mul(det, b[i]);
        for (std::size_t j = i + 1; j < n; ++j) acc = Ops::sub(acc, Ops::mul(a(i, j), sol.numer[j]));
        sol.numer[i] = Ops::mul_div(acc, Int(1), a(i, i));
    }
    sol.denom = det;
    if (Ops::sign(det) < 0) {
        for (auto& x : sol.numer) x = Ops::neg(x);
        sol.denom = Ops::neg(det);
    }
    return sol;
}

/// Outcome of the phase-1 simplex on {x >= 0 : M x = b} with b >= 0.
template <class Int>
struct Phase1Result {
    bool feasible = false;
    /// Feasible: x_j = numer[j] / denom for j < cols(M).
    std::vector<Int> numer;
    Int denom;
    /// Infeasible: y with yᵀM <= 0, yᵀb > 0 (integer scaled).
    std::vector<Int> farkas;
    std::size_t pivots = 0;
};

/// Exact phase-1 simplex on a fraction-free integer tableau with Bland's
/// smallest-index rule for both the entering and the leaving variable.
/// Requires b >= 0 componentwise.
template <class Ops>
Phase1Result<typename Ops::Int> phase1_bland(const IntMatrix<typename Ops::Int>& m,
                                             std::span<const typename Ops::Int> b) {
    using Int = typename Ops::Int;
    const std::size_t r = m.rows;
    const std::size_t k = m.cols;
    const std::size_t width = k + r + 1;  // structural | artificial | rhs
    const std::size_t rhs = k + r;

    // Rows 0..r-1 are constraints, row r holds the phase-1 reduced costs.
    IntMatrix<Int> t(r + 1, width);
    std::vector<std::size_t> basis(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            t(i, j) = m(i, j);
            t(r, j) = Ops::sub(t(r, j), m(i, j));
        }
        t(i, k + i) = Int(1);
        t(i, rhs) = b[i];
        t(r, rhs) = Ops::sub(t(r, rhs), b[i]);
        basis[i] = k + i;
    }

    Phase1Result<Int> out;
    Int den(1);
    for (;;) {
        std::size_t enter = rhs;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (Ops::sign(t(r, j)) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == rhs) break;

        std::size_t leave = r;
        for (std::size_t i = 0; i < r; ++i) {
            if (Ops::sign(t(i, enter)) <= 0) continue;
            if (leave == r) {
                leave = i;
                continue;
            }
            // Compare rhs_i / t_i,enter against rhs_leave / t_leave,enter.
            const int c = Ops::cmp_products(t(i, rhs), t(leave, enter), t(leave, rhs), t(i, enter));
            if (c < 0 || (c == 0 && basis[i] < basis[leave])) leave = i;
        }
        // The phase-1 objective is bounded below, so some row always qualifies.
        if (leave == r) break;

        const Int piv = t(leave, enter);
        for (std::size_t i = 0; i <= r; ++i) {
            if (i == leave) continue;
            const Int factor = t(i, enter);
            if (Ops::is_zero(factor)) {
                for (std::size_t j = 0; j < width; ++j) {
                    if (!Ops::is_zero(t(i, j))) t(i, j) = Ops::mul_div(t(i, j), piv, den);
                }
            } else {
                for (std::size_t j = 0; j < width; ++j) {
                    t(i, j) = Ops::cross_div(t(i, j), piv, factor, t(leave, j), den);
                }
            }
        }
        den = piv;
        basis[leave] = enter;
        ++out.pivots;
    }

    out.denom = den;
    if (Ops::is_zero(t(r, rhs))) {
        out.feasible = true;
        out.numer.assign(k, Int(0));
        for (std::size_t i = 0; i < r; ++i) {
            if (basis[i] < k) out.numer[basis[i]] = t(i, rhs);
        }
    } else {
        // Phase-1 duals: y_i = 1 - rc(artificial_i), scaled by the denominator.
        out.farkas.resize(r);
        for (std::size_t i = 0; i < r; ++i) out.farkas[i] = Ops::sub(den, t(r, k + i));
    }
    return out;
}

/// Runs `fn` with the int64 policy on a converted copy and falls back to GMP
/// integers on overflow. `fn` is a generic lambda taking (policy tag, matrix).
template <class Fn>
auto with_fallback(const IntMatrix<mpz_class>& m, Fn&& fn) {
    try {
        return fn(I64{}, convert<I64>(m));
    } catch (const Overflow&) {
        return fn(Big{}, m);
    }
}

/// Scales each row of a rational matrix (and matching rhs entry) by the
/// positive lcm of its denominators. Returns the integer matrix and the
/// per-row scale factors.
IntMatrix<mpz_class> integer_rows(const QMatrix& m, std::span<const Rational> rhs, std::vector<mpz_class>* rhs_out,
                                  std::vector<mpz_class>* scales);

/// Nonzero rational y with M y = 0 for a rank-deficient n×d matrix.
QVector nullspace_vector(const QMatrix& m);

}  // namespace originlab::detail
