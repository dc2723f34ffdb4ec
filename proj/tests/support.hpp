#pragma once
// Small helpers and brute-force oracles shared by the unit tests. Nothing
// here calls into the library's solvers.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "originlab/rational.hpp"

namespace testing_support {

using originlab::QMatrix;
using originlab::QVector;
using originlab::Rational;

inline Rational Q(const std::string& s) { return originlab::parse_rational(s); }

inline QVector V(std::initializer_list<const char*> xs) {
    QVector v;
    for (const char* x : xs) v.push_back(Q(x));
    return v;
}

inline QMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<QVector> r;
    for (const auto& row : rows) r.push_back(V(row));
    return QMatrix::from_rows(r);
}

/// Random small rational in {-k..k}/{1..den}.
inline Rational small_rational(std::mt19937_64& rng, int k = 3, int den = 2) {
    std::uniform_int_distribution<int> num(-k, k);
    std::uniform_int_distribution<int> dd(1, den);
    Rational q(num(rng), dd(rng));
    q.canonicalize();
    return q;
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int k = 3, int den = 2) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng, k, den);
    return m;
}

/// Solves A x = b (A is r×s) by plain Gaussian elimination over Q. Returns
/// nullopt when inconsistent or when the columns are dependent.
inline std::optional<QVector> solve_independent(std::vector<QVector> a, QVector b) {
    const std::size_t r = a.size();
    const std::size_t s = r == 0 ? 0 : a[0].size();
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t p = row;
        while (p < r && a[p][col] == 0) ++p;
        if (p == r) return std::nullopt;  // dependent column
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < s; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < r; ++i) {
        if (b[i] != 0) return std::nullopt;
    }
    QVector x(s);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i] / a[i][pivots[i]];
    return x;
}

/// Feasibility of {λ >= 0 : M λ = b} by enumerating basic solutions over
/// every column subset of size <= rows.
inline bool brute_feasible(const QMatrix& m, const QVector& b) {
    const std::size_t r = m.rows();
    const std::size_t k = m.cols();
    bool zero_b = true;
    for (const auto& q : b) zero_b = zero_b && q == 0;
    if (zero_b) return true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > r) continue;
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1) cols.push_back(j);
        std::vector<QVector> a(r, QVector(cols.size()));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t c = 0; c < cols.size(); ++c) a[i][c] = m(i, cols[c]);
        const auto x = solve_independent(a, b);
        if (!x) continue;
        bool ok = true;
        for (const auto& q : *x) ok = ok && sgn(q) >= 0;
        if (ok) return true;
    }
    return false;
}

enum class Oracle2D { Outside, Boundary, Interior };

inline Rational cross(const QVector& o, const QVector& a, const QVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Origin versus conv(points) in the plane from the supporting lines through
/// pairs of points.
inline Oracle2D hull_oracle_2d(const std::vector<QVector>& pts) {
    const QVector zero{Rational(0), Rational(0)};
    bool all_same = true;
    for (const auto& p : pts) all_same = all_same && p == pts[0];
    if (all_same) return pts[0] == zero ? Oracle2D::Boundary : Oracle2D::Outside;

    bool collinear = true;
    std::size_t far = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] != pts[0]) far = i;
    }
    for (const auto& p : pts) collinear = collinear && cross(pts[0], pts[far], p) == 0;
    if (collinear) {
        if (cross(pts[0], pts[far], zero) != 0) return Oracle2D::Outside;
        // Parameter of 0 and of each point along the line through pts[0].
        const QVector dir{pts[far][0] - pts[0][0], pts[far][1] - pts[0][1]};
        auto param = [&](const QVector& p) -> Rational { return (p[0] - pts[0][0]) * dir[0] + (p[1] - pts[0][1]) * dir[1]; };
        Rational lo = param(pts[0]), hi = lo;
        for (const auto& p : pts) {
            lo = std::min(lo, param(p));
            hi = std::max(hi, param(p));
        }
        const Rational t = param(zero);
        return (lo <= t && t <= hi) ? Oracle2D::Boundary : Oracle2D::Outside;
    }

    bool strictly_inside = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) continue;
            int side = 0;
            bool supporting = true;
            for (const auto& p : pts) {
                const int s = sgn(cross(pts[i], pts[j], p));
                if (s == 0) continue;
                if (side == 0) side = s;
                if (s != side) supporting = false;
            }
            if (!supporting) continue;
            const int s0 = sgn(cross(pts[i], pts[j], zero));
            if (s0 == -side) return Oracle2D::Outside;
            if (s0 == 0) strictly_inside = false;
        }
    }
    return strictly_inside ? Oracle2D::Interior : Oracle2D::Boundary;
}

/// c ∈ cone(rows) in the plane: single rows and every pair (Carathéodory).
inline bool cone_oracle_2d(const std::vector<QVector>& rows, const QVector& c) {
    for (const auto& r : rows) {
        // c = t r with t >= 0
        if (r[0] * c[1] - r[1] * c[0] == 0 && sgn(r[0] * c[0] + r[1] * c[1]) > 0) return true;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const auto& a = rows[i];
            const auto& b = rows[j];
            const Rational det = a[0] * b[1] - a[1] * b[0];
            if (det == 0) continue;
            const Rational s = (c[0] * b[1] - c[1] * b[0]) / det;
            const Rational t = (a[0] * c[1] - a[1] * c[0]) / det;
            if (sgn(s) >= 0 && sgn(t) >= 0) return true;
        }
    }
    return false;
}

/// Binomial(n, 1/2) CDF at k from Pascal's triangle, as an exact rational.
inline Rational pascal_cdf(std::uint64_t n, std::uint64_t k) {
    std::vector<mpz_class> row{1};
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<mpz_class> next(row.size() + 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    mpz_class acc = 0;
    for (std::uint64_t j = 0; j <= k && j < row.size(); ++j) acc += row[j];
    mpz_class total = 0;
    mpz_ui_pow_ui(total.get_mpz_t(), 2, n);
    Rational q(acc, total);
    q.canonicalize();
    return q;
}

}  // namespace testing_support
