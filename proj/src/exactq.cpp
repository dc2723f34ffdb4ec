#include "originlab/exactq.hpp"

#include <algorithm>

#include "detail/int_kernels.hpp"
#include "originlab/errors.hpp"

namespace originlab {
namespace detail {

IntMatrix<mpz_class> integer_rows(const QMatrix& m, std::span<const Rational> rhs, std::vector<mpz_class>* rhs_out,
                                  std::vector<mpz_class>* scales) {
    IntMatrix<mpz_class> out(m.rows(), m.cols());
    if (rhs_out) rhs_out->assign(m.rows(), mpz_class(0));
    if (scales) scales->assign(m.rows(), mpz_class(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (const auto& q : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        if (!rhs.empty()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[i].get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            out(i, j) = q.get_num() * (l / q.get_den());
        }
        if (rhs_out) (*rhs_out)[i] = rhs[i].get_num() * (l / rhs[i].get_den());
        if (scales) (*scales)[i] = l;
    }
    return out;
}

QVector nullspace_vector(const QMatrix& m) {
    // Reduced row echelon form over Q; the first free column gives the vector.
    QMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(a(i, c)) != 0) {
                p = i;
                break;
            }
        }
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    require(pivot_col.size() < cols, ErrorKind::ContractViolation, "nullspace_vector: matrix has full column rank");
    std::size_t free_col = 0;
    for (std::size_t c = 0, next = 0; c < cols; ++c) {
        if (next < pivot_col.size() && pivot_col[next] == c) {
            ++next;
            continue;
        }
        free_col = c;
        break;
    }
    QVector y(cols);
    y[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = -a(i, free_col);
    return y;
}

}  // namespace detail

std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const auto ints = detail::integer_rows(m, {}, nullptr, nullptr);
    return detail::with_fallback(ints, [](auto ops, auto mat) {
        return detail::bareiss_rank<decltype(ops)>(std::move(mat));
    });
}

FeasibilityOutcome solve_feasibility(const QMatrix& m, std::span<const Rational> b) {
    require(b.size() == m.rows(), ErrorKind::ContractViolation, "solve_feasibility: rhs has wrong length");

    std::vector<mpz_class> rhs;
    std::vector<mpz_class> scale;
    auto ints = detail::integer_rows(m, b, &rhs, &scale);
    // Flip rows so the right-hand side is nonnegative; the sign is folded into
    // the scale so the Farkas vector maps back with a single product.
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sgn(rhs[i]) < 0) {
            rhs[i] = -rhs[i];
            for (std::size_t j = 0; j < m.cols(); ++j) ints(i, j) = -ints(i, j);
            scale[i] = -scale[i];
        }
    }

    auto run = [&](auto ops, auto mat) -> FeasibilityOutcome {
        using Ops = decltype(ops);
        using Int = typename Ops::Int;
        std::vector<Int> bb;
        bb.reserve(rhs.size());
        for (const auto& v : rhs) bb.push_back(Ops::from(v));
        const auto res = detail::phase1_bland<Ops>(mat, bb);
        if (res.feasible) {
            Witness w;
            w.lambda.resize(m.cols());
            const mpz_class den = Ops::to_mpz(res.denom);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                w.lambda[j] = Rational(Ops::to_mpz(res.numer[j]), den);
                w.lambda[j].canonicalize();
            }
            return w;
        }
        FarkasCertificate f;
        f.y.resize(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) f.y[i] = Rational(Ops::to_mpz(res.farkas[i]) * scale[i]);
        return f;
    };
    return detail::with_fallback(ints, run);
}

bool verify_outcome(const QMatrix& m, std::span<const Rational> b, const FeasibilityOutcome& outcome) {
    if (b.size() != m.rows()) return false;
    if (const auto* w = std::get_if<Witness>(&outcome)) {
        if (w->lambda.size() != m.cols()) return false;
        if (std::any_of(w->lambda.begin(), w->lambda.end(), [](const Rational& q) { return sgn(q) < 0; })) {
            return false;
        }
        const QVector lhs = m.apply(w->lambda);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (lhs[i] != b[i]) return false;
        }
        return true;
    }
    const auto& f = std::get<FarkasCertificate>(outcome);
    if (f.y.size() != m.rows()) return false;
    const QVector ym = m.apply_left(f.y);
    if (std::any_of(ym.begin(), ym.end(), [](const Rational& q) { return sgn(q) > 0; })) return false;
    return sgn(dot(f.y, b)) > 0;
}

}  // namespace originlab
