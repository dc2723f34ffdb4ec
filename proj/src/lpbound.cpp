#include "originlab/lpbound.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/float_guide.hpp"
#include "detail/int_kernels.hpp"
#include "detail/int_points.hpp"
#include "originlab/errors.hpp"
#include "originlab/exactq.hpp"

namespace originlab {

void validate_instance(const LPInstance& inst) {
    require(inst.a.rows() >= 1 && inst.a.cols() >= 1, ErrorKind::ContractViolation, "A must be at least 1x1");
    require(inst.c.size() == inst.a.cols(), ErrorKind::ContractViolation, "c must have one entry per column of A");
    require(!is_zero(inst.c), ErrorKind::ZeroCostVector, "cost vector must be nonzero");
}

namespace {

using detail::FloatPhase1;
using detail::IntMatrix;
using detail::IntPoints;

/// Tries to certify the verdict from floating-point suggestions. The point
/// set holds the rows of A followed by c as its last entry.
template <class Ops>
std::optional<BoundednessVerdict> guided(const IntPoints& pts, const IntMatrix<typename Ops::Int>& y) {
    using Int = typename Ops::Int;
    const std::size_t n = pts.m - 1;
    const std::size_t d = pts.d;

    // Cone membership A^T λ = c.
    std::vector<double> cone((d) * n);
    std::vector<double> rhs(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) cone[j * n + i] = pts.approx[i * d + j];
    for (std::size_t j = 0; j < d; ++j) rhs[j] = pts.approx[n * d + j];
    const auto lp = detail::float_phase1(cone, d, n, rhs);

    if (lp.status == FloatPhase1::Status::Feasible) {
        if (std::any_of(lp.basis.begin(), lp.basis.end(), [&](std::size_t c) { return c >= n; })) return std::nullopt;
        IntMatrix<Int> sq(d, d);
        std::vector<Int> b(d);
        for (std::size_t col = 0; col < d; ++col)
            for (std::size_t j = 0; j < d; ++j) sq(j, col) = y(lp.basis[col], j);
        for (std::size_t j = 0; j < d; ++j) b[j] = y(n, j);
        const auto sol = detail::bareiss_solve<Ops>(std::move(sq), std::move(b));
        if (!sol) return std::nullopt;
        // Σ μ_i Y_i = C with Y_i = s_i a_i and C = s_c c, so λ_i = μ_i s_i / s_c.
        Bounded out;
        out.lambda.assign(n, Rational(0));
        const mpz_class den = Ops::to_mpz(sol->denom);
        for (std::size_t col = 0; col < d; ++col) {
            if (Ops::sign(sol->numer[col]) < 0) return std::nullopt;
            Rational mu(Ops::to_mpz(sol->numer[col]), den);
            mu.canonicalize();
            out.lambda[lp.basis[col]] += mu * pts.scale[lp.basis[col]] / pts.scale[n];
        }
        return out;
    }
    if (lp.status != FloatPhase1::Status::Infeasible) return std::nullopt;

    // Strict separation of rows(A) ∪ {-c} from the origin gives a ray with
    // A y < 0 and ⟨c, y⟩ > 0.
    std::vector<double> hull((d + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
        const double sign = i == n ? -1.0 : 1.0;
        for (std::size_t j = 0; j < d; ++j) hull[j * (n + 1) + i] = sign * pts.approx[i * d + j];
        hull[d * (n + 1) + i] = 1.0;
    }
    std::vector<double> e(d + 1, 0.0);
    e[d] = 1.0;
    const auto sep = detail::float_phase1(hull, d + 1, n + 1, e);
    if (sep.status != FloatPhase1::Status::Infeasible || !(sep.duals[d] > 0.0)) return std::nullopt;
    std::vector<double> z(sep.duals.begin(), sep.duals.begin() + static_cast<std::ptrdiff_t>(d));
    for (auto& v : z) v /= sep.duals[d];
    const auto dir = detail::round_direction(z);
    if (!dir) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        if (detail::dot_sign(y, i, *dir) >= 0) return std::nullopt;
    }
    if (detail::dot_sign(y, n, *dir) <= 0) return std::nullopt;
    Unbounded out;
    out.ray.resize(d);
    for (std::size_t j = 0; j < d; ++j) out.ray[j] = Rational(mpz_class(static_cast<long>((*dir)[j])));
    return out;
}

/// Fraction-free re-check of a guided verdict against the scaled points.
bool certified(const IntPoints& pts, const BoundednessVerdict& verdict) {
    const std::size_t n = pts.m - 1;
    const auto& y = pts.big;
    mpz_class acc;
    if (const auto* b = std::get_if<Bounded>(&verdict)) {
        if (b->lambda.size() != n) return false;
        // Σ λ_i a_i = c  ⟺  Σ (λ_i s_c / s_i) Y_i = C.
        QVector mu(n);
        mpz_class l = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(b->lambda[i]) < 0) return false;
            mu[i] = b->lambda[i] * pts.scale[n] / pts.scale[i];
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mu[i].get_den_mpz_t());
        }
        std::vector<mpz_class> u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = mu[i].get_num() * (l / mu[i].get_den());
        for (std::size_t j = 0; j < pts.d; ++j) {
            acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (sgn(u[i]) != 0) mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), y(i, j).get_mpz_t());
            }
            if (acc != l * y(n, j)) return false;
        }
        return true;
    }
    const auto& ray = std::get<Unbounded>(verdict).ray;
    if (ray.size() != pts.d) return false;
    std::vector<mpz_class> z(pts.d);
    for (std::size_t j = 0; j < pts.d; ++j) {
        if (ray[j].get_den() != 1) return false;
        z[j] = ray[j].get_num();
    }
    for (std::size_t i = 0; i <= n; ++i) {
        acc = 0;
        for (std::size_t j = 0; j < pts.d; ++j) mpz_addmul(acc.get_mpz_t(), z[j].get_mpz_t(), y(i, j).get_mpz_t());
        if (i < n ? sgn(acc) > 0 : sgn(acc) <= 0) return false;
    }
    return true;
}

BoundednessVerdict exact_decision(const LPInstance& inst) {
    const auto outcome = solve_feasibility(inst.a.transposed(), inst.c);
    if (const auto* w = std::get_if<Witness>(&outcome)) return Bounded{w->lambda};
    return Unbounded{std::get<FarkasCertificate>(outcome).y};
}

}  // namespace

BoundednessVerdict is_bounded(const LPInstance& inst, const LpOptions& options) {
    validate_instance(inst);
    if (options.float_guide) {
        std::vector<QVector> pts_rows = inst.a.to_rows();
        pts_rows.push_back(inst.c);
        const IntPoints pts = IntPoints::from_rows(pts_rows);
        std::optional<BoundednessVerdict> v;
        if (pts.small) {
            try {
                v = guided<detail::I64>(pts, *pts.small);
            } catch (const detail::Overflow&) {
                v = guided<detail::Big>(pts, pts.big);
            }
        } else {
            v = guided<detail::Big>(pts, pts.big);
        }
        if (v) {
            if (!certified(pts, *v)) throw std::logic_error("is_bounded produced an invalid certificate");
            return *v;
        }
    }
    return exact_decision(inst);
}

bool verify_boundedness(const LPInstance& inst, const BoundednessVerdict& verdict) {
    if (inst.c.size() != inst.a.cols()) return false;
    if (const auto* b = std::get_if<Bounded>(&verdict)) {
        if (b->lambda.size() != inst.a.rows()) return false;
        if (std::any_of(b->lambda.begin(), b->lambda.end(), [](const Rational& q) { return sgn(q) < 0; })) {
            return false;
        }
        return inst.a.apply_left(b->lambda) == inst.c;
    }
    const auto& u = std::get<Unbounded>(verdict);
    if (u.ray.size() != inst.a.cols()) return false;
    const QVector ay = inst.a.apply(u.ray);
    if (std::any_of(ay.begin(), ay.end(), [](const Rational& q) { return sgn(q) > 0; })) return false;
    return sgn(dot(inst.c, u.ray)) > 0;
}

ConsistencyReport sandwich_check(const LPInstance& inst) {
    validate_instance(inst);
    PointSet points = inst.a.to_rows();
    QVector neg_c = inst.c;
    for (auto& q : neg_c) q = -q;
    points.push_back(std::move(neg_c));

    ConsistencyReport report{classify_origin(points), is_bounded(inst), false};
    const bool bounded = is_bounded_variant(report.bounded);
    const bool interior_implies_bounded = report.hull.cls != OriginClass::Interior || bounded;
    const bool bounded_implies_contained = !bounded || report.hull.cls != OriginClass::Outside;
    report.pass = interior_implies_bounded && bounded_implies_contained;
    return report;
}

}  // namespace originlab
