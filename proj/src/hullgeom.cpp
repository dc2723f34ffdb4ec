#include "originlab/hullgeom.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/float_guide.hpp"
#include "detail/int_kernels.hpp"
#include "detail/int_points.hpp"
#include "originlab/errors.hpp"

namespace originlab {

std::string to_string(OriginClass cls) {
    switch (cls) {
        case OriginClass::Outside: return "Outside";
        case OriginClass::Boundary: return "Boundary";
        case OriginClass::Interior: return "Interior";
    }
    return "Unknown";
}

OriginClass origin_class_from_string(const std::string& name) {
    if (name == "Outside") return OriginClass::Outside;
    if (name == "Boundary") return OriginClass::Boundary;
    if (name == "Interior") return OriginClass::Interior;
    fail(ErrorKind::ParseError, "unknown origin class '" + name + "'");
}

namespace {

using detail::FloatPhase1;
using detail::IntMatrix;
using detail::IntPoints;

std::size_t common_dimension(const PointSet& points) {
    require(!points.empty(), ErrorKind::ContractViolation, "point list is empty");
    const std::size_t d = points.front().size();
    require(d >= 1, ErrorKind::ContractViolation, "points must have dimension >= 1");
    for (const auto& p : points) require(p.size() == d, ErrorKind::ContractViolation, "inconsistent point dimensions");
    return d;
}

/// [X_1 ... X_m ; 1 ... 1] as a rational matrix.
QMatrix containment_matrix(const PointSet& points, std::size_t d) {
    QMatrix m(d + 1, points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) m(j, i) = points[i][j];
        m(d, i) = 1;
    }
    return m;
}

QMatrix points_as_columns(const PointSet& points, std::size_t d) {
    QMatrix m(d, points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m(j, i) = points[i][j];
    return m;
}

std::vector<std::size_t> positive_indices(const QVector& lambda) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (sgn(lambda[i]) > 0) out.push_back(i);
    }
    return out;
}

template <class Ops>
class HullSolver {
    using Int = typename Ops::Int;

public:
    HullSolver(const PointSet& points, const IntPoints& pts, const IntMatrix<Int>& y, const FloatPhase1* guide)
        : points_(points), pts_(pts), y_(y), guide_(guide) {}

    HullVerdict run(const ClassifyOptions& options) {
        std::optional<QVector> witness;
        if (guide_) {
            if (auto v = from_guide(witness)) return *v;
        }
        if (!witness) {
            const auto res = detail::phase1_bland<Ops>(containment_system(), unit_rhs(pts_.d + 1, pts_.d));
            if (!res.feasible) return outside(separator_from_farkas(res.farkas));
            witness = pts_.convex_weights(detail::to_mpz<Ops>(res.numer));
        }

        if (options.method == InteriorMethod::ConeQueries) {
            auto ir = interior_contains_origin(points_);
            if (ir.interior) {
                HullVerdict v{OriginClass::Interior, std::move(witness), std::nullopt,
                              ConeWitnesses{std::move(ir.cone_witnesses)}};
                return v;
            }
            return boundary(std::move(*witness), std::move(ir.separator));
        }

        const auto support = positive_indices(*witness);
        if (rank_of(support) == pts_.d) return interior(std::move(*witness), support);

        // Strictly positive dependency: μ >= 0 with Σ μ_i Y_i = -Σ Y_i.
        IntMatrix<Int> sys(pts_.d, pts_.m);
        std::vector<Int> rhs(pts_.d, Int(0));
        for (std::size_t i = 0; i < pts_.m; ++i) {
            for (std::size_t j = 0; j < pts_.d; ++j) {
                sys(j, i) = y_(i, j);
                rhs[j] = Ops::sub(rhs[j], y_(i, j));
            }
        }
        const auto strict = detail::phase1_signed<Ops>(std::move(sys), std::move(rhs));
        if (!strict.feasible) return boundary(std::move(*witness), to_rationals(strict.farkas));

        std::vector<std::size_t> all(pts_.m);
        for (std::size_t i = 0; i < pts_.m; ++i) all[i] = i;
        if (rank_of(all) == pts_.d) {
            std::vector<mpz_class> w(pts_.m);
            const mpz_class den = Ops::to_mpz(strict.denom);
            for (std::size_t i = 0; i < pts_.m; ++i) w[i] = den + Ops::to_mpz(strict.numer[i]);
            return interior(pts_.convex_weights(w), all);
        }
        const QMatrix rows = QMatrix::from_rows(points_);
        return boundary(std::move(*witness), detail::nullspace_vector(rows));
    }

private:
    static std::vector<Int> unit_rhs(std::size_t size, std::size_t axis) {
        std::vector<Int> b(size, Int(0));
        b[axis] = Int(1);
        return b;
    }

    IntMatrix<Int> containment_system() const {
        IntMatrix<Int> m(pts_.d + 1, pts_.m);
        for (std::size_t i = 0; i < pts_.m; ++i) {
            for (std::size_t j = 0; j < pts_.d; ++j) m(j, i) = y_(i, j);
            m(pts_.d, i) = Int(1);
        }
        return m;
    }

    std::size_t rank_of(const std::vector<std::size_t>& subset) const {
        if (subset.empty()) return 0;
        IntMatrix<Int> m(subset.size(), pts_.d);
        for (std::size_t r = 0; r < subset.size(); ++r)
            for (std::size_t j = 0; j < pts_.d; ++j) m(r, j) = y_(subset[r], j);
        return detail::bareiss_rank<Ops>(std::move(m));
    }

    QVector to_rationals(const std::vector<Int>& v) const {
        QVector out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(Ops::to_mpz(v[i]));
        return out;
    }

    QVector separator_from_farkas(const std::vector<Int>& farkas) const {
        // y = (z, t): ⟨Y_i, z⟩ + t <= 0 with t > 0, so z separates strictly.
        QVector z(pts_.d);
        for (std::size_t j = 0; j < pts_.d; ++j) z[j] = Rational(Ops::to_mpz(farkas[j]));
        return z;
    }

    std::optional<HullVerdict> from_guide(std::optional<QVector>& witness) {
        const std::size_t rows = pts_.d + 1;
        if (guide_->status == FloatPhase1::Status::Infeasible) {
            const auto& duals = guide_->duals;
            const double t = duals[pts_.d];
            if (!(t > 0.0)) return std::nullopt;
            std::vector<double> z(duals.begin(), duals.begin() + static_cast<std::ptrdiff_t>(pts_.d));
            for (auto& v : z) v /= t;
            const auto dir = detail::round_direction(z);
            if (!dir) return std::nullopt;
            for (std::size_t i = 0; i < pts_.m; ++i) {
                if (detail::dot_sign(y_, i, *dir) >= 0) return std::nullopt;
            }
            QVector sep(pts_.d);
            for (std::size_t j = 0; j < pts_.d; ++j) sep[j] = Rational(mpz_class(static_cast<long>((*dir)[j])));
            return outside(std::move(sep));
        }
        if (guide_->status != FloatPhase1::Status::Feasible) return std::nullopt;

        const auto& basis = guide_->basis;
        for (std::size_t c : basis) {
            if (c >= pts_.m) return std::nullopt;
        }
        IntMatrix<Int> sq(rows, rows);
        for (std::size_t c = 0; c < rows; ++c) {
            for (std::size_t j = 0; j < pts_.d; ++j) sq(j, c) = y_(basis[c], j);
            sq(pts_.d, c) = Int(1);
        }
        const auto sol = detail::bareiss_solve<Ops>(std::move(sq), unit_rhs(rows, pts_.d));
        if (!sol) return std::nullopt;
        std::vector<mpz_class> w(pts_.m, mpz_class(0));
        bool all_positive = true;
        for (std::size_t c = 0; c < rows; ++c) {
            const int s = Ops::sign(sol->numer[c]);
            if (s < 0) return std::nullopt;
            if (s == 0) all_positive = false;
            w[basis[c]] = Ops::to_mpz(sol->numer[c]);
        }
        witness = pts_.convex_weights(w);
        if (!all_positive) return std::nullopt;
        // d+1 affinely independent points (nonsingular system) with 0 strictly
        // inside their simplex: they span R^d.
        std::vector<std::size_t> support(basis.begin(), basis.end());
        std::sort(support.begin(), support.end());
        return interior(std::move(*witness), std::move(support));
    }

    HullVerdict outside(QVector separator) const {
        HullVerdict v;
        v.cls = OriginClass::Outside;
        v.separator = std::move(separator);
        return v;
    }
    HullVerdict boundary(QVector witness, QVector separator) const {
        HullVerdict v;
        v.cls = OriginClass::Boundary;
        v.witness = std::move(witness);
        v.separator = std::move(separator);
        return v;
    }
    HullVerdict interior(QVector witness, std::vector<std::size_t> support) const {
        HullVerdict v;
        v.cls = OriginClass::Interior;
        v.witness = std::move(witness);
        v.interior_proof = SpanningSupport{std::move(support)};
        return v;
    }

    const PointSet& points_;
    const IntPoints& pts_;
    const IntMatrix<Int>& y_;
    const FloatPhase1* guide_;
};

/// Integer-domain re-check of a verdict produced by HullSolver.
bool certified(const IntPoints& pts, const HullVerdict& v) {
    const auto& y = pts.big;
    // Clears denominators so the sums below stay in mpz.
    auto integral = [](const QVector& q) {
        mpz_class l = 1;
        for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> out(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) out[i] = q[i].get_num() * (l / q[i].get_den());
        return out;
    };
    auto weights_ok = [&](const QVector& lambda) {
        if (lambda.size() != pts.m) return false;
        Rational total = 0;
        QVector mu(pts.m);
        for (std::size_t i = 0; i < pts.m; ++i) {
            if (sgn(lambda[i]) < 0) return false;
            total += lambda[i];
            mu[i] = lambda[i] / pts.scale[i];
        }
        if (total != 1) return false;
        const auto u = integral(mu);
        mpz_class acc;
        for (std::size_t j = 0; j < pts.d; ++j) {
            acc = 0;
            for (std::size_t i = 0; i < pts.m; ++i) {
                if (sgn(u[i]) != 0) mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), y(i, j).get_mpz_t());
            }
            if (sgn(acc) != 0) return false;
        }
        return true;
    };
    auto max_sign = [&](const QVector& sep) {
        if (sep.size() != pts.d) return 1;
        const auto z = integral(sep);
        int worst = -1;
        mpz_class s;
        for (std::size_t i = 0; i < pts.m; ++i) {
            s = 0;
            for (std::size_t j = 0; j < pts.d; ++j) mpz_addmul(s.get_mpz_t(), z[j].get_mpz_t(), y(i, j).get_mpz_t());
            worst = std::max(worst, sgn(s));
        }
        return worst;
    };
    switch (v.cls) {
        case OriginClass::Outside: return v.separator && max_sign(*v.separator) < 0;
        case OriginClass::Boundary:
            return v.witness && weights_ok(*v.witness) && v.separator && !is_zero(*v.separator) &&
                   max_sign(*v.separator) <= 0;
        case OriginClass::Interior: {
            if (!v.witness || !weights_ok(*v.witness) || !v.interior_proof) return false;
            if (const auto* s = std::get_if<SpanningSupport>(&*v.interior_proof)) {
                return std::all_of(s->indices.begin(), s->indices.end(),
                                   [&](std::size_t i) { return sgn((*v.witness)[i]) > 0; });
            }
            return true;
        }
    }
    return false;
}

template <class Ops>
HullVerdict run_solver(const PointSet& points, const IntPoints& pts, const IntMatrix<typename Ops::Int>& y,
                       const FloatPhase1* guide, const ClassifyOptions& options) {
    return HullSolver<Ops>(points, pts, y, guide).run(options);
}

}  // namespace

ContainmentResult contains_origin(const PointSet& points) {
    const std::size_t d = common_dimension(points);
    QVector b(d + 1);
    b[d] = 1;
    const auto outcome = solve_feasibility(containment_matrix(points, d), b);
    if (const auto* w = std::get_if<Witness>(&outcome)) return *w;
    const auto& y = std::get<FarkasCertificate>(outcome).y;
    return Separator{QVector(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d))};
}

InteriorResult interior_contains_origin(const PointSet& points) {
    const std::size_t d = common_dimension(points);
    const QMatrix cols = points_as_columns(points, d);
    InteriorResult out;
    for (std::size_t j = 0; j < d; ++j) {
        for (int sign : {1, -1}) {
            QVector e(d);
            e[j] = sign;
            auto outcome = solve_feasibility(cols, e);
            if (auto* f = std::get_if<FarkasCertificate>(&outcome)) {
                // ⟨X_i, y⟩ <= 0 for all i and sign * y_j > 0, so y != 0.
                out.interior = false;
                out.cone_witnesses.clear();
                out.separator = std::move(f->y);
                return out;
            }
            out.cone_witnesses.push_back(std::move(std::get<Witness>(outcome).lambda));
        }
    }
    out.interior = true;
    return out;
}

HullVerdict classify_origin(const PointSet& points, const ClassifyOptions& options) {
    common_dimension(points);
    const IntPoints pts = IntPoints::from_rows(points);

    std::optional<FloatPhase1> guide;
    if (options.float_guide && options.method == InteriorMethod::StrictDependency) {
        std::vector<double> m((pts.d + 1) * pts.m);
        for (std::size_t i = 0; i < pts.m; ++i) {
            for (std::size_t j = 0; j < pts.d; ++j) m[j * pts.m + i] = pts.approx[i * pts.d + j];
            m[pts.d * pts.m + i] = 1.0;
        }
        std::vector<double> b(pts.d + 1, 0.0);
        b[pts.d] = 1.0;
        guide = detail::float_phase1(m, pts.d + 1, pts.m, std::move(b));
    }
    const FloatPhase1* g = guide ? &*guide : nullptr;

    HullVerdict verdict;
    bool done = false;
    if (pts.small) {
        try {
            verdict = run_solver<detail::I64>(points, pts, *pts.small, g, options);
            done = true;
        } catch (const detail::Overflow&) {
        }
    }
    if (!done) verdict = run_solver<detail::Big>(points, pts, pts.big, g, options);
    if (!certified(pts, verdict)) throw std::logic_error("classify_origin produced an invalid certificate");
    return verdict;
}

HullVerdict classify_origin(const QMatrix& rows, const ClassifyOptions& options) {
    return classify_origin(rows.to_rows(), options);
}

std::size_t affine_hull_dim(const PointSet& points) {
    const std::size_t d = common_dimension(points);
    if (points.size() == 1) return 0;
    QMatrix diff(points.size() - 1, d);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) diff(i - 1, j) = points[i][j] - points[0][j];
    return rank(diff);
}

bool verify_verdict(const PointSet& points, const HullVerdict& verdict) {
    if (points.empty()) return false;
    const std::size_t d = points.front().size();
    if (d == 0) return false;
    for (const auto& p : points) {
        if (p.size() != d) return false;
    }
    const std::size_t m = points.size();

    auto witness_ok = [&](const QVector& lambda) {
        if (lambda.size() != m) return false;
        Rational total = 0;
        QVector acc(d);
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(lambda[i]) < 0) return false;
            total += lambda[i];
            for (std::size_t j = 0; j < d; ++j) acc[j] += lambda[i] * points[i][j];
        }
        return total == 1 && is_zero(acc);
    };
    // Largest sign of ⟨X_i, y⟩ over the points.
    auto max_sign = [&](const QVector& y) {
        int worst = -1;
        for (const auto& p : points) worst = std::max(worst, sgn(dot(p, y)));
        return worst;
    };

    switch (verdict.cls) {
        case OriginClass::Outside:
            if (verdict.witness || verdict.interior_proof || !verdict.separator) return false;
            return verdict.separator->size() == d && max_sign(*verdict.separator) < 0;
        case OriginClass::Boundary:
            if (verdict.interior_proof || !verdict.witness || !verdict.separator) return false;
            if (!witness_ok(*verdict.witness)) return false;
            return verdict.separator->size() == d && !is_zero(*verdict.separator) && max_sign(*verdict.separator) <= 0;
        case OriginClass::Interior: {
            if (verdict.separator || !verdict.witness || !verdict.interior_proof) return false;
            if (!witness_ok(*verdict.witness)) return false;
            if (const auto* s = std::get_if<SpanningSupport>(&*verdict.interior_proof)) {
                if (s->indices.empty()) return false;
                std::vector<QVector> rows;
                for (std::size_t i : s->indices) {
                    if (i >= m || sgn((*verdict.witness)[i]) <= 0) return false;
                    rows.push_back(points[i]);
                }
                return rank(QMatrix::from_rows(rows)) == d;
            }
            const auto& cw = std::get<ConeWitnesses>(*verdict.interior_proof);
            if (cw.lambdas.size() != 2 * d) return false;
            const QMatrix cols = points_as_columns(points, d);
            for (std::size_t k = 0; k < 2 * d; ++k) {
                QVector e(d);
                e[k / 2] = (k % 2 == 0) ? 1 : -1;
                if (!verify_outcome(cols, e, Witness{cw.lambdas[k]})) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace originlab
