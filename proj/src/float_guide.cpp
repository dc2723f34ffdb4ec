#include "detail/float_guide.hpp"

#include <cmath>

namespace originlab::detail {

FloatPhase1 float_phase1(const std::vector<double>& m, std::size_t rows, std::size_t cols, std::vector<double> b) {
    constexpr double kPriceTol = 1e-9;
    constexpr double kPivotTol = 1e-9;
    const std::size_t width = cols + rows + 1;
    const std::size_t rhs = cols + rows;

    std::vector<double> flip(rows, 1.0);
    std::vector<double> t((rows + 1) * width, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * width + j]; };
    double scale = 1.0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0) flip[i] = -1.0;
        for (std::size_t j = 0; j < cols; ++j) {
            at(i, j) = flip[i] * m[i * cols + j];
            at(rows, j) -= at(i, j);
        }
        at(i, cols + i) = 1.0;
        at(i, rhs) = flip[i] * b[i];
        at(rows, rhs) -= at(i, rhs);
        scale += at(i, rhs);
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

    FloatPhase1 out;
    const std::size_t max_iter = 50 * (rows + cols) + 100;
    // Dantzig pricing first; switch to Bland's rule if progress stalls.
    const std::size_t bland_after = 10 * (rows + cols) + 20;
    std::size_t iter = 0;
    for (;; ++iter) {
        if (iter > max_iter) return out;
        std::size_t enter = rhs;
        double best = -kPriceTol;
        for (std::size_t j = 0; j < rhs; ++j) {
            const double rc = at(rows, j);
            if (iter >= bland_after) {
                if (rc < -kPriceTol) {
                    enter = j;
                    break;
                }
            } else if (rc < best) {
                best = rc;
                enter = j;
            }
        }
        if (enter == rhs) break;

        std::size_t leave = rows;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double a = at(i, enter);
            if (a <= kPivotTol) continue;
            const double ratio = at(i, rhs) / a;
            if (leave == rows || ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 && a > at(leave, enter))) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows) return out;

        const double piv = at(leave, enter);
        for (std::size_t j = 0; j < width; ++j) at(leave, j) /= piv;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            const double f = at(i, enter);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width; ++j) at(i, j) -= f * at(leave, j);
            at(i, enter) = 0.0;
        }
        basis[leave] = enter;
    }

    const double infeasibility = -at(rows, rhs);
    if (!std::isfinite(infeasibility)) return out;
    out.basis = basis;
    if (infeasibility <= 1e-9 * scale) {
        out.status = FloatPhase1::Status::Feasible;
        out.values.resize(rows);
        for (std::size_t i = 0; i < rows; ++i) out.values[i] = at(i, rhs);
    } else {
        out.status = FloatPhase1::Status::Infeasible;
        out.duals.resize(rows);
        for (std::size_t i = 0; i < rows; ++i) out.duals[i] = flip[i] * (1.0 - at(rows, cols + i));
    }
    return out;
}

}  // namespace originlab::detail
