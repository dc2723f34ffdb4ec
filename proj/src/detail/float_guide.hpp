#pragma once

// Double-precision phase-1 simplex used only to *suggest* a basis or a dual
// vector. Every suggestion is re-derived and checked with exact arithmetic
// by the caller before it can influence a verdict.

#include <cstddef>
#include <vector>

namespace originlab::detail {

struct FloatPhase1 {
    enum class Status { Feasible, Infeasible, Failed };
    Status status = Status::Failed;
    /// Basic column per constraint row; values >= cols denote artificials.
    std::vector<std::size_t> basis;
    /// Basic values per row (Feasible).
    std::vector<double> values;
    /// Phase-1 duals y (Infeasible): yᵀM <= 0, yᵀb > 0 up to rounding.
    std::vector<double> duals;
};

/// Phase 1 on {x >= 0 : M x = b}; M is rows×cols row-major. Rows with a
/// negative right-hand side are flipped internally.
FloatPhase1 float_phase1(const std::vector<double>& m, std::size_t rows, std::size_t cols, std::vector<double> b);

}  // namespace originlab::detail
