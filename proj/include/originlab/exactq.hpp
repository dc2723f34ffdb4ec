#pragma once

#include <cstddef>
#include <variant>

#include "originlab/rational.hpp"

namespace originlab {

/// λ >= 0 with M λ = b.
struct Witness {
    QVector lambda;
};

/// y with yᵀM <= 0 componentwise and yᵀb > 0.
struct FarkasCertificate {
    QVector y;
};

using FeasibilityOutcome = std::variant<Witness, FarkasCertificate>;

/// Exact rank over the rationals (fraction-free elimination).
std::size_t rank(const QMatrix& m);

/// Decides whether {λ >= 0 : M λ = b} is nonempty. Exact phase-1 simplex with
/// Bland's rule, so it terminates on degenerate input. Throws
/// ContractViolation when b does not have M.rows() entries.
FeasibilityOutcome solve_feasibility(const QMatrix& m, std::span<const Rational> b);

/// Re-checks the defining (in)equalities of `outcome` with exact arithmetic.
bool verify_outcome(const QMatrix& m, std::span<const Rational> b, const FeasibilityOutcome& outcome);

}  // namespace originlab
