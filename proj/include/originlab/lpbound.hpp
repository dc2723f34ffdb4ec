#pragma once

#include <variant>

#include "originlab/hullgeom.hpp"
#include "originlab/rational.hpp"

namespace originlab {

/// max ⟨x, c⟩ subject to A x <= 1 (the all-ones right-hand side is implicit).
struct LPInstance {
    QMatrix a;
    QVector c;
};

/// c = Σ λ_i row_i(A) with λ >= 0: every feasible x has ⟨x,c⟩ <= Σ λ_i.
struct Bounded {
    QVector lambda;
};

/// A y <= 0 and ⟨c, y⟩ > 0: x = t·y is feasible for all t >= 0.
struct Unbounded {
    QVector ray;
};

using BoundednessVerdict = std::variant<Bounded, Unbounded>;

inline bool is_bounded_variant(const BoundednessVerdict& v) { return std::holds_alternative<Bounded>(v); }

/// Throws ZeroCostVector for c = 0 and ContractViolation for bad shapes.
void validate_instance(const LPInstance& inst);

struct LpOptions {
    bool float_guide = true;
};

/// Bounded iff c lies in the cone of the rows of A (x = 0 is always feasible).
BoundednessVerdict is_bounded(const LPInstance& inst, const LpOptions& options = {});

bool verify_boundedness(const LPInstance& inst, const BoundednessVerdict& verdict);

struct ConsistencyReport {
    /// classify_origin(rows(A) ∪ {-c})
    HullVerdict hull;
    BoundednessVerdict bounded;
    /// (Interior ⟹ Bounded) and (Bounded ⟹ not Outside)
    bool pass = false;
};

ConsistencyReport sandwich_check(const LPInstance& inst);

}  // namespace originlab
