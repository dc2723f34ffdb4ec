#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "originlab/exactq.hpp"
#include "originlab/rational.hpp"

namespace originlab {

using PointSet = std::vector<QVector>;

enum class OriginClass { Outside, Boundary, Interior };

std::string to_string(OriginClass cls);
OriginClass origin_class_from_string(const std::string& name);

/// Interior proof: strictly positive witness weights on `indices`, whose
/// points span R^d. Then cone{X_i : i in S} is a subspace of full rank.
struct SpanningSupport {
    std::vector<std::size_t> indices;
};

/// Interior proof: weights expressing +e_1, -e_1, ..., +e_d, -e_d (in that
/// order) as nonnegative combinations of the points.
struct ConeWitnesses {
    std::vector<QVector> lambdas;
};

using InteriorProof = std::variant<SpanningSupport, ConeWitnesses>;

struct HullVerdict {
    OriginClass cls = OriginClass::Outside;
    /// Convex weights with Σλ_i X_i = 0 (Boundary, Interior).
    std::optional<QVector> witness;
    /// Outside: ⟨X_i,y⟩ < 0 for all i. Boundary: y != 0, ⟨X_i,y⟩ <= 0.
    std::optional<QVector> separator;
    /// Present exactly for Interior.
    std::optional<InteriorProof> interior_proof;
};

struct Separator {
    QVector y;
};

/// Witness (convex weights) when 0 ∈ conv(points), else a strict separator.
using ContainmentResult = std::variant<Witness, Separator>;

ContainmentResult contains_origin(const PointSet& points);

struct InteriorResult {
    bool interior = false;
    /// yes: one witness per direction (+e_1, -e_1, ..., +e_d, -e_d).
    std::vector<QVector> cone_witnesses;
    /// no: y != 0 with ⟨X_i,y⟩ <= 0 for all i.
    QVector separator;
};

/// 0 ∈ int conv(points), decided by 2d exact cone-membership queries ±e_j.
InteriorResult interior_contains_origin(const PointSet& points);

enum class InteriorMethod {
    /// One strictly-positive-dependency LP plus an exact rank.
    StrictDependency,
    /// The 2d cone-membership queries of `interior_contains_origin`.
    ConeQueries,
};

struct ClassifyOptions {
    InteriorMethod method = InteriorMethod::StrictDependency;
    /// Let a floating-point simplex propose certificates, which are then
    /// checked exactly; anything it cannot certify goes down the exact path.
    bool float_guide = true;
};

/// Outside / Boundary / Interior with exact, pre-verified certificates.
HullVerdict classify_origin(const PointSet& points, const ClassifyOptions& options = {});
HullVerdict classify_origin(const QMatrix& rows, const ClassifyOptions& options = {});

/// Dimension of the affine hull (rank of X_i - X_1).
std::size_t affine_hull_dim(const PointSet& points);

/// Exact re-check of every certificate and of the class-consistency rules.
bool verify_verdict(const PointSet& points, const HullVerdict& verdict);

}  // namespace originlab
