#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "originlab/rational.hpp"

namespace originlab {

enum class DistKind { Rademacher, Gaussian, BernoulliGaussian, DiscreteSymmetric, DiscreteGeneral };

std::string to_string(DistKind kind);
DistKind dist_kind_from_string(const std::string& name);

struct Atom {
    Rational value;
    Rational weight;
};

/// Entry law for the i.i.d. matrix coordinates.
struct DistributionSpec {
    DistKind kind = DistKind::Rademacher;
    /// Bernoulli mask probability (BernoulliGaussian only).
    double p = 1.0;
    /// Continuous draws are rounded to m / 2^precision_bits.
    int precision_bits = 53;
    /// BernoulliGaussian: divide by sqrt(p) to get unit variance.
    bool normalized = false;
    std::vector<Atom> atoms;
    bool declared_mean_zero = false;
    bool allow_asymmetric = false;
    /// Informational subgaussian moment K; never enforced.
    std::optional<double> subgaussian_bound;

    static DistributionSpec rademacher();
    static DistributionSpec gaussian(int precision_bits = 53);
    static DistributionSpec bernoulli_gaussian(double p, int precision_bits = 53, bool normalized = false);
    static DistributionSpec discrete_symmetric(std::vector<Atom> atoms);
    static DistributionSpec discrete_general(std::vector<Atom> atoms, bool declared_mean_zero, bool allow_asymmetric);

    bool has_finite_atoms() const;
    /// Atom list for finite laws (Rademacher expands to ±1 with weight 1/2).
    std::vector<Atom> finite_atoms() const;
};

/// Name of the Gaussian generator, echoed into result headers.
inline constexpr const char* kGaussianMethod = "marsaglia-polar";

/// Throws SymmetryViolation, WeightError or InvalidParameter.
void validate_spec(const DistributionSpec& spec);

/// Exact mean of a finite-atom law.
Rational atom_mean(const std::vector<Atom>& atoms);

/// Identifies one trial's random stream.
struct StreamKey {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

/// Counter-based stream: the key (plus a lane tag separating the matrix
/// from the cost vector) is hashed through SplitMix64 to seed xoshiro256**.
/// No state is shared between keys.
class Stream {
public:
    explicit Stream(StreamKey key, std::uint64_t lane = 0);

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    bool bit();
    double gaussian();

private:
    std::array<std::uint64_t, 4> s_{};
    std::uint64_t bits_ = 0;
    int bits_left_ = 0;
    std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Validated scalar sampler for one spec; cheap to copy.
class EntrySampler {
public:
    explicit EntrySampler(const DistributionSpec& spec);

    Rational draw(Stream& stream) const;
    const DistributionSpec& spec() const noexcept { return spec_; }

private:
    DistributionSpec spec_;
    std::vector<Rational> values_;
    std::vector<std::uint64_t> thresholds_;  // cumulative weight * 2^64
    double inv_sqrt_p_ = 1.0;
};

/// n×d matrix of i.i.d. draws; bit-identical for identical (spec, n, d, key).
QMatrix sample_matrix(const DistributionSpec& spec, std::size_t n, std::size_t d, StreamKey key);
QMatrix sample_matrix(const EntrySampler& sampler, std::size_t n, std::size_t d, StreamKey key);

/// Either a fixed cost vector or a law to sample one from.
using CostSource = std::variant<QVector, DistributionSpec>;

/// Returns the fixed vector (ZeroCostVector if it is zero), or a sampled one
/// redrawn until nonzero.
QVector sample_cost_vector(const CostSource& source, std::size_t d, StreamKey key);

QVector unit_vector(std::size_t d, std::size_t axis);

}  // namespace originlab
