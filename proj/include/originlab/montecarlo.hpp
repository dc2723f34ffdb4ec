#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "originlab/hullgeom.hpp"
#include "originlab/lpbound.hpp"
#include "originlab/rational.hpp"
#include "originlab/sampling.hpp"

namespace originlab {

enum class ExperimentKind { Hull, LP };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Hull;
    DistributionSpec spec;
    std::uint64_t n = 1;
    std::uint64_t d = 1;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    /// LP only; defaults to e_1 when absent.
    std::optional<CostSource> cost;
    double confidence = 0.99;
    /// LP only: also run sandwich_check on every trial.
    bool debug_sandwich = false;
};

/// Execution knobs that never change the result.
struct RunOptions {
    unsigned threads = 1;
    /// Keep the per-trial outcome codes (for the audit CSV).
    bool record_trials = false;
};

/// Throws ConfigError / ZeroCostVector / spec validation errors.
void validate_config(const ExperimentConfig& cfg);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval; z is the two-sided standard normal quantile.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence);

/// Per-trial outcome code stored in ExperimentResult::per_trial.
enum class TrialOutcome : std::uint8_t { Outside = 0, Boundary = 1, Interior = 2, Bounded = 3, Unbounded = 4 };

std::string to_string(TrialOutcome outcome);

struct Tally {
    std::string name;
    std::uint64_t count = 0;
    double frequency = 0.0;
    Interval ci;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::uint64_t outside = 0;
    std::uint64_t boundary = 0;
    std::uint64_t interior = 0;
    std::uint64_t bounded = 0;
    std::uint64_t unbounded = 0;
    /// p_{n,d} for Hull, p_{n+1,d} for LP.
    Rational theory;
    std::uint64_t sandwich_checked = 0;
    std::uint64_t sandwich_violations = 0;
    double runtime_seconds = 0.0;
    std::vector<TrialOutcome> per_trial;

    std::uint64_t contains() const { return boundary + interior; }
    /// Hull: outside, boundary, interior, contains. LP: bounded, unbounded.
    std::vector<Tally> tallies() const;
};

ExperimentResult run_hull_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});
ExperimentResult run_lp_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});
ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

/// Exact class probabilities from every atom assignment of an n×d matrix.
struct EnumerationResult {
    ExperimentKind kind = ExperimentKind::Hull;
    std::uint64_t states = 0;
    Rational outside;
    Rational boundary;
    Rational interior;
    Rational bounded;
    Rational unbounded;

    Rational contains() const { return boundary + interior; }
};

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// Throws TooLargeToEnumerate when |atoms|^(n·d) exceeds the guard.
EnumerationResult enumerate_exact(const DistributionSpec& spec, std::uint64_t n, std::uint64_t d, ExperimentKind kind,
                                  const std::optional<QVector>& cost = std::nullopt);

struct SweepRow {
    std::uint64_t n = 0;
    std::uint64_t contains = 0;
    std::uint64_t boundary = 0;
    double frequency = 0.0;
    Interval ci;
    double theory = 0.0;
};

struct SweepResult {
    std::uint64_t d = 0;
    std::vector<SweepRow> rows;
    /// First n whose containment frequency reaches 1/2.
    std::optional<std::uint64_t> empirical_crossing;
    /// Smallest n with p_exact(n, d) >= 1/2.
    std::uint64_t exact_crossing = 0;
    std::optional<std::int64_t> offset_from_2d;
};

/// Hull experiments for n = n_min..n_max. Every n reuses the master seed
/// (common random numbers), which keeps the curve smooth across n.
SweepResult sweep(std::uint64_t d, std::uint64_t n_min, std::uint64_t n_max, const DistributionSpec& spec,
                  std::uint64_t trials, std::uint64_t seed, const RunOptions& options = {}, double confidence = 0.99);

struct DecayRow {
    std::uint64_t d = 0;
    std::uint64_t n = 0;
    std::uint64_t boundary = 0;
    double frequency = 0.0;
    Interval ci;
    double theory = 0.0;
};

struct DecayResult {
    std::vector<DecayRow> rows;
    /// Least-squares slope of ln(frequency) against d over rows with at
    /// least 10 boundary hits; absent with fewer than two such rows.
    std::optional<double> slope;
};

/// Boundary-class frequency at n = 2d. Requires a finite-atom law.
DecayResult boundary_decay(const std::vector<std::uint64_t>& d_list, const DistributionSpec& spec, std::uint64_t trials,
                           std::uint64_t seed, const RunOptions& options = {}, double confidence = 0.99);

struct SparseRow {
    double p = 0.0;
    std::uint64_t contains = 0;
    double frequency = 0.0;
    Interval ci;
    double theory = 0.0;
    double abs_gap = 0.0;
};

struct SparseResult {
    std::uint64_t d = 0;
    std::uint64_t n = 0;
    bool normalized = false;
    int precision_bits = 53;
    std::vector<SparseRow> rows;
    /// Solution of (1 - p)^{2d} = 1/d.
    double critical_p = 0.0;
};

/// Root of (1 - p)^{2d} = 1/d in (0, 1).
double critical_sparsity(std::uint64_t d);

SparseResult sparse_threshold_experiment(std::uint64_t d, std::uint64_t n, const std::vector<double>& p_grid,
                                         std::uint64_t trials, std::uint64_t seed, const RunOptions& options = {},
                                         int precision_bits = 53, bool normalized = false, double confidence = 0.99);

struct AsymmetryReport {
    ExperimentResult result;
    double frequency = 0.0;
    Interval ci;
    double theory = 0.0;
    /// frequency - p_{n,d}
    double gap = 0.0;
};

/// Hull experiment under a mean-zero (possibly asymmetric) finite law.
/// Throws MeanZeroRequired unless the law is declared and exactly mean zero.
AsymmetryReport asymmetry_experiment(std::uint64_t d, std::uint64_t n, const DistributionSpec& spec,
                                     std::uint64_t trials, std::uint64_t seed, const RunOptions& options = {},
                                     double confidence = 0.99);

}  // namespace originlab
