#include "originlab/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "originlab/errors.hpp"
#include "originlab/wendel.hpp"

namespace originlab {

std::string to_string(ExperimentKind kind) { return kind == ExperimentKind::Hull ? "hull" : "lp"; }

ExperimentKind experiment_kind_from_string(const std::string& name) {
    if (name == "hull") return ExperimentKind::Hull;
    if (name == "lp") return ExperimentKind::LP;
    fail(ErrorKind::ConfigError, "unknown experiment kind '" + name + "'");
}

std::string to_string(TrialOutcome outcome) {
    switch (outcome) {
        case TrialOutcome::Outside: return "Outside";
        case TrialOutcome::Boundary: return "Boundary";
        case TrialOutcome::Interior: return "Interior";
        case TrialOutcome::Bounded: return "Bounded";
        case TrialOutcome::Unbounded: return "Unbounded";
    }
    return "Unknown";
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
    require(trials >= 1 && successes <= trials, ErrorKind::InvalidParameter, "wilson_interval needs 0 <= k <= n, n >= 1");
    require(confidence > 0.0 && confidence < 1.0, ErrorKind::InvalidParameter, "confidence must lie in (0, 1)");
    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, 1.0 - (1.0 - confidence) / 2.0);
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2n = z * z / n;
    const double center = (phat + z2n / 2.0) / (1.0 + z2n);
    const double half = z / (1.0 + z2n) * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n));
    Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (successes == 0) ci.lo = 0.0;
    if (successes == trials) ci.hi = 1.0;
    return ci;
}

void validate_config(const ExperimentConfig& cfg) {
    require(cfg.trials >= 1, ErrorKind::ConfigError, "trials must be >= 1");
    require(cfg.n >= 1, ErrorKind::ConfigError, "n must be >= 1");
    require(cfg.d >= 1, ErrorKind::ConfigError, "d must be >= 1");
    require(cfg.confidence > 0.0 && cfg.confidence < 1.0, ErrorKind::ConfigError, "confidence must lie in (0, 1)");
    validate_spec(cfg.spec);
    if (cfg.kind == ExperimentKind::LP && cfg.cost) {
        if (const auto* fixed = std::get_if<QVector>(&*cfg.cost)) {
            require(fixed->size() == cfg.d, ErrorKind::ConfigError, "cost vector must have d entries");
            require(!is_zero(*fixed), ErrorKind::ZeroCostVector, "cost vector must be nonzero");
        } else {
            validate_spec(std::get<DistributionSpec>(*cfg.cost));
        }
    }
}

std::vector<Tally> ExperimentResult::tallies() const {
    const std::uint64_t t = config.trials;
    auto make = [&](std::string name, std::uint64_t count) {
        return Tally{std::move(name), count, static_cast<double>(count) / static_cast<double>(t),
                     wilson_interval(count, t, config.confidence)};
    };
    if (config.kind == ExperimentKind::Hull) {
        return {make("outside", outside), make("boundary", boundary), make("interior", interior),
                make("contains", contains())};
    }
    return {make("bounded", bounded), make("unbounded", unbounded)};
}

namespace {

/// Runs fn(t) for every trial index on `threads` workers over contiguous
/// blocks. Results are written by index, so the merge order is fixed.
template <class Fn>
void for_each_trial(std::uint64_t trials, unsigned threads, Fn&& fn) {
    const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, trials);
    if (workers == 1) {
        for (std::uint64_t t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = trials * w / workers;
        const std::uint64_t end = trials * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::uint64_t t = begin; t < end; ++t) fn(t);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

PointSet sample_points(const EntrySampler& sampler, std::size_t n, std::size_t d, StreamKey key) {
    Stream stream(key);
    PointSet pts(n, QVector(d));
    for (auto& row : pts)
        for (auto& x : row) x = sampler.draw(stream);
    return pts;
}

TrialOutcome hull_outcome(OriginClass cls) {
    switch (cls) {
        case OriginClass::Outside: return TrialOutcome::Outside;
        case OriginClass::Boundary: return TrialOutcome::Boundary;
        case OriginClass::Interior: return TrialOutcome::Interior;
    }
    return TrialOutcome::Outside;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

unsigned effective_threads(const RunOptions& options) { return std::max(1U, options.threads); }

}  // namespace

ExperimentResult run_hull_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
    require(cfg.kind == ExperimentKind::Hull, ErrorKind::ConfigError, "run_hull_experiment needs kind = hull");
    validate_config(cfg);
    const auto start = std::chrono::steady_clock::now();
    const EntrySampler sampler(cfg.spec);
    std::vector<TrialOutcome> outcomes(cfg.trials);
    for_each_trial(cfg.trials, effective_threads(options), [&](std::uint64_t t) {
        const PointSet pts = sample_points(sampler, cfg.n, cfg.d, {cfg.master_seed, t});
        outcomes[t] = hull_outcome(classify_origin(pts).cls);
    });

    ExperimentResult res;
    res.config = cfg;
    for (const auto o : outcomes) {
        if (o == TrialOutcome::Outside) ++res.outside;
        if (o == TrialOutcome::Boundary) ++res.boundary;
        if (o == TrialOutcome::Interior) ++res.interior;
    }
    res.theory = p_exact(cfg.n, cfg.d);
    if (options.record_trials) res.per_trial = std::move(outcomes);
    res.runtime_seconds = seconds_since(start);
    return res;
}

ExperimentResult run_lp_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
    require(cfg.kind == ExperimentKind::LP, ErrorKind::ConfigError, "run_lp_experiment needs kind = lp");
    validate_config(cfg);
    const auto start = std::chrono::steady_clock::now();
    const EntrySampler sampler(cfg.spec);
    const CostSource cost = cfg.cost ? *cfg.cost : CostSource{unit_vector(cfg.d, 0)};

    std::vector<TrialOutcome> outcomes(cfg.trials);
    std::vector<std::uint8_t> violated(cfg.debug_sandwich ? cfg.trials : 0, 0);
    for_each_trial(cfg.trials, effective_threads(options), [&](std::uint64_t t) {
        const StreamKey key{cfg.master_seed, t};
        LPInstance inst{sample_matrix(sampler, cfg.n, cfg.d, key), sample_cost_vector(cost, cfg.d, key)};
        if (cfg.debug_sandwich) {
            const auto report = sandwich_check(inst);
            outcomes[t] = is_bounded_variant(report.bounded) ? TrialOutcome::Bounded : TrialOutcome::Unbounded;
            violated[t] = report.pass ? 0 : 1;
        } else {
            outcomes[t] = is_bounded_variant(is_bounded(inst)) ? TrialOutcome::Bounded : TrialOutcome::Unbounded;
        }
    });

    ExperimentResult res;
    res.config = cfg;
    for (const auto o : outcomes) {
        if (o == TrialOutcome::Bounded) ++res.bounded;
        if (o == TrialOutcome::Unbounded) ++res.unbounded;
    }
    if (cfg.debug_sandwich) {
        res.sandwich_checked = cfg.trials;
        res.sandwich_violations = static_cast<std::uint64_t>(std::count(violated.begin(), violated.end(), 1));
    }
    res.theory = p_exact(cfg.n + 1, cfg.d);
    if (options.record_trials) res.per_trial = std::move(outcomes);
    res.runtime_seconds = seconds_since(start);
    return res;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
    return cfg.kind == ExperimentKind::Hull ? run_hull_experiment(cfg, options) : run_lp_experiment(cfg, options);
}

EnumerationResult enumerate_exact(const DistributionSpec& spec, std::uint64_t n, std::uint64_t d, ExperimentKind kind,
                                  const std::optional<QVector>& cost) {
    require(n >= 1 && d >= 1, ErrorKind::ConfigError, "enumerate_exact needs n, d >= 1");
    validate_spec(spec);
    const auto atoms = spec.finite_atoms();
    const std::uint64_t cells = n * d;
    std::uint64_t states = 1;
    for (std::uint64_t i = 0; i < cells; ++i) {
        if (states > kEnumerationGuard / atoms.size()) {
            fail(ErrorKind::TooLargeToEnumerate, std::to_string(atoms.size()) + "^" + std::to_string(cells) +
                                                     " states exceed the guard of 10^7");
        }
        states *= atoms.size();
    }
    QVector c;
    if (kind == ExperimentKind::LP) {
        c = cost ? *cost : unit_vector(d, 0);
        require(c.size() == d, ErrorKind::ConfigError, "cost vector must have d entries");
        require(!is_zero(c), ErrorKind::ZeroCostVector, "cost vector must be nonzero");
    }

    EnumerationResult out;
    out.kind = kind;
    out.states = states;
    std::vector<std::size_t> digit(cells, 0);
    for (std::uint64_t s = 0; s < states; ++s) {
        Rational weight = 1;
        for (std::size_t k = 0; k < cells; ++k) weight *= atoms[digit[k]].weight;
        if (sgn(weight) != 0) {
            QMatrix m(n, d);
            for (std::size_t k = 0; k < cells; ++k) m(k / d, k % d) = atoms[digit[k]].value;
            if (kind == ExperimentKind::Hull) {
                switch (classify_origin(m).cls) {
                    case OriginClass::Outside: out.outside += weight; break;
                    case OriginClass::Boundary: out.boundary += weight; break;
                    case OriginClass::Interior: out.interior += weight; break;
                }
            } else if (is_bounded_variant(is_bounded(LPInstance{std::move(m), c}))) {
                out.bounded += weight;
            } else {
                out.unbounded += weight;
            }
        }
        for (std::size_t k = 0; k < cells; ++k) {
            if (++digit[k] < atoms.size()) break;
            digit[k] = 0;
        }
    }
    return out;
}

SweepResult sweep(std::uint64_t d, std::uint64_t n_min, std::uint64_t n_max, const DistributionSpec& spec,
                  std::uint64_t trials, std::uint64_t seed, const RunOptions& options, double confidence) {
    require(n_min >= 1 && n_min <= n_max, ErrorKind::ConfigError, "sweep needs a nonempty n range");
    SweepResult out;
    out.d = d;
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        ExperimentConfig cfg;
        cfg.kind = ExperimentKind::Hull;
        cfg.spec = spec;
        cfg.n = n;
        cfg.d = d;
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.confidence = confidence;
        const auto res = run_hull_experiment(cfg, options);
        SweepRow row;
        row.n = n;
        row.contains = res.contains();
        row.boundary = res.boundary;
        row.frequency = static_cast<double>(row.contains) / static_cast<double>(trials);
        row.ci = wilson_interval(row.contains, trials, confidence);
        row.theory = p_float(n, d);
        if (!out.empirical_crossing && 2 * row.contains >= trials) out.empirical_crossing = n;
        out.rows.push_back(row);
    }
    out.exact_crossing = window_estimate(d, 0.5);
    if (out.empirical_crossing) {
        out.offset_from_2d = static_cast<std::int64_t>(*out.empirical_crossing) - static_cast<std::int64_t>(2 * d);
    }
    return out;
}

DecayResult boundary_decay(const std::vector<std::uint64_t>& d_list, const DistributionSpec& spec, std::uint64_t trials,
                           std::uint64_t seed, const RunOptions& options, double confidence) {
    require(spec.has_finite_atoms(), ErrorKind::FiniteAtomsRequired,
            "boundary_decay needs a finite-atom law; continuous laws hit the boundary with probability 0");
    require(!d_list.empty(), ErrorKind::ConfigError, "boundary_decay needs at least one d");
    DecayResult out;
    for (const std::uint64_t d : d_list) {
        ExperimentConfig cfg;
        cfg.kind = ExperimentKind::Hull;
        cfg.spec = spec;
        cfg.n = 2 * d;
        cfg.d = d;
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.confidence = confidence;
        const auto res = run_hull_experiment(cfg, options);
        DecayRow row;
        row.d = d;
        row.n = 2 * d;
        row.boundary = res.boundary;
        row.frequency = static_cast<double>(res.boundary) / static_cast<double>(trials);
        row.ci = wilson_interval(res.boundary, trials, confidence);
        row.theory = p_float(2 * d, d);
        out.rows.push_back(row);
    }

    std::vector<std::pair<double, double>> fit;
    for (const auto& row : out.rows) {
        if (row.boundary >= 10) fit.emplace_back(static_cast<double>(row.d), std::log(row.frequency));
    }
    if (fit.size() >= 2) {
        double mx = 0.0;
        double my = 0.0;
        for (const auto& [x, y] : fit) {
            mx += x;
            my += y;
        }
        mx /= static_cast<double>(fit.size());
        my /= static_cast<double>(fit.size());
        double sxy = 0.0;
        double sxx = 0.0;
        for (const auto& [x, y] : fit) {
            sxy += (x - mx) * (y - my);
            sxx += (x - mx) * (x - mx);
        }
        if (sxx > 0.0) out.slope = sxy / sxx;
    }
    return out;
}

double critical_sparsity(std::uint64_t d) {
    require(d >= 1, ErrorKind::InvalidParameter, "critical_sparsity needs d >= 1");
    const double dd = static_cast<double>(d);
    return -std::expm1(-std::log(dd) / (2.0 * dd));
}

SparseResult sparse_threshold_experiment(std::uint64_t d, std::uint64_t n, const std::vector<double>& p_grid,
                                         std::uint64_t trials, std::uint64_t seed, const RunOptions& options,
                                         int precision_bits, bool normalized, double confidence) {
    require(!p_grid.empty(), ErrorKind::ConfigError, "p grid is empty");
    SparseResult out;
    out.d = d;
    out.n = n;
    out.normalized = normalized;
    out.precision_bits = precision_bits;
    out.critical_p = critical_sparsity(d);
    const double theory = p_float(n, d);
    for (const double p : p_grid) {
        require(p > 0.0 && p <= 1.0, ErrorKind::InvalidParameter, "sparsity p must lie in (0, 1]");
        ExperimentConfig cfg;
        cfg.kind = ExperimentKind::Hull;
        cfg.spec = DistributionSpec::bernoulli_gaussian(p, precision_bits, normalized);
        cfg.n = n;
        cfg.d = d;
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.confidence = confidence;
        const auto res = run_hull_experiment(cfg, options);
        SparseRow row;
        row.p = p;
        row.contains = res.contains();
        row.frequency = static_cast<double>(row.contains) / static_cast<double>(trials);
        row.ci = wilson_interval(row.contains, trials, confidence);
        row.theory = theory;
        row.abs_gap = std::abs(row.frequency - theory);
        out.rows.push_back(row);
    }
    return out;
}

AsymmetryReport asymmetry_experiment(std::uint64_t d, std::uint64_t n, const DistributionSpec& spec,
                                     std::uint64_t trials, std::uint64_t seed, const RunOptions& options,
                                     double confidence) {
    validate_spec(spec);
    require(spec.has_finite_atoms(), ErrorKind::FiniteAtomsRequired, "asymmetry_experiment needs a finite-atom law");
    const bool symmetric = spec.kind != DistKind::DiscreteGeneral;
    require(symmetric || spec.declared_mean_zero, ErrorKind::MeanZeroRequired, "law must be declared mean zero");
    const Rational mean = atom_mean(spec.finite_atoms());
    require(sgn(mean) == 0, ErrorKind::MeanZeroRequired, "law has mean " + to_string(mean) + ", not 0");

    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::Hull;
    cfg.spec = spec;
    cfg.n = n;
    cfg.d = d;
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.confidence = confidence;
    AsymmetryReport out;
    out.result = run_hull_experiment(cfg, options);
    const std::uint64_t hits = out.result.contains();
    out.frequency = static_cast<double>(hits) / static_cast<double>(trials);
    out.ci = wilson_interval(hits, trials, confidence);
    out.theory = p_float(n, d);
    out.gap = out.frequency - out.theory;
    return out;
}

}  // namespace originlab
