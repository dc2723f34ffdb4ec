#include "originlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "originlab/errors.hpp"

namespace originlab {

std::string to_string(DistKind kind) {
    switch (kind) {
        case DistKind::Rademacher: return "rademacher";
        case DistKind::Gaussian: return "gaussian";
        case DistKind::BernoulliGaussian: return "bernoulli_gaussian";
        case DistKind::DiscreteSymmetric: return "discrete_symmetric";
        case DistKind::DiscreteGeneral: return "discrete_general";
    }
    return "unknown";
}

DistKind dist_kind_from_string(const std::string& name) {
    if (name == "rademacher") return DistKind::Rademacher;
    if (name == "gaussian") return DistKind::Gaussian;
    if (name == "bernoulli_gaussian" || name == "bg") return DistKind::BernoulliGaussian;
    if (name == "discrete_symmetric") return DistKind::DiscreteSymmetric;
    if (name == "discrete_general") return DistKind::DiscreteGeneral;
    fail(ErrorKind::ConfigError, "unknown distribution kind '" + name + "'");
}

DistributionSpec DistributionSpec::rademacher() { return {}; }

DistributionSpec DistributionSpec::gaussian(int precision_bits) {
    DistributionSpec s;
    s.kind = DistKind::Gaussian;
    s.precision_bits = precision_bits;
    return s;
}

DistributionSpec DistributionSpec::bernoulli_gaussian(double p, int precision_bits, bool normalized) {
    DistributionSpec s;
    s.kind = DistKind::BernoulliGaussian;
    s.p = p;
    s.precision_bits = precision_bits;
    s.normalized = normalized;
    return s;
}

DistributionSpec DistributionSpec::discrete_symmetric(std::vector<Atom> atoms) {
    DistributionSpec s;
    s.kind = DistKind::DiscreteSymmetric;
    s.atoms = std::move(atoms);
    s.declared_mean_zero = true;
    return s;
}

DistributionSpec DistributionSpec::discrete_general(std::vector<Atom> atoms, bool declared_mean_zero,
                                                    bool allow_asymmetric) {
    DistributionSpec s;
    s.kind = DistKind::DiscreteGeneral;
    s.atoms = std::move(atoms);
    s.declared_mean_zero = declared_mean_zero;
    s.allow_asymmetric = allow_asymmetric;
    return s;
}

bool DistributionSpec::has_finite_atoms() const {
    return kind == DistKind::Rademacher || kind == DistKind::DiscreteSymmetric || kind == DistKind::DiscreteGeneral;
}

std::vector<Atom> DistributionSpec::finite_atoms() const {
    if (kind == DistKind::Rademacher) return {{Rational(-1), Rational(1, 2)}, {Rational(1), Rational(1, 2)}};
    require(has_finite_atoms(), ErrorKind::FiniteAtomsRequired, to_string(kind) + " has no finite atom list");
    return atoms;
}

Rational atom_mean(const std::vector<Atom>& atoms) {
    Rational mean = 0;
    for (const auto& a : atoms) mean += a.value * a.weight;
    return mean;
}

namespace {

void validate_weights(const std::vector<Atom>& atoms) {
    require(!atoms.empty(), ErrorKind::WeightError, "atom list is empty");
    Rational total = 0;
    for (const auto& a : atoms) {
        require(sgn(a.weight) >= 0, ErrorKind::WeightError, "negative atom weight " + to_string(a.weight));
        total += a.weight;
    }
    require(total == 1, ErrorKind::WeightError, "atom weights sum to " + to_string(total) + ", not 1");
}

void validate_precision(int bits) {
    require(bits >= 1 && bits <= 1000, ErrorKind::InvalidParameter, "precision_bits must lie in [1, 1000]");
}

}  // namespace

void validate_spec(const DistributionSpec& spec) {
    switch (spec.kind) {
        case DistKind::Rademacher: return;
        case DistKind::Gaussian: validate_precision(spec.precision_bits); return;
        case DistKind::BernoulliGaussian:
            validate_precision(spec.precision_bits);
            require(spec.p >= 0.0 && spec.p <= 1.0, ErrorKind::InvalidParameter, "p must lie in [0, 1]");
            require(!spec.normalized || spec.p > 0.0, ErrorKind::InvalidParameter, "normalization needs p > 0");
            return;
        case DistKind::DiscreteSymmetric: {
            validate_weights(spec.atoms);
            std::map<Rational, Rational> mass;
            for (const auto& a : spec.atoms) mass[a.value] += a.weight;
            for (const auto& [value, weight] : mass) {
                const auto it = mass.find(-value);
                const Rational mirrored = it == mass.end() ? Rational(0) : it->second;
                require(mirrored == weight, ErrorKind::SymmetryViolation,
                        "atom " + to_string(value) + " has weight " + to_string(weight) + " but its negation has " +
                            to_string(mirrored));
            }
            return;
        }
        case DistKind::DiscreteGeneral:
            validate_weights(spec.atoms);
            require(spec.allow_asymmetric, ErrorKind::SymmetryViolation,
                    "discrete_general laws require allow_asymmetric = true");
            return;
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Stream::Stream(StreamKey key, std::uint64_t lane) {
    std::uint64_t h = splitmix64(key.master_seed);
    h = splitmix64(h ^ key.trial_index);
    h = splitmix64(h ^ (lane * 0xd1b54a32d192ed03ULL));
    for (auto& word : s_) {
        h = splitmix64(h);
        word = h;
    }
}

std::uint64_t Stream::next() {
    // xoshiro256**
    const auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Stream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Stream::bit() {
    if (bits_left_ == 0) {
        bits_ = next();
        bits_left_ = 64;
    }
    const bool b = (bits_ & 1U) != 0;
    bits_ >>= 1;
    --bits_left_;
    return b;
}

double Stream::gaussian() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    return u * f;
}

EntrySampler::EntrySampler(const DistributionSpec& spec) : spec_(spec) {
    validate_spec(spec_);
    if (spec_.kind == DistKind::DiscreteSymmetric || spec_.kind == DistKind::DiscreteGeneral) {
        Rational cum = 0;
        mpz_class two64;
        mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
        for (const auto& a : spec_.atoms) {
            values_.push_back(a.value);
            cum += a.weight;
            const Rational scaled = cum * two64;
            mpz_class t = scaled.get_num() / scaled.get_den();
            if (t >= two64) t = two64 - 1;
            thresholds_.push_back(mpz_get_ui(t.get_mpz_t()));
        }
    }
    if (spec_.kind == DistKind::BernoulliGaussian && spec_.normalized) inv_sqrt_p_ = 1.0 / std::sqrt(spec_.p);
}

Rational EntrySampler::draw(Stream& stream) const {
    switch (spec_.kind) {
        case DistKind::Rademacher: return stream.bit() ? Rational(1) : Rational(-1);
        case DistKind::Gaussian: return dyadic_round(stream.gaussian(), spec_.precision_bits);
        case DistKind::BernoulliGaussian: {
            if (!(stream.uniform() < spec_.p)) return Rational(0);
            return dyadic_round(stream.gaussian() * inv_sqrt_p_, spec_.precision_bits);
        }
        case DistKind::DiscreteSymmetric:
        case DistKind::DiscreteGeneral: {
            const std::uint64_t u = stream.next();
            for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
                if (u < thresholds_[i]) return values_[i];
            }
            return values_.back();
        }
    }
    return Rational(0);
}

QMatrix sample_matrix(const EntrySampler& sampler, std::size_t n, std::size_t d, StreamKey key) {
    Stream stream(key);
    QMatrix m(n, d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = sampler.draw(stream);
    return m;
}

QMatrix sample_matrix(const DistributionSpec& spec, std::size_t n, std::size_t d, StreamKey key) {
    return sample_matrix(EntrySampler(spec), n, d, key);
}

QVector unit_vector(std::size_t d, std::size_t axis) {
    require(axis < d, ErrorKind::ContractViolation, "unit_vector: axis out of range");
    QVector e(d);
    e[axis] = 1;
    return e;
}

QVector sample_cost_vector(const CostSource& source, std::size_t d, StreamKey key) {
    if (const auto* fixed = std::get_if<QVector>(&source)) {
        require(fixed->size() == d, ErrorKind::ContractViolation, "cost vector has wrong dimension");
        require(!is_zero(*fixed), ErrorKind::ZeroCostVector, "cost vector must be nonzero");
        return *fixed;
    }
    const EntrySampler sampler(std::get<DistributionSpec>(source));
    Stream stream(key, 1);
    constexpr int kMaxAttempts = 1 << 16;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        QVector c(d);
        for (auto& x : c) x = sampler.draw(stream);
        if (!is_zero(c)) return c;
    }
    fail(ErrorKind::ZeroCostVector, "cost law produced only zero vectors");
}

}  // namespace originlab
