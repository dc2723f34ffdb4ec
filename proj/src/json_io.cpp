#include "originlab/json_io.hpp"

#include <cstdio>

#include "originlab/errors.hpp"
#include "originlab/wendel.hpp"

namespace originlab {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
        return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    fail(ErrorKind::ParseError, "expected a rational string or integer, got " + j.dump());
}

Json vector_to_json(const QVector& v) {
    Json arr = Json::array();
    for (const auto& q : v) arr.push_back(rational_to_json(q));
    return arr;
}

QVector vector_from_json(const Json& j) {
    require(j.is_array(), ErrorKind::ParseError, "expected an array of rationals");
    QVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

namespace {

bool is_continuous(DistKind kind) { return kind == DistKind::Gaussian || kind == DistKind::BernoulliGaussian; }

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return fallback;
    return it->get<T>();
}

}  // namespace

Json spec_to_json(const DistributionSpec& spec) {
    Json j;
    j["kind"] = to_string(spec.kind);
    if (is_continuous(spec.kind)) {
        j["precision_bits"] = spec.precision_bits;
        j["gaussian_method"] = kGaussianMethod;
    }
    if (spec.kind == DistKind::BernoulliGaussian) {
        j["p"] = spec.p;
        j["normalized"] = spec.normalized;
    }
    if (spec.kind == DistKind::DiscreteSymmetric || spec.kind == DistKind::DiscreteGeneral) {
        Json atoms = Json::array();
        for (const auto& a : spec.atoms) atoms.push_back({{"value", to_string(a.value)}, {"weight", to_string(a.weight)}});
        j["atoms"] = atoms;
    }
    if (spec.kind == DistKind::DiscreteGeneral) {
        j["allow_asymmetric"] = spec.allow_asymmetric;
        j["declared_mean_zero"] = spec.declared_mean_zero;
    }
    if (spec.subgaussian_bound) j["subgaussian_K"] = *spec.subgaussian_bound;
    return j;
}

DistributionSpec spec_from_json(const Json& j) {
    require(j.is_object(), ErrorKind::ParseError, "distribution spec must be a JSON object");
    require(j.contains("kind"), ErrorKind::ParseError, "distribution spec lacks 'kind'");
    DistributionSpec s;
    s.kind = dist_kind_from_string(j.at("kind").get<std::string>());
    s.precision_bits = get_or<int>(j, "precision_bits", 53);
    if (const auto it = j.find("p"); it != j.end() && !it->is_null()) {
        s.p = it->is_string() ? parse_rational(it->get<std::string>()).get_d() : it->get<double>();
    }
    s.normalized = get_or<bool>(j, "normalized", false);
    s.allow_asymmetric = get_or<bool>(j, "allow_asymmetric", false);
    s.declared_mean_zero = get_or<bool>(j, "declared_mean_zero", s.kind == DistKind::DiscreteSymmetric);
    if (const auto it = j.find("atoms"); it != j.end() && !it->is_null()) {
        for (const auto& a : *it) {
            if (a.is_array()) {
                require(a.size() == 2, ErrorKind::ParseError, "atom pairs must be [value, weight]");
                s.atoms.push_back({rational_from_json(a[0]), rational_from_json(a[1])});
            } else {
                s.atoms.push_back({rational_from_json(a.at("value")), rational_from_json(a.at("weight"))});
            }
        }
    }
    if (const auto it = j.find("subgaussian_K"); it != j.end() && !it->is_null()) s.subgaussian_bound = it->get<double>();
    return s;
}

Json config_to_json(const ExperimentConfig& cfg) {
    Json j;
    j["schema"] = kConfigSchema;
    j["kind"] = to_string(cfg.kind);
    j["spec"] = spec_to_json(cfg.spec);
    j["n"] = cfg.n;
    j["d"] = cfg.d;
    j["trials"] = cfg.trials;
    j["master_seed"] = cfg.master_seed;
    j["confidence"] = cfg.confidence;
    if (cfg.kind == ExperimentKind::LP) {
        const CostSource cost = cfg.cost ? *cfg.cost : CostSource{unit_vector(cfg.d, 0)};
        if (const auto* fixed = std::get_if<QVector>(&cost)) {
            j["cost"] = vector_to_json(*fixed);
        } else {
            j["cost"] = spec_to_json(std::get<DistributionSpec>(cost));
        }
        j["debug_sandwich"] = cfg.debug_sandwich;
    }
    return j;
}

ExperimentConfig config_from_json(const Json& input) {
    const Json& j = (input.contains("config") && input.at("config").is_object()) ? input.at("config") : input;
    require(j.is_object(), ErrorKind::ConfigError, "config must be a JSON object");
    if (const auto it = j.find("schema"); it != j.end()) {
        require(it->get<std::string>() == kConfigSchema, ErrorKind::ConfigError,
                "unsupported config schema '" + it->get<std::string>() + "'");
    }
    ExperimentConfig cfg;
    try {
        cfg.kind = experiment_kind_from_string(get_or<std::string>(j, "kind", "hull"));
        if (j.contains("spec")) cfg.spec = spec_from_json(j.at("spec"));
        cfg.n = j.at("n").get<std::uint64_t>();
        cfg.d = j.at("d").get<std::uint64_t>();
        cfg.trials = j.at("trials").get<std::uint64_t>();
        cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
        cfg.confidence = get_or<double>(j, "confidence", 0.99);
        cfg.debug_sandwich = get_or<bool>(j, "debug_sandwich", false);
        if (const auto it = j.find("cost"); it != j.end() && !it->is_null()) {
            if (it->is_array()) {
                cfg.cost = CostSource{vector_from_json(*it)};
            } else {
                cfg.cost = CostSource{spec_from_json(*it)};
            }
        }
    } catch (const Json::exception& e) {
        fail(ErrorKind::ConfigError, std::string("malformed config: ") + e.what());
    }
    return cfg;
}

std::string config_hash(const ExperimentConfig& cfg) {
    const std::string text = config_to_json(cfg).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json result_to_json(const ExperimentResult& res) {
    const auto& cfg = res.config;
    Json j;
    j["schema"] = kResultSchema;
    Json header;
    header["version"] = kVersion;
    header["config_hash"] = config_hash(cfg);
    header["master_seed"] = cfg.master_seed;
    header["gaussian_method"] = kGaussianMethod;
    header["precision_bits"] = cfg.spec.precision_bits;
    j["header"] = header;
    j["config"] = config_to_json(cfg);

    Json counts;
    Json freqs;
    for (const auto& t : res.tallies()) {
        counts[t.name] = t.count;
        freqs[t.name] = {{"count", t.count}, {"frequency", t.frequency}, {"lo", t.ci.lo}, {"hi", t.ci.hi}};
    }
    j["counts"] = counts;
    j["frequencies"] = freqs;
    j["confidence"] = cfg.confidence;

    const std::uint64_t theory_n = cfg.kind == ExperimentKind::Hull ? cfg.n : cfg.n + 1;
    j["theory"] = {{"reference", cfg.kind == ExperimentKind::Hull ? "p_{n,d}" : "p_{n+1,d}"},
                   {"n", theory_n},
                   {"d", cfg.d},
                   {"exact", to_string(res.theory)},
                   {"float", p_float(theory_n, cfg.d)}};
    if (cfg.kind == ExperimentKind::LP && cfg.debug_sandwich) {
        j["sandwich"] = {{"checked", res.sandwich_checked}, {"violations", res.sandwich_violations}};
    }
    return j;
}

Json verdict_to_json(const HullVerdict& v) {
    Json j;
    j["class"] = to_string(v.cls);
    j["witness"] = v.witness ? vector_to_json(*v.witness) : Json(nullptr);
    j["separator"] = v.separator ? vector_to_json(*v.separator) : Json(nullptr);
    if (v.interior_proof) {
        if (const auto* s = std::get_if<SpanningSupport>(&*v.interior_proof)) {
            j["interior_proof"] = {{"spanning_support", s->indices}};
        } else {
            Json arr = Json::array();
            for (const auto& l : std::get<ConeWitnesses>(*v.interior_proof).lambdas) arr.push_back(vector_to_json(l));
            j["interior_proof"] = {{"cone_witnesses", arr}};
        }
    } else {
        j["interior_proof"] = nullptr;
    }
    return j;
}

Json boundedness_to_json(const BoundednessVerdict& v) {
    if (const auto* b = std::get_if<Bounded>(&v)) return {{"verdict", "Bounded"}, {"lambda", vector_to_json(b->lambda)}};
    return {{"verdict", "Unbounded"}, {"ray", vector_to_json(std::get<Unbounded>(v).ray)}};
}

Json enumeration_to_json(const EnumerationResult& e) {
    Json j;
    j["kind"] = to_string(e.kind);
    j["states"] = e.states;
    if (e.kind == ExperimentKind::Hull) {
        j["probabilities"] = {{"outside", to_string(e.outside)},
                              {"boundary", to_string(e.boundary)},
                              {"interior", to_string(e.interior)},
                              {"contains", to_string(e.contains())}};
    } else {
        j["probabilities"] = {{"bounded", to_string(e.bounded)}, {"unbounded", to_string(e.unbounded)}};
    }
    return j;
}

}  // namespace originlab
