#include "originlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "originlab/errors.hpp"
#include "originlab/hullgeom.hpp"
#include "originlab/json_io.hpp"
#include "originlab/lpbound.hpp"
#include "originlab/montecarlo.hpp"
#include "originlab/wendel.hpp"

namespace originlab::cli {
namespace {

std::string fnv_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void header(std::ostream& err, const std::string& hash, std::optional<std::uint64_t> seed, bool generated = false) {
    err << "# originlab " << kVersion << " config_hash=" << hash << " master_seed=";
    if (seed) {
        err << *seed << (generated ? " (generated)" : "");
    } else {
        err << "none";
    }
    err << '\n';
}

std::vector<std::string> tokens(const std::string& text, const std::string& delims) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : text) {
        if (delims.find(ch) != std::string::npos) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

QVector parse_vector(const std::string& text, int dyadic_bits) {
    QVector v;
    for (const auto& t : tokens(text, " \t,;")) v.push_back(parse_number(t, dyadic_bits));
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::ConfigError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), ErrorKind::ConfigError, "cannot write '" + path + "'");
    f << text;
}

/// One row per non-empty line; '#' starts a comment.
std::vector<QVector> parse_rows(const std::string& text, int dyadic_bits, std::vector<std::string>* labels = nullptr) {
    std::vector<QVector> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        auto toks = tokens(line, " \t,;\r");
        if (toks.empty()) continue;
        std::string label;
        if (labels && !toks.empty() && std::isalpha(static_cast<unsigned char>(toks[0][0]))) {
            label = toks[0];
            toks.erase(toks.begin());
        }
        QVector row;
        for (const auto& t : toks) row.push_back(parse_number(t, dyadic_bits));
        if (labels) labels->push_back(label);
        rows.push_back(std::move(row));
    }
    return rows;
}

PointSet read_points(const std::string& path, int dyadic_bits) {
    PointSet pts = parse_rows(read_file(path), dyadic_bits);
    require(!pts.empty(), ErrorKind::ConfigError, "points file is empty");
    for (const auto& p : pts) {
        require(p.size() == pts.front().size() && !p.empty(), ErrorKind::ConfigError,
                "all points must have the same positive dimension");
    }
    return pts;
}

/// JSON {"A": [[...]], "c": [...]} or CSV rows of A with the cost on a row
/// labelled `c`.
LPInstance read_lp(const std::string& path, int dyadic_bits) {
    const std::string text = read_file(path);
    std::vector<QVector> rows;
    std::optional<QVector> c;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            fail(ErrorKind::ConfigError, std::string("bad LP JSON: ") + e.what());
        }
        require(j.contains("A"), ErrorKind::ConfigError, "LP JSON lacks 'A'");
        for (const auto& r : j.at("A")) {
            QVector row;
            for (const auto& e : r) row.push_back(e.is_string() ? parse_number(e.get<std::string>(), dyadic_bits)
                                                             : rational_from_json(e));
            rows.push_back(std::move(row));
        }
        if (j.contains("c")) {
            QVector cv;
            for (const auto& e : j.at("c")) cv.push_back(e.is_string() ? parse_number(e.get<std::string>(), dyadic_bits)
                                                                    : rational_from_json(e));
            c = std::move(cv);
        }
    } else {
        std::vector<std::string> labels;
        auto all = parse_rows(text, dyadic_bits, &labels);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (labels[i] == "c") {
                c = std::move(all[i]);
            } else {
                require(labels[i].empty(), ErrorKind::ConfigError, "unknown row label '" + labels[i] + "'");
                rows.push_back(std::move(all[i]));
            }
        }
    }
    require(!rows.empty(), ErrorKind::ConfigError, "LP has no constraint rows");
    for (const auto& r : rows) require(r.size() == rows.front().size(), ErrorKind::ConfigError, "ragged A");
    LPInstance inst{QMatrix::from_rows(rows), c ? *c : unit_vector(rows.front().size(), 0)};
    return inst;
}

std::vector<Atom> parse_atoms(const std::string& text, int dyadic_bits) {
    std::vector<Atom> atoms;
    for (const auto& item : tokens(text, ", ;")) {
        const auto colon = item.find(':');
        require(colon != std::string::npos, ErrorKind::ConfigError, "atom '" + item + "' must be value:weight");
        atoms.push_back({parse_number(item.substr(0, colon), dyadic_bits), parse_rational(item.substr(colon + 1))});
    }
    return atoms;
}

/// Entry-law flags shared by the randomized subcommands.
struct LawFlags {
    std::string dist = "rademacher";
    double p = 1.0;
    int precision_bits = 53;
    bool normalized = false;
    std::string atoms;
    bool allow_asymmetric = false;
    bool declared_mean_zero = false;
    int dyadic_bits = 0;

    void add(CLI::App* app) {
        app->add_option("--dist", dist,
                        "Entry law: rademacher | gaussian | bg | discrete_symmetric | discrete_general");
        app->add_option("--p", p, "Bernoulli mask probability for bg");
        app->add_option("--precision-bits", precision_bits, "Dyadic rounding of continuous draws");
        app->add_flag("--normalized", normalized, "bg: divide by sqrt(p) for unit variance");
        app->add_option("--atoms", atoms, "Discrete atoms as value:weight,value:weight");
        app->add_flag("--allow-asymmetric", allow_asymmetric, "Permit a non-symmetric discrete law");
        app->add_flag("--declared-mean-zero", declared_mean_zero, "Declare the discrete law mean zero");
        app->add_option("--dyadic-bits", dyadic_bits, "Accept decimal input, rounded to multiples of 2^-bits");
    }

    DistributionSpec spec() const {
        DistributionSpec s;
        s.kind = dist_kind_from_string(dist);
        s.p = p;
        s.precision_bits = precision_bits;
        s.normalized = normalized;
        s.allow_asymmetric = allow_asymmetric;
        s.declared_mean_zero = declared_mean_zero || s.kind == DistKind::DiscreteSymmetric;
        if (!atoms.empty()) s.atoms = parse_atoms(atoms, dyadic_bits);
        require(s.kind != DistKind::DiscreteSymmetric && s.kind != DistKind::DiscreteGeneral || !s.atoms.empty(),
                ErrorKind::ConfigError, "discrete laws need --atoms");
        validate_spec(s);
        return s;
    }
};

/// Seed, trials, threads and confidence.
struct RunFlags {
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    std::uint64_t trials = 1000;
    unsigned threads = 0;
    CLI::Option* threads_opt = nullptr;
    double confidence = 0.99;

    void add(CLI::App* app) {
        seed_opt = app->add_option("--seed", seed, "Master seed (generated and printed when absent)");
        app->add_option("--trials", trials, "Trials per experiment");
        threads_opt = app->add_option("--threads", threads, "Worker threads (env ORIGINLAB_THREADS as fallback)");
        app->add_option("--confidence", confidence, "Wilson interval level");
    }

    bool generated = false;

    std::uint64_t resolve_seed() {
        if (seed_opt->count() == 0) {
            std::random_device rd;
            seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
            generated = true;
        }
        return seed;
    }

    RunOptions options() const {
        RunOptions o;
        if (threads_opt->count() > 0) {
            o.threads = threads;
        } else if (const char* env = std::getenv("ORIGINLAB_THREADS")) {
            o.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        }
        if (o.threads == 0) o.threads = 1;
        return o;
    }
};

CostSource parse_cost(const std::string& text, std::size_t d, int dyadic_bits) {
    if (text.empty()) return unit_vector(d, 0);
    if (std::isalpha(static_cast<unsigned char>(text[0]))) {
        DistributionSpec s;
        s.kind = dist_kind_from_string(text);
        validate_spec(s);
        return s;
    }
    QVector c = parse_vector(text, dyadic_bits);
    require(c.size() == d, ErrorKind::ConfigError, "--cost must have d entries");
    return c;
}

std::string timing(const std::chrono::steady_clock::time_point& start) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return "# runtime_seconds=" + fmt(s) + "\n";
}

int run(CLI::App& app, std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    app.require_subcommand(1);
    app.fallthrough(false);

    // pnd
    auto* pnd = app.add_subcommand("pnd", "Wendel probability p_{n,d}");
    std::uint64_t pnd_n = 0, pnd_d = 0;
    bool pnd_exact = false;
    pnd->add_option("--n", pnd_n, "Number of points")->required();
    pnd->add_option("--d", pnd_d, "Dimension")->required();
    pnd->add_flag("--exact", pnd_exact, "Print the exact rational");

    // classify
    auto* cls = app.add_subcommand("classify", "Classify the origin against conv(points)");
    std::string cls_points, cls_method = "dependency", cls_out;
    int cls_bits = 0;
    bool cls_no_guide = false;
    cls->add_option("--points", cls_points, "Points file, one row per line")->required();
    cls->add_option("--dyadic-bits", cls_bits, "Accept decimal input, rounded to multiples of 2^-bits");
    cls->add_option("--method", cls_method, "Interior test: dependency | cone");
    cls->add_flag("--no-guide", cls_no_guide, "Skip the floating-point guide");
    cls->add_option("--out", cls_out, "JSON output path");

    // lp-check
    auto* lpc = app.add_subcommand("lp-check", "Decide boundedness of max<c,x> s.t. Ax <= 1");
    std::string lp_input, lp_cost, lp_out;
    int lp_bits = 0;
    bool lp_sandwich = false;
    lpc->add_option("--input", lp_input, "LP file: JSON {A, c} or CSV with a row labelled c")->required();
    lpc->add_option("--cost", lp_cost, "Cost vector overriding the file's c");
    lpc->add_option("--dyadic-bits", lp_bits, "Accept decimal input, rounded to multiples of 2^-bits");
    lpc->add_flag("--sandwich", lp_sandwich, "Also report the hull/bounded consistency check");
    lpc->add_option("--out", lp_out, "JSON output path");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo hull or LP experiment");
    LawFlags sim_law;
    RunFlags sim_run;
    std::string sim_kind = "hull", sim_config, sim_out, sim_audit, sim_cost;
    std::uint64_t sim_n = 0, sim_d = 0;
    bool sim_debug = false;
    sim_law.add(sim);
    sim_run.add(sim);
    sim->add_option("--kind", sim_kind, "hull | lp");
    sim->add_option("--n", sim_n, "Points (hull) or constraints (lp)");
    sim->add_option("--d", sim_d, "Dimension");
    sim->add_option("--cost", sim_cost, "LP cost: comma-separated rationals or a law name");
    sim->add_flag("--debug-sandwich", sim_debug, "LP: run the consistency check on every trial");
    sim->add_option("--config", sim_config, "Config JSON (a previous result JSON also works)");
    sim->add_option("--out", sim_out, "Result JSON path");
    sim->add_option("--audit", sim_audit, "Per-trial CSV (trial,class)");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Exact class probabilities over every atom assignment");
    LawFlags en_law;
    std::string en_kind = "hull", en_cost, en_out;
    std::uint64_t en_n = 0, en_d = 0;
    en_law.add(en);
    en->add_option("--kind", en_kind, "hull | lp");
    en->add_option("--n", en_n, "Rows")->required();
    en->add_option("--d", en_d, "Dimension")->required();
    en->add_option("--cost", en_cost, "LP cost vector (default e_1)");
    en->add_option("--out", en_out, "JSON output path");

    // sweep
    auto* sw = app.add_subcommand("sweep", "Containment frequency across a range of n");
    LawFlags sw_law;
    sw_law.dist = "gaussian";
    RunFlags sw_run;
    std::uint64_t sw_d = 0, sw_lo = 0, sw_hi = 0;
    std::string sw_out;
    sw_law.add(sw);
    sw_run.add(sw);
    sw->add_option("--d", sw_d, "Dimension")->required();
    sw->add_option("--n-min", sw_lo, "First n")->required();
    sw->add_option("--n-max", sw_hi, "Last n")->required();
    sw->add_option("--out", sw_out, "CSV path (x,freq,lo,hi,theory)");

    // decay
    auto* dc = app.add_subcommand("decay", "Boundary-class frequency at n = 2d");
    LawFlags dc_law;
    RunFlags dc_run;
    std::string dc_list = "4,6,8,10", dc_out;
    dc_law.add(dc);
    dc_run.add(dc);
    dc->add_option("--d-list", dc_list, "Comma-separated dimensions");
    dc->add_option("--out", dc_out, "CSV path (x,freq,lo,hi,theory)");

    // sparse
    auto* sp = app.add_subcommand("sparse", "Bernoulli-Gaussian containment across a sparsity grid");
    RunFlags sp_run;
    std::uint64_t sp_d = 0, sp_n = 0;
    std::string sp_grid = "0.05,0.1,0.15,0.2,0.3,0.5,1", sp_out;
    int sp_bits = 53;
    bool sp_norm = false;
    sp_run.add(sp);
    sp->add_option("--d", sp_d, "Dimension")->required();
    sp->add_option("--n", sp_n, "Points")->required();
    sp->add_option("--p-grid", sp_grid, "Comma-separated mask probabilities in (0,1]");
    sp->add_option("--precision-bits", sp_bits, "Dyadic rounding of Gaussian draws");
    sp->add_flag("--normalized", sp_norm, "Divide by sqrt(p) for unit variance");
    sp->add_option("--out", sp_out, "CSV path (x,freq,lo,hi,theory)");

    // asym
    auto* as = app.add_subcommand("asym", "Containment under an asymmetric mean-zero law");
    RunFlags as_run;
    std::uint64_t as_d = 0, as_n = 0;
    std::string as_atoms = "2:1/3,-1:2/3", as_out;
    as_run.add(as);
    as->add_option("--d", as_d, "Dimension")->required();
    as->add_option("--n", as_n, "Points")->required();
    as->add_option("--atoms", as_atoms, "Atoms value:weight,...");
    as->add_option("--out", as_out, "JSON output path");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, out, err);
        if (app.get_subcommands().empty()) err << app.help();
        return kExitConfig;
    }

    if (pnd->parsed()) {
        require(pnd_n >= 1 && pnd_d >= 1, ErrorKind::ConfigError, "--n and --d must be positive");
        header(err, fnv_hex(Json{{"cmd", "pnd"}, {"n", pnd_n}, {"d", pnd_d}}.dump()), std::nullopt);
        out << (pnd_exact ? to_string(p_exact(pnd_n, pnd_d)) : fmt(p_float(pnd_n, pnd_d))) << '\n';
        return kExitOk;
    }

    if (cls->parsed()) {
        const PointSet pts = read_points(cls_points, cls_bits);
        ClassifyOptions opt;
        require(cls_method == "dependency" || cls_method == "cone", ErrorKind::ConfigError,
                "--method must be dependency or cone");
        opt.method = cls_method == "cone" ? InteriorMethod::ConeQueries : InteriorMethod::StrictDependency;
        opt.float_guide = !cls_no_guide;
        Json canon = Json::array();
        for (const auto& p : pts) canon.push_back(vector_to_json(p));
        header(err, fnv_hex(canon.dump()), std::nullopt);
        const HullVerdict v = classify_origin(pts, opt);
        Json j = verdict_to_json(v);
        j["points"] = pts.size();
        j["d"] = pts.front().size();
        j["affine_hull_dim"] = affine_hull_dim(pts);
        j["verified"] = verify_verdict(pts, v);
        write_output(cls_out, j.dump(2) + "\n", out);
        return kExitOk;
    }

    if (lpc->parsed()) {
        LPInstance inst = read_lp(lp_input, lp_bits);
        if (!lp_cost.empty()) inst.c = parse_vector(lp_cost, lp_bits);
        Json canon = {{"A", Json::array()}, {"c", vector_to_json(inst.c)}};
        for (const auto& r : inst.a.to_rows()) canon["A"].push_back(vector_to_json(r));
        header(err, fnv_hex(canon.dump()), std::nullopt);
        const BoundednessVerdict v = is_bounded(inst);
        Json j = boundedness_to_json(v);
        j["verified"] = verify_boundedness(inst, v);
        if (lp_sandwich) {
            const auto rep = sandwich_check(inst);
            j["sandwich"] = {{"hull", verdict_to_json(rep.hull)}, {"pass", rep.pass}};
        }
        write_output(lp_out, j.dump(2) + "\n", out);
        return is_bounded_variant(v) ? kExitOk : kExitUnbounded;
    }

    if (sim->parsed()) {
        ExperimentConfig cfg;
        bool generated = false;
        if (!sim_config.empty()) {
            Json j;
            try {
                j = Json::parse(read_file(sim_config));
            } catch (const Json::exception& e) {
                fail(ErrorKind::ConfigError, std::string("bad config JSON: ") + e.what());
            }
            cfg = config_from_json(j);
        } else {
            cfg.kind = experiment_kind_from_string(sim_kind);
            cfg.spec = sim_law.spec();
            cfg.n = sim_n;
            cfg.d = sim_d;
            cfg.trials = sim_run.trials;
            cfg.master_seed = sim_run.resolve_seed();
            generated = sim_run.generated;
            cfg.confidence = sim_run.confidence;
            cfg.debug_sandwich = sim_debug;
            if (cfg.kind == ExperimentKind::LP) cfg.cost = parse_cost(sim_cost, cfg.d, sim_law.dyadic_bits);
        }
        validate_config(cfg);
        header(err, config_hash(cfg), cfg.master_seed, generated);
        RunOptions opt = sim_run.options();
        opt.record_trials = !sim_audit.empty();
        const auto start = std::chrono::steady_clock::now();
        const ExperimentResult res = run_experiment(cfg, opt);
        err << timing(start);
        write_output(sim_out, result_to_json(res).dump(2) + "\n", out);
        if (!sim_audit.empty()) {
            std::string csv = "trial,class\n";
            for (std::size_t t = 0; t < res.per_trial.size(); ++t) csv += std::to_string(t) + "," + to_string(res.per_trial[t]) + "\n";
            write_output(sim_audit, csv, out);
        }
        return kExitOk;
    }

    if (en->parsed()) {
        const DistributionSpec spec = en_law.spec();
        const ExperimentKind kind = experiment_kind_from_string(en_kind);
        std::optional<QVector> cost;
        if (!en_cost.empty()) cost = parse_vector(en_cost, en_law.dyadic_bits);
        Json canon = {{"cmd", "enumerate"}, {"spec", spec_to_json(spec)}, {"n", en_n}, {"d", en_d}, {"kind", en_kind}};
        if (cost) canon["cost"] = vector_to_json(*cost);
        header(err, fnv_hex(canon.dump()), std::nullopt);
        const auto res = enumerate_exact(spec, en_n, en_d, kind, cost);
        Json j = enumeration_to_json(res);
        const std::uint64_t tn = kind == ExperimentKind::Hull ? en_n : en_n + 1;
        j["theory"] = {{"n", tn}, {"d", en_d}, {"exact", to_string(p_exact(tn, en_d))}};
        write_output(en_out, j.dump(2) + "\n", out);
        return kExitOk;
    }

    if (sw->parsed()) {
        require(sw_lo >= 1 && sw_lo <= sw_hi, ErrorKind::ConfigError, "n range must be nonempty");
        const DistributionSpec spec = sw_law.spec();
        const std::uint64_t seed = sw_run.resolve_seed();
        header(err,
               fnv_hex(Json{{"cmd", "sweep"}, {"spec", spec_to_json(spec)}, {"d", sw_d}, {"n_min", sw_lo},
                            {"n_max", sw_hi}, {"trials", sw_run.trials}, {"seed", seed}}
                           .dump()),
               seed, sw_run.generated);
        const auto start = std::chrono::steady_clock::now();
        const auto res = sweep(sw_d, sw_lo, sw_hi, spec, sw_run.trials, seed, sw_run.options(), sw_run.confidence);
        err << timing(start);
        std::string csv = "x,freq,lo,hi,theory\n";
        for (const auto& r : res.rows)
            csv += std::to_string(r.n) + "," + fmt(r.frequency) + "," + fmt(r.ci.lo) + "," + fmt(r.ci.hi) + "," + fmt(r.theory) + "\n";
        write_output(sw_out, csv, out);
        err << "# empirical_crossing=" << (res.empirical_crossing ? std::to_string(*res.empirical_crossing) : "none")
            << " exact_crossing=" << res.exact_crossing
            << " offset_from_2d=" << (res.offset_from_2d ? std::to_string(*res.offset_from_2d) : "none") << '\n';
        return kExitOk;
    }

    if (dc->parsed()) {
        std::vector<std::uint64_t> ds;
        for (const auto& t : tokens(dc_list, ", ")) ds.push_back(std::stoull(t));
        const DistributionSpec spec = dc_law.spec();
        const std::uint64_t seed = dc_run.resolve_seed();
        header(err,
               fnv_hex(Json{{"cmd", "decay"}, {"spec", spec_to_json(spec)}, {"d_list", ds},
                            {"trials", dc_run.trials}, {"seed", seed}}
                           .dump()),
               seed, dc_run.generated);
        const auto start = std::chrono::steady_clock::now();
        const auto res = boundary_decay(ds, spec, dc_run.trials, seed, dc_run.options(), dc_run.confidence);
        err << timing(start);
        std::string csv = "x,freq,lo,hi,theory\n";
        for (const auto& r : res.rows)
            csv += std::to_string(r.d) + "," + fmt(r.frequency) + "," + fmt(r.ci.lo) + "," + fmt(r.ci.hi) + "," + fmt(r.theory) + "\n";
        write_output(dc_out, csv, out);
        err << "# slope=" << (res.slope ? fmt(*res.slope) : "none") << '\n';
        return kExitOk;
    }

    if (sp->parsed()) {
        std::vector<double> grid;
        for (const auto& t : tokens(sp_grid, ", ")) grid.push_back(std::stod(t));
        const std::uint64_t seed = sp_run.resolve_seed();
        header(err,
               fnv_hex(Json{{"cmd", "sparse"}, {"d", sp_d}, {"n", sp_n}, {"grid", grid}, {"bits", sp_bits},
                            {"normalized", sp_norm}, {"trials", sp_run.trials}, {"seed", seed}}
                           .dump()),
               seed, sp_run.generated);
        const auto start = std::chrono::steady_clock::now();
        const auto res = sparse_threshold_experiment(sp_d, sp_n, grid, sp_run.trials, seed, sp_run.options(), sp_bits,
                                                     sp_norm, sp_run.confidence);
        err << timing(start);
        std::string csv = "x,freq,lo,hi,theory\n";
        for (const auto& r : res.rows)
            csv += fmt(r.p) + "," + fmt(r.frequency) + "," + fmt(r.ci.lo) + "," + fmt(r.ci.hi) + "," + fmt(r.theory) + "\n";
        write_output(sp_out, csv, out);
        err << "# critical_p=" << fmt(res.critical_p) << '\n';
        return kExitOk;
    }

    if (as->parsed()) {
        const DistributionSpec spec = DistributionSpec::discrete_general(parse_atoms(as_atoms, 0), true, true);
        const std::uint64_t seed = as_run.resolve_seed();
        header(err,
               fnv_hex(Json{{"cmd", "asym"}, {"spec", spec_to_json(spec)}, {"d", as_d}, {"n", as_n},
                            {"trials", as_run.trials}, {"seed", seed}}
                           .dump()),
               seed, as_run.generated);
        const auto start = std::chrono::steady_clock::now();
        const auto rep = asymmetry_experiment(as_d, as_n, spec, as_run.trials, seed, as_run.options(), as_run.confidence);
        err << timing(start);
        Json j = result_to_json(rep.result);
        j["report"] = {{"frequency", rep.frequency}, {"lo", rep.ci.lo}, {"hi", rep.ci.hi},
                       {"theory", rep.theory}, {"gap", rep.gap}};
        write_output(as_out, j.dump(2) + "\n", out);
        return kExitOk;
    }
    err << app.help();
    return kExitConfig;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"originlab: exact origin-in-hull and LP-boundedness experiments", "originlab"};
    try {
        return run(app, args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace originlab::cli
