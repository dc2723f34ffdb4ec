// Python bindings. Rationals cross the boundary as strings, structured
// results as JSON text; the Python package turns both into native objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "originlab/cli.hpp"
#include "originlab/errors.hpp"
#include "originlab/exactq.hpp"
#include "originlab/hullgeom.hpp"
#include "originlab/json_io.hpp"
#include "originlab/lpbound.hpp"
#include "originlab/montecarlo.hpp"
#include "originlab/sampling.hpp"
#include "originlab/wendel.hpp"

namespace py = pybind11;
using namespace originlab;

namespace {

using Rows = std::vector<std::vector<std::string>>;

QVector to_vector(const std::vector<std::string>& v) {
    QVector out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(parse_rational(s));
    return out;
}

PointSet to_points(const Rows& rows) {
    PointSet out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(to_vector(r));
    return out;
}

QMatrix to_matrix(const Rows& rows, std::size_t cols_if_empty) {
    return QMatrix::from_rows(to_points(rows), cols_if_empty);
}

Rows to_rows(const QMatrix& m) {
    Rows out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
    return out;
}

std::string classify(const Rows& rows, const std::string& method, bool guide) {
    ClassifyOptions opt;
    if (method == "cone")
        opt.method = InteriorMethod::ConeQueries;
    else if (method != "dependency")
        throw Error(ErrorKind::InvalidParameter, "method must be dependency or cone");
    opt.float_guide = guide;
    const PointSet pts = to_points(rows);
    const HullVerdict v = classify_origin(pts, opt);
    Json j = verdict_to_json(v);
    j["affine_hull_dim"] = affine_hull_dim(pts);
    j["verified"] = verify_verdict(pts, v);
    return j.dump();
}

std::string lp_check(const Rows& a, const std::vector<std::string>& c, bool sandwich) {
    const LPInstance inst{to_matrix(a, c.size()), to_vector(c)};
    const auto v = is_bounded(inst);
    Json j = boundedness_to_json(v);
    j["verified"] = verify_boundedness(inst, v);
    if (sandwich) {
        const auto rep = sandwich_check(inst);
        j["sandwich"] = {{"hull", verdict_to_json(rep.hull)}, {"pass", rep.pass}};
    }
    return j.dump();
}

std::string feasibility(const Rows& m, const std::vector<std::string>& b) {
    const QMatrix mat = to_matrix(m, 0);
    const QVector rhs = to_vector(b);
    const auto o = solve_feasibility(mat, rhs);
    Json j;
    if (const auto* w = std::get_if<Witness>(&o)) {
        j = {{"feasible", true}, {"lambda", vector_to_json(w->lambda)}};
    } else {
        j = {{"feasible", false}, {"farkas", vector_to_json(std::get<FarkasCertificate>(o).y)}};
    }
    j["verified"] = verify_outcome(mat, rhs, o);
    return j.dump();
}

std::string simulate(const std::string& config_json, unsigned threads) {
    const ExperimentConfig cfg = config_from_json(Json::parse(config_json));
    return result_to_json(run_experiment(cfg, {threads == 0 ? 1u : threads, false})).dump();
}

std::string enumerate(const std::string& spec_json, std::uint64_t n, std::uint64_t d, const std::string& kind) {
    return enumeration_to_json(enumerate_exact(spec_from_json(Json::parse(spec_json)), n, d,
                                               experiment_kind_from_string(kind)))
        .dump();
}

Rows sample(const std::string& spec_json, std::size_t n, std::size_t d, std::uint64_t seed, std::uint64_t trial) {
    return to_rows(sample_matrix(spec_from_json(Json::parse(spec_json)), n, d, {seed, trial}));
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_originlab, m) {
    m.doc() = "Exact origin-in-hull and random LP boundedness tools";
    py::register_exception<Error>(m, "OriginlabError", PyExc_ValueError);

    m.attr("__version__") = kVersion;
    m.def("p_exact", [](std::uint64_t n, std::uint64_t d) { return to_string(p_exact(n, d)); }, py::arg("n"),
          py::arg("d"));
    m.def("p_float", &p_float, py::arg("n"), py::arg("d"));
    m.def("window_estimate", &window_estimate, py::arg("d"), py::arg("target") = 0.5);
    m.def("rank", [](const Rows& rows) { return rank(to_matrix(rows, 0)); }, py::arg("rows"));
    m.def("solve_feasibility", &feasibility, py::arg("m"), py::arg("b"));
    m.def("classify_origin", &classify, py::arg("points"), py::arg("method") = "dependency",
          py::arg("float_guide") = true);
    m.def("is_bounded", &lp_check, py::arg("a"), py::arg("c"), py::arg("sandwich") = false);
    m.def("run_experiment", &simulate, py::arg("config"), py::arg("threads") = 1);
    m.def("enumerate_exact", &enumerate, py::arg("spec"), py::arg("n"), py::arg("d"), py::arg("kind") = "hull");
    m.def("sample_matrix", &sample, py::arg("spec"), py::arg("n"), py::arg("d"), py::arg("seed"),
          py::arg("trial") = 0);
    m.def("cli", &run_cli, py::arg("args"));
}
