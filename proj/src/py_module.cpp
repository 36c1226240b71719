// Python bindings: the main solver operations over JSON payloads plus a thin
// PreferenceMatrix wrapper. Rich structures cross the boundary as the same
// JSON documents the CLI reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prefrat/halfint.hpp"
#include "prefrat/integral.hpp"
#include "prefrat/matrix.hpp"
#include "prefrat/oracle.hpp"
#include "prefrat/profile.hpp"

namespace py = pybind11;
using namespace prefrat;

namespace {

const char* class_name(MatrixClass c) {
    switch (c) {
        case MatrixClass::Integral: return "integral";
        case MatrixClass::HalfIntegral: return "half-integral";
        default: return "general";
    }
}

py::dict analyze(const PreferenceMatrix& m, int exact_limit) {
    RationalityResult r = rationality_number(m, exact_limit);
    py::dict out;
    out["matrix_class"] = class_name(r.matrix_class);
    out["exact"] = r.exact;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["method"] = r.method;
    out["certificate"] = r.certificate ? py::object(py::str(r.certificate->to_json()))
                                       : py::object(py::none());
    return out;
}

py::dict verify(const PreferenceMatrix& m, const std::string& profile_json) {
    VoterProfile v = VoterProfile::parse_json(profile_json);
    ConsistencyReport report = check_consistency(v, m);
    py::dict out;
    out["consistent"] = report.consistent;
    out["width"] = profile_width(v);
    out["report"] = report.to_json();
    return out;
}

py::dict triangle(const PreferenceMatrix& m, int s, std::int64_t budget,
                  std::uint64_t seed) {
    TriangleCheck check = verify_triangle_property(voting_graph(m), s, budget, seed);
    py::dict out;
    out["outcome"] = check.outcome == TriangleOutcome::Proved ? "proved"
                     : check.outcome == TriangleOutcome::Refuted ? "refuted"
                                                                 : "sampled_ok";
    out["witness"] = check.witness;
    out["subsets_checked"] = check.subsets_checked;
    out["exhaustive"] = check.exhaustive;
    return out;
}

} // namespace

PYBIND11_MODULE(_prefrat, m) {
    m.doc() = "rationality numbers of preference matrices";

    py::register_exception<Error>(m, "PrefratError");

    py::class_<PreferenceMatrix>(m, "PreferenceMatrix")
        .def_static("parse_json", &PreferenceMatrix::parse_json, py::arg("text"))
        .def_static("parse_csv", &PreferenceMatrix::parse_csv, py::arg("text"))
        .def("to_json", &PreferenceMatrix::to_json)
        .def("to_csv", &PreferenceMatrix::to_csv)
        .def_property_readonly("n", &PreferenceMatrix::n)
        .def("at", [](const PreferenceMatrix& m, int i, int j) {
            return m.at(i, j).str();
        }, py::arg("i"), py::arg("j"))
        .def_property_readonly("matrix_class", [](const PreferenceMatrix& m) {
            return class_name(classify(m));
        });

    m.def("analyze", &analyze, py::arg("matrix"), py::arg("exact_limit") = 20,
          "classify and solve; certificate is a profile JSON string or None");
    m.def("verify", &verify, py::arg("matrix"), py::arg("profile_json"),
          "check a profile JSON against a matrix per the rationality constraints");
    m.def("profile_width", [](const std::string& profile_json) {
        return profile_width(VoterProfile::parse_json(profile_json));
    }, py::arg("profile_json"));
    m.def("components", [](const PreferenceMatrix& m) {
        return components(m).components;
    }, py::arg("matrix"), "unanimity components of a non-general matrix");
    m.def("greedy_dicoloring", [](const PreferenceMatrix& m) {
        Tournament t = Tournament::from_voting_graph(voting_graph(m));
        return greedy_dicoloring(t).classes;
    }, py::arg("matrix"));
    m.def("dichromatic_number", [](const PreferenceMatrix& m, int exact_limit) {
        Tournament t = Tournament::from_voting_graph(voting_graph(m));
        ExactDicoloringResult r = dichromatic_number_exact(t, exact_limit);
        return py::make_tuple(r.k, r.witness.classes);
    }, py::arg("matrix"), py::arg("exact_limit") = 20);
    m.def("random_tournament_matrix", [](int n, std::uint64_t seed) {
        return random_tournament(n, seed).to_matrix();
    }, py::arg("n"), py::arg("seed"));
    m.def("random_kpartite_matrix", &random_lower_bound_instance,
          py::arg("n"), py::arg("k"), py::arg("seed"));
    m.def("verify_triangle_property", &triangle, py::arg("matrix"), py::arg("s"),
          py::arg("budget") = 100000, py::arg("seed") = 1);
    m.def("brute_alpha_integral", [](const PreferenceMatrix& m) {
        return oracle::brute_alpha_integral(m);
    }, py::arg("matrix"), "partition-enumeration oracle, n <= 10");
}
