#include "d21/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;
using namespace d21;

namespace {

using Triple = std::tuple<long, long, long>;

Weight to_weight(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Triple to_triple(const Vec3& v) { return {v.x, v.y, v.z}; }

std::map<Triple, long> as_dict(const std::map<Vec3, long>& m) {
    std::map<Triple, long> out;
    for (const auto& [w, c] : m) out[to_triple(w)] = c;
    return out;
}

py::dict classify(const Triple& t, const std::string& zeta) {
    Parameter P = Parameter::parse(zeta);
    Weight f = to_weight(t);
    BlockId b = classify_block(P, f);
    py::dict d;
    d["weight"] = to_triple(f);
    d["atypical"] = b.atypical;
    if (b.atypical) {
        AtypicalIndex a = atypical_index(P, f);
        d["k"] = a.k;
        d["n"] = a.n;
        d["signs"] = a.signs_str();
    } else {
        d["orbit_rep"] = to_triple(b.rep);
    }
    d["block"] = b.str();
    d["regime"] = regime_name(classify_regime(P, f));
    return d;
}

std::string run_suite(const std::string& suite, const std::string& zeta, long k, long range, long height,
                      long max_n, long samples, uint64_t seed) {
    Parameter P = Parameter::parse(zeta);
    if (k < 0) k = P.generic ? 0 : 1;
    SuiteReport r;
    if (suite == "jacobi") r = verify_jacobi(P);
    else if (suite == "singular") r = verify_singular(P, max_n);
    else if (suite == "expansion") r = verify_expansion(P, std::min(max_n, 3L));
    else if (suite == "flags") r = verify_flags(P, k, range);
    else if (suite == "duality") r = verify_duality(P, k, range);
    else if (suite == "bgg") r = verify_bgg(P, k, range, height, static_cast<size_t>(samples), seed);
    else if (suite == "projective-tilting") r = verify_projective_tilting(P, k, range);
    else if (suite == "blocks") r = verify_blocks(P, 10, static_cast<size_t>(samples) * 1000, seed);
    else throw UsageError("unknown suite '" + suite + "'");
    r.suite = suite;
    return suite_json(r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<MathError>(m, "ComputationError", PyExc_ArithmeticError);

    m.def("classify", &classify, py::arg("weight"), py::arg("zeta") = "generic");
    m.def(
        "tilting_flag", [](const Triple& t, const std::string& z) { return as_dict(tilting_flag(Parameter::parse(z), to_weight(t))); },
        py::arg("weight"), py::arg("zeta") = "generic");
    m.def(
        "projective_flag",
        [](const Triple& t, const std::string& z) { return as_dict(projective_flag(Parameter::parse(z), to_weight(t))); },
        py::arg("weight"), py::arg("zeta") = "generic");
    m.def(
        "composition_factors",
        [](const Triple& t, const std::string& z, const std::string& method) {
            Parameter P = Parameter::parse(z);
            if (method == "closed") return as_dict(composition_factors(P, to_weight(t)));
            if (method == "reciprocity") return as_dict(composition_by_reciprocity(P, to_weight(t)));
            throw UsageError("method must be closed or reciprocity");
        },
        py::arg("weight"), py::arg("zeta") = "generic", py::arg("method") = "closed");
    m.def(
        "verma_character", [](const Triple& t, long H) { return as_dict(verma_character(to_weight(t), H).coeffs); },
        py::arg("weight"), py::arg("height") = 8);
    m.def(
        "simple_character",
        [](const Triple& t, const std::string& z, long H) {
            return as_dict(simple_character(Parameter::parse(z), to_weight(t), H).coeffs);
        },
        py::arg("weight"), py::arg("zeta") = "generic", py::arg("height") = 8);
    m.def(
        "block",
        [](const std::string& z, long k, long lo, long hi) {
            std::vector<Triple> out;
            for (const Weight& w : enumerate_block(Parameter::parse(z), k, lo, hi)) out.push_back(to_triple(w));
            return out;
        },
        py::arg("zeta"), py::arg("k"), py::arg("lo") = -5, py::arg("hi") = 5);
    m.def("_verify_json", &run_suite, py::arg("suite"), py::arg("zeta") = "generic", py::arg("k") = -1,
          py::arg("range") = 5, py::arg("height") = 8, py::arg("max_n") = 4, py::arg("samples") = 10,
          py::arg("seed") = 20240601);
}
