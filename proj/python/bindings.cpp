#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/family_json.hpp"
#include "extremal/formulas.hpp"
#include "extremal/invariants.hpp"
#include "extremal/oracle.hpp"
#include "extremal/shifting.hpp"
#include "extremal/verify.hpp"

namespace py = pybind11;
namespace ex = extremal;

namespace {

py::int_ to_py(const ex::BigInt& v) {
  const std::string digits = ex::to_string(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

std::vector<int> to_list(ex::VertexSet v) { return v.vertices(); }

ex::SearchProblem problem(int n, int q, int k, int s, std::uint64_t node_limit, double time_limit, int threads) {
  ex::SearchProblem p;
  p.n = n;
  p.q = q;
  p.k = k;
  p.s = s;
  p.budget.node_limit = node_limit;
  p.budget.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
  p.threads = threads;
  return p;
}

py::dict bound_dict(const ex::BoundResult& r) {
  py::dict d;
  d["value"] = to_py(r.value);
  d["regime"] = std::string(ex::regime_name(r.regime));
  d["hypotheses_met"] = r.hypotheses_met;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_extremal, m) {
  m.doc() = "Bindings for the extremal C++ core.";

  py::register_exception<ex::ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<ex::CapacityError>(m, "CapacityError", PyExc_OverflowError);
  py::register_exception<ex::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ex::Family>(m, "Family")
      .def(py::init([](int n, int k, const std::vector<std::vector<int>>& edges) {
             return ex::Family::from_lists(n, k, edges);
           }),
           py::arg("n"), py::arg("k"), py::arg("edges") = std::vector<std::vector<int>>{})
      .def_static("complete", &ex::Family::complete, py::arg("n"), py::arg("k"))
      .def_property_readonly("n", &ex::Family::n)
      .def_property_readonly("k", &ex::Family::k)
      .def_property_readonly("edges", &ex::Family::to_lists)
      .def("__len__", &ex::Family::size)
      .def("__contains__", [](const ex::Family& f, const std::vector<int>& e) { return f.contains(ex::VertexSet::of(e)); })
      .def("__eq__", [](const ex::Family& a, const ex::Family& b) { return a == b; })
      .def("__repr__", [](const ex::Family& f) {
        return "Family(n=" + std::to_string(f.n()) + ", k=" + std::to_string(f.k()) + ", " + f.to_string() + ")";
      });

  m.def("family_to_json", &ex::family_to_json);
  m.def("family_from_json", [](const std::string& text) { return ex::family_from_json(text); });

  m.def("matching_number", [](const ex::Family& f) { return ex::matching_number(f).nu; });
  m.def("covering_number", [](const ex::Family& f) { return ex::covering_number(f).tau; });
  m.def("clique_number", [](const ex::Family& f) { return ex::clique_number(f).omega; });
  m.def("invariants", [](const ex::Family& f) {
    const ex::InvariantReport r = ex::invariants(f);
    std::vector<std::vector<int>> matching;
    for (ex::Edge e : r.matching_witness) matching.push_back(to_list(e));
    py::dict d;
    d["nu"] = r.nu;
    d["tau"] = r.tau;
    d["omega"] = r.omega;
    d["shifted"] = ex::is_shifted(f);
    d["matching"] = matching;
    d["cover"] = to_list(r.cover_witness);
    d["clique"] = to_list(r.clique_witness);
    return d;
  });

  m.def("shift_ij", &ex::shift_ij, py::arg("family"), py::arg("i"), py::arg("j"));
  m.def("shift_closure", &ex::shift_closure);
  m.def("is_shifted", &ex::is_shifted);

  m.def(
      "build",
      [](const std::string& family, const std::map<std::string, int>& params, const std::vector<int>& sigma) {
        ex::ConstructionSpec spec;
        spec.kind = ex::parse_kind(family);
        spec.params = params;
        spec.sigma = sigma;
        return ex::build(spec);
      },
      py::arg("family"), py::arg("params"), py::arg("sigma") = std::vector<int>{},
      "Build a named family, e.g. build('A', {'n': 10, 'q': 7, 'k': 3, 's': 2}).");

  m.def("size_A", [](int n, int q, int k, int s) { return to_py(ex::size_A(n, q, k, s)); });
  m.def("conjecture_rhs", [](int n, int q, int k, int s) { return to_py(ex::conjecture_rhs(n, q, k, s)); });
  m.def("m_closed", [](int n, int q, int k, int s) { return bound_dict(ex::m_closed(n, q, k, s)); });
  m.def("m_star_closed", [](int n, int q, int k, int s) { return bound_dict(ex::m_star_closed(n, q, k, s)); });
  m.def(
      "cross_bound",
      [](int n, int k, int l, int t, int s, const std::string& beta) {
        const ex::CrossBoundResult r = ex::cross_bound(n, k, l, t, s, ex::parse_rational(beta));
        py::dict d;
        d["value"] = ex::to_string(r.value);
        d["argmax"] = r.argmax;
        d["hypotheses_met"] = r.hypotheses_met;
        d["note"] = r.note;
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("l"), py::arg("t"), py::arg("s"), py::arg("beta") = "1");

  py::class_<ex::SearchResult>(m, "SearchResult")
      .def_readonly("value", &ex::SearchResult::value)
      .def_readonly("witness", &ex::SearchResult::witness)
      .def_readonly("nodes_explored", &ex::SearchResult::nodes_explored)
      .def_readonly("proven_optimal", &ex::SearchResult::proven_optimal);

  const std::uint64_t default_nodes = ex::SearchBudget{}.node_limit;
  auto bind_search = [&](const char* name, ex::SearchResult (*fn)(const ex::SearchProblem&)) {
    m.def(
        name,
        [fn](int n, int q, int k, int s, std::uint64_t node_limit, double time_limit, int threads) {
          const ex::SearchProblem p = problem(n, q, k, s, node_limit, time_limit, threads);
          py::gil_scoped_release release;
          return fn(p);
        },
        py::arg("n"), py::arg("q"), py::arg("k"), py::arg("s"), py::arg("node_limit") = default_nodes,
        py::arg("time_limit") = 600.0, py::arg("threads") = 1);
  };
  bind_search("exact_m", &ex::exact_m);
  bind_search("exact_m_star", &ex::exact_m_star);
  bind_search("exact_m_via_stars", &ex::exact_m_via_stars);

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        ex::SuiteOptions o;
        o.seed = seed;
        const ex::SuiteReport r = ex::run_suite(name, o);
        py::dict d;
        d["suite"] = r.suite;
        d["passed"] = r.passed;
        d["inconclusive"] = r.inconclusive;
        d["checks"] = r.checks;
        d["violations"] = r.violations;
        d["lines"] = r.lines;
        return d;
      },
      py::arg("name"), py::arg("seed") = 0);
}
