#include "lmx/hypotheses.hpp"
#include "lmx/matrix_core.hpp"
#include "lmx/pde.hpp"
#include "lmx/problem.hpp"
#include "lmx/quadrature.hpp"
#include "lmx/report.hpp"
#include "lmx/series.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lmx;

namespace {

FunctionId id_from_string(const std::string& s) {
  const auto id = parse_function_id(s);
  if (!id) throw InputError("unknown function id '" + s + "'");
  return *id;
}

RepresentationId rep_from_string(const std::string& s) {
  for (const auto rep :
       {RepresentationId::FA_NFOLD, RepresentationId::FB_SIMPLEX, RepresentationId::FD_EULER,
        RepresentationId::FD_SIMPLEX, RepresentationId::DIRICHLET_LEMMA, RepresentationId::F6,
        RepresentationId::F7, RepresentationId::F8, RepresentationId::F11, RepresentationId::F12,
        RepresentationId::F13, RepresentationId::HA, RepresentationId::HB, RepresentationId::HC})
    if (to_string(rep) == s) return rep;
  throw InputError("unknown representation id '" + s + "'");
}

FunctionSpec make_spec(const std::string& id, int n,
                       const std::map<std::string, ComplexMatrix>& params) {
  return FunctionSpec(id_from_string(id), n, params);
}

py::dict record_dict(const CheckRecord& c) {
  py::dict d;
  d["check"] = c.check;
  d["anchor"] = c.anchor;
  d["status"] = to_string(c.status);
  d["residual"] = c.residual;
  d["tol"] = c.tol;
  d["note"] = c.note;
  return d;
}

py::list report_list(const VerificationReport& r) {
  py::list out;
  for (const auto& c : r.checks) out.append(record_dict(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_lmx, m) {
  m.doc() = "Lauricella and Srivastava matrix hypergeometric functions";

  py::register_exception<InputError>(m, "LmxInputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "LmxNumericalError", PyExc_ArithmeticError);

  py::class_<SpectralSummary>(m, "SpectralSummary")
      .def_readonly("eigenvalues", &SpectralSummary::eigenvalues)
      .def_readonly("alpha", &SpectralSummary::alpha)
      .def_readonly("beta", &SpectralSummary::beta)
      .def_readonly("eigcond", &SpectralSummary::eigcond)
      .def("__repr__", [](const SpectralSummary& s) {
        return "SpectralSummary(alpha=" + std::to_string(s.alpha) +
               ", beta=" + std::to_string(s.beta) + ", eigcond=" + std::to_string(s.eigcond) + ")";
      });

  m.def("spectral_summary", &spectral_summary, py::arg("matrix"));
  m.def("is_positive_stable", &is_positive_stable, py::arg("matrix"));
  m.def("commute_residual", &commute_residual, py::arg("m1"), py::arg("m2"));
  m.def("scalar_power",
        [](double t, const ComplexMatrix& E) { return scalar_power(t, E); }, py::arg("t"),
        py::arg("exponent"));
  m.def("matrix_gamma", [](const ComplexMatrix& A) { return matrix_gamma(A); }, py::arg("matrix"));
  m.def("reciprocal_gamma", [](const ComplexMatrix& A) { return reciprocal_gamma(A); },
        py::arg("matrix"));
  m.def("pochhammer", &pochhammer, py::arg("matrix"), py::arg("n"));
  m.def("gamma_limit_approx",
        [](const ComplexMatrix& A, long n) { return gamma_limit_approx(A, n); }, py::arg("matrix"),
        py::arg("n"));
  m.def("beta_matrix",
        [](const ComplexMatrix& A, const ComplexMatrix& B, int level) {
          return beta_matrix(A, B, level);
        },
        py::arg("a"), py::arg("b"), py::arg("quad_level") = 9);
  m.def("hyper0F1", &hyper0F1, py::arg("c"), py::arg("z"));

  py::class_<FunctionSpec>(m, "FunctionSpec")
      .def(py::init(&make_spec), py::arg("id"), py::arg("n"), py::arg("parameters"))
      .def_property_readonly("id", [](const FunctionSpec& s) { return to_string(s.id()); })
      .def_property_readonly("n", &FunctionSpec::n)
      .def_property_readonly("order", &FunctionSpec::order)
      .def("parameter", &FunctionSpec::param, py::arg("role"),
           py::return_value_policy::reference_internal)
      .def("__repr__", [](const FunctionSpec& s) {
        return "FunctionSpec(" + to_string(s.id()) + ", n=" + std::to_string(s.n()) +
               ", order=" + std::to_string(s.order()) + ")";
      });

  py::class_<SeriesValue>(m, "SeriesValue")
      .def_readonly("value", &SeriesValue::value)
      .def_readonly("tail_estimate", &SeriesValue::tail_estimate)
      .def_readonly("terms_summed", &SeriesValue::terms_summed)
      .def_readonly("shell_norms", &SeriesValue::shell_norms)
      .def_property_readonly("flag", [](const SeriesValue& v) { return to_string(v.flag); })
      .def("__repr__", [](const SeriesValue& v) {
        return "SeriesValue(tail=" + std::to_string(v.tail_estimate) +
               ", flag=" + to_string(v.flag) + ")";
      });

  m.def("roles_for", [](const std::string& id, int n) { return roles_for(id_from_string(id), n); },
        py::arg("id"), py::arg("n") = 3);
  m.def("function_ids", [] {
    std::vector<std::string> v;
    for (const auto id : all_function_ids()) v.push_back(to_string(id));
    return v;
  });
  m.def("term_coefficient",
        [](const FunctionSpec& spec, const std::vector<int>& idx) {
          return term_coefficient(spec, MultiIndex(idx));
        },
        py::arg("spec"), py::arg("idx"));
  m.def("evaluate",
        [](const FunctionSpec& spec, const Point& point, int max_degree) {
          return evaluate(spec, point, TruncationPolicy{max_degree, std::nullopt});
        },
        py::arg("spec"), py::arg("point"), py::arg("max_degree") = 20);
  m.def("convergence_report",
        [](const FunctionSpec& spec, const Point& point) {
          const auto rep = convergence_report(spec, point);
          py::dict d;
          py::list spectral;
          for (const auto& c : rep.spectral) {
            py::dict cd;
            cd["name"] = c.name;
            cd["lhs"] = c.lhs;
            cd["rhs"] = c.rhs;
            cd["pass"] = c.pass;
            spectral.append(cd);
          }
          d["spectral"] = spectral;
          d["domain_condition"] = rep.domain_condition;
          d["domain_known"] = rep.domain_known;
          d["domain_pass"] = rep.domain_pass;
          d["note"] = rep.note;
          d["paper_guaranteed"] = rep.paper_guaranteed();
          return d;
        },
        py::arg("spec"), py::arg("point"));
  m.def("validate_parameters",
        [](const FunctionSpec& spec) {
          py::list out;
          for (const auto& v : validate_parameters(spec)) {
            py::dict d;
            d["condition"] = v.condition;
            d["source"] = v.source;
            d["residual"] = v.residual;
            d["threshold"] = v.threshold;
            out.append(d);
          }
          return out;
        },
        py::arg("spec"));

  m.def("representations_for", [](const std::string& id) {
    std::vector<std::string> out;
    for (const auto rep : representations_for(id_from_string(id))) out.push_back(to_string(rep));
    return out;
  });
  m.def("dirichlet_simplex_integral",
        [](const std::vector<ComplexMatrix>& A_list, const ComplexMatrix& C, int level) {
          return dirichlet_simplex_integral(A_list, C, QuadratureSpec{level});
        },
        py::arg("a_list"), py::arg("c"), py::arg("quad_level") = 8);
  m.def("integral_value",
        [](const std::string& rep, const FunctionSpec& spec, const Point& point, int level) {
          return integral_value(rep_from_string(rep), spec, point, QuadratureSpec{level});
        },
        py::arg("representation"), py::arg("spec"), py::arg("point"), py::arg("quad_level") = 8);

  m.def("coefficient_residual",
        [](const FunctionSpec& spec, int equation, const std::vector<int>& idx) {
          return coefficient_residual(PdeSystemId{spec.id(), equation}, spec, MultiIndex(idx));
        },
        py::arg("spec"), py::arg("equation"), py::arg("idx"));
  m.def("pointwise_residual",
        [](const FunctionSpec& spec, int equation, const Point& point, int max_degree) {
          return pointwise_residual(PdeSystemId{spec.id(), equation}, spec, point,
                                    TruncationPolicy{max_degree, std::nullopt});
        },
        py::arg("spec"), py::arg("equation"), py::arg("point"), py::arg("max_degree") = 14);
  m.def("pde_sweep_max_relative",
        [](const FunctionSpec& spec, int max_degree) {
          PdeVerifier v(spec);
          return v.sweep_max_relative(max_degree);
        },
        py::arg("spec"), py::arg("max_degree") = 6);
  m.def("necessity_probe",
        [](const std::string& function, int order, uint64_t seed) {
          return report_list(necessity_probe(id_from_string(function), order, seed));
        },
        py::arg("function"), py::arg("order") = 2, py::arg("seed") = 0);

  m.def("parse_problem", [](const std::string& text) {
    const ProblemFile pf = parse_problem_text(text);
    py::dict d;
    d["function"] = to_string(pf.function);
    d["n"] = pf.n;
    d["max_degree"] = pf.max_degree;
    d["quad_level"] = pf.quad_level;
    py::dict params;
    for (const auto& [role, M] : pf.parameters) params[py::str(role)] = M;
    d["parameters"] = params;
    d["points"] = pf.points;
    return d;
  });
}
