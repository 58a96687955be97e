#include "hydrocx/complexity.hpp"
#include "hydrocx/error.hpp"
#include "hydrocx/measures.hpp"
#include "hydrocx/oracle.hpp"
#include "hydrocx/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hydrocx;

namespace {

Space space_of(const std::string& s) { return parse_space(s); }

std::vector<Space> spaces_of(const std::string& s) {
  if (s == "both") {
    return {Space::Position, Space::Momentum};
  }
  return {parse_space(s)};
}

QuadratureSpec quad(double rel_tol, int max_panels) {
  QuadratureSpec q;
  q.rel_tol = rel_tol;
  q.max_panels = max_panels;
  q.validate();
  return q;
}

py::dict measure_dict(const MeasureSet& m) {
  py::dict d;
  d["space"] = std::string(to_string(m.space));
  d["provenance"] = std::string(to_string(m.provenance));
  d["normalization"] = m.normalization.value;
  d["disequilibrium"] = m.disequilibrium.value;
  d["shannon"] = m.shannon.value;
  d["fisher"] = m.fisher.value;
  d["variance"] = m.variance.value;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Information measures and complexities of D-dimensional hydrogenic states";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<StateError>(m, "StateError", PyExc_ValueError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);

  py::class_<HyperState>(m, "HyperState")
      .def(py::init([](int dim, int n, std::vector<int> mu) { return validate_state(dim, n, std::move(mu)); }),
           py::arg("D"), py::arg("n"), py::arg("mu"))
      .def_readonly("D", &HyperState::dim)
      .def_readonly("n", &HyperState::n)
      .def_readonly("mu", &HyperState::mu)
      .def_property_readonly("l", &HyperState::l)
      .def_property_readonly("m_abs", &HyperState::m_abs)
      .def("__eq__", [](const HyperState& a, const HyperState& b) { return a == b; })
      .def("__repr__", [](const HyperState& s) { return "HyperState(" + to_string(s) + ")"; });

  m.def("circular_state", &circular_state, py::arg("n"), py::arg("D"));
  m.def("enumerate_states", &enumerate_states, py::arg("D"), py::arg("n_max"));

  m.def(
      "derived_params",
      [](const HyperState& s, double Z) {
        const auto p = derived_params(s, NuclearCharge{Z});
        py::dict d;
        d["eta"] = p.eta;
        d["L"] = p.L;
        d["lambda"] = p.lambda;
        d["energy"] = p.energy;
        return d;
      },
      py::arg("state"), py::arg("Z") = 1.0);

  m.def(
      "position_density",
      [](const HyperState& s, double r, std::vector<double> angles, double Z) {
        return position_density(s, NuclearCharge{Z}, r, angles);
      },
      py::arg("state"), py::arg("r"), py::arg("angles"), py::arg("Z") = 1.0);
  m.def(
      "momentum_density",
      [](const HyperState& s, double p, std::vector<double> angles, double Z) {
        return momentum_density(s, NuclearCharge{Z}, p, angles);
      },
      py::arg("state"), py::arg("p"), py::arg("angles"), py::arg("Z") = 1.0);

  m.def(
      "measures",
      [](const HyperState& s, const std::string& space, double Z, double rel_tol, int max_panels) {
        return measure_dict(measures::closed_form_measures(s, NuclearCharge{Z}, space_of(space),
                                                           quad(rel_tol, max_panels)));
      },
      py::arg("state"), py::arg("space") = "position", py::arg("Z") = 1.0, py::arg("rel_tol") = 1e-10,
      py::arg("max_panels") = 4096);
  m.def(
      "oracle_measures",
      [](const HyperState& s, const std::string& space, double Z, double rel_tol, int max_panels) {
        return measure_dict(
            oracle::measures(s, NuclearCharge{Z}, space_of(space), quad(rel_tol, max_panels)));
      },
      py::arg("state"), py::arg("space") = "position", py::arg("Z") = 1.0, py::arg("rel_tol") = 1e-10,
      py::arg("max_panels") = 4096);
  m.def(
      "oracle_moment",
      [](const HyperState& s, int k, const std::string& space, double Z) {
        return oracle::moment(s, NuclearCharge{Z}, space_of(space), k).value;
      },
      py::arg("state"), py::arg("k"), py::arg("space") = "position", py::arg("Z") = 1.0);

  m.def(
      "complexities",
      [](const HyperState& s, const std::string& space, double Z) {
        const auto t = complexity::complexities(s, NuclearCharge{Z}, space_of(space));
        py::dict d;
        d["lmc"] = t.lmc.value;
        d["fisher_shannon"] = t.fisher_shannon.value;
        d["cramer_rao"] = t.cramer_rao.value;
        return d;
      },
      py::arg("state"), py::arg("space") = "position", py::arg("Z") = 1.0);
  m.def(
      "ground_state_lmc",
      [](int dim, const std::string& space) { return complexity::ground_state_lmc(dim, space_of(space)); },
      py::arg("D"), py::arg("space") = "position");
  m.def(
      "circular_lmc",
      [](int n, int dim, const std::string& space) {
        return complexity::circular_lmc(n, dim, space_of(space));
      },
      py::arg("n"), py::arg("D"), py::arg("space") = "position");

  m.def(
      "_compute_json",
      [](const HyperState& s, double Z, const std::string& space) {
        return report::to_json(report::compute_state(s, NuclearCharge{Z}, spaces_of(space))).dump();
      },
      py::arg("state"), py::arg("Z") = 1.0, py::arg("space") = "both");
  m.def(
      "sweep_csv",
      [](std::vector<int> dims, int n_min, int n_max, const std::string& family,
         std::vector<std::vector<int>> mu, std::vector<std::string> spaces,
         std::vector<std::string> measure_names, double Z, int threads) {
        report::SweepRequest req;
        req.dims = std::move(dims);
        req.n_min = n_min;
        req.n_max = n_max;
        req.family = family == "explicit" ? report::Family::Explicit : report::Family::Circular;
        req.mu_list = std::move(mu);
        req.spaces.clear();
        for (const auto& s : spaces) {
          req.spaces.push_back(parse_space(s));
        }
        req.measures.clear();
        for (const auto& s : measure_names) {
          req.measures.push_back(report::parse_measure(s));
        }
        req.Z = Z;
        py::gil_scoped_release unlock;
        return report::sweep_csv(report::run_sweep(req, {}, threads));
      },
      py::arg("dims"), py::arg("n_min"), py::arg("n_max"), py::arg("family") = "circular",
      py::arg("mu") = std::vector<std::vector<int>>{}, py::arg("spaces") = std::vector<std::string>{"position"},
      py::arg("measures") = std::vector<std::string>{"lmc"}, py::arg("Z") = 1.0, py::arg("threads") = 1);
  m.def(
      "_validate_json",
      [](std::vector<int> dims, int n_max, double tol, int threads) {
        report::ValidationRequest req;
        req.dims = std::move(dims);
        req.n_max = n_max;
        req.gate = tol;
        py::gil_scoped_release unlock;
        return report::validation_json(report::run_validation(req, {}, threads)).dump();
      },
      py::arg("dims"), py::arg("n_max"), py::arg("tol") = 1e-6, py::arg("threads") = 1);
}
