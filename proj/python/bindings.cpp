#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kgsolve/cli.hpp"
#include "kgsolve/error.hpp"
#include "kgsolve/hulthen.hpp"
#include "kgsolve/oracle.hpp"
#include "kgsolve/refdata.hpp"
#include "kgsolve/special_functions.hpp"

namespace py = pybind11;
using namespace kgsolve;
using hulthen::ModelParams;
using hulthen::QuantumNumbers;

namespace {

py::object printed(const std::optional<refdata::PrintedValue>& v) {
  if (!v) return py::none();
  return py::float_(v->value);
}

py::dict row_dict(const refdata::ReferenceRow& row) {
  py::dict d;
  d["m0"] = row.key.m0;
  d["m1"] = row.key.m1;
  d["V0"] = row.key.V0;
  d["S0"] = row.key.S0;
  d["n"] = row.key.n;
  d["l"] = row.key.l;
  d["e_a"] = printed(row.e_a);
  d["e_p"] = printed(row.e_p);
  d["source"] = std::string(refdata::to_string(row.source));
  d["note"] = row.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Klein-Gordon bound states in a Hulthen potential with position-dependent mass";

  auto error = py::register_exception<Error>(m, "KgsolveError", PyExc_RuntimeError);
  (void)error;

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double m0, double m1, double V0, double S0, double r0) {
             return ModelParams{m0, m1, V0, S0, r0};
           }),
           py::arg("m0") = 1.0, py::arg("m1") = 0.0, py::arg("V0") = 1.0, py::arg("S0") = 1.0,
           py::arg("r0") = 1.0)
      .def_readwrite("m0", &ModelParams::m0)
      .def_readwrite("m1", &ModelParams::m1)
      .def_readwrite("V0", &ModelParams::V0)
      .def_readwrite("S0", &ModelParams::S0)
      .def_readwrite("r0", &ModelParams::r0)
      .def("validate", &ModelParams::validate)
      .def("__repr__", [](const ModelParams& p) {
        std::ostringstream s;
        s << "ModelParams(m0=" << p.m0 << ", m1=" << p.m1 << ", V0=" << p.V0 << ", S0=" << p.S0
          << ", r0=" << p.r0 << ")";
        return s.str();
      });

  py::class_<QuantumNumbers>(m, "QuantumNumbers")
      .def(py::init([](int n, int l) { return QuantumNumbers{n, l}; }), py::arg("n") = 0,
           py::arg("l") = 0)
      .def_readwrite("n", &QuantumNumbers::n)
      .def_readwrite("l", &QuantumNumbers::l);

  py::class_<hulthen::EnergyPair>(m, "EnergyPair")
      .def_readonly("e_a", &hulthen::EnergyPair::e_a)
      .def_readonly("e_p", &hulthen::EnergyPair::e_p)
      .def_readonly("discriminant", &hulthen::EnergyPair::discriminant)
      .def_readonly("valid_a", &hulthen::EnergyPair::valid_a)
      .def_readonly("valid_p", &hulthen::EnergyPair::valid_p)
      .def_readonly("bound_a", &hulthen::EnergyPair::bound_a)
      .def_readonly("bound_p", &hulthen::EnergyPair::bound_p);

  m.def("energy_levels", &hulthen::energy_levels, py::arg("params"), py::arg("qn"),
        "Closed-form (antiparticle, particle) levels, or None when no real roots exist.");
  m.def("constant_mass_levels", &hulthen::constant_mass_levels, py::arg("params"), py::arg("qn"));
  m.def("delta_prime", &hulthen::delta_prime, py::arg("params"), py::arg("l"));

  py::class_<hulthen::BoundState>(m, "BoundState")
      .def_static("make", &hulthen::BoundState::make, py::arg("params"), py::arg("qn"),
                  py::arg("energy"))
      .def_property_readonly("energy", &hulthen::BoundState::energy)
      .def_property_readonly("alpha", [](const hulthen::BoundState& b) { return b.coeffs().alpha; })
      .def_property_readonly("delta_prime",
                             [](const hulthen::BoundState& b) { return b.coeffs().delta_prime; })
      .def_property_readonly("norm_closed", &hulthen::BoundState::norm_closed)
      .def_property_readonly("norm_quad", &hulthen::BoundState::norm_quad)
      .def("__call__", [](const hulthen::BoundState& b, double r) { return hulthen::wavefunction(b, r); })
      .def("__call__", [](const hulthen::BoundState& b, const std::vector<double>& r) {
        std::vector<double> out;
        out.reserve(r.size());
        for (double x : r) out.push_back(hulthen::wavefunction(b, x));
        return out;
      });

  py::class_<oracle::ShootResult>(m, "ShootResult")
      .def_readonly("energy", &oracle::ShootResult::energy)
      .def_readonly("nodes", &oracle::ShootResult::nodes)
      .def_readonly("iterations", &oracle::ShootResult::iterations);

  py::class_<oracle::OracleLevel>(m, "OracleLevel")
      .def_readonly("energy", &oracle::OracleLevel::energy)
      .def_readonly("nodes", &oracle::OracleLevel::nodes);

  m.def(
      "shoot",
      [](const ModelParams& p, const QuantumNumbers& qn, double lo, double hi) {
        py::gil_scoped_release release;
        return oracle::shoot(p, qn, {}, {lo, hi});
      },
      py::arg("params"), py::arg("qn"), py::arg("lo"), py::arg("hi"),
      "Node-count shooting for the level with qn.n nodes inside (lo, hi).");
  m.def(
      "find_levels",
      [](const ModelParams& p, int l, int samples) {
        py::gil_scoped_release release;
        return oracle::find_levels(p, l, {}, samples);
      },
      py::arg("params"), py::arg("l"), py::arg("samples") = 240);

  m.def(
      "jacobi",
      [](int n, double a, double b, double x) { return special::jacobi_eval(n, {a, b}, x); },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("jacobi_norm_integral", &special::jacobi_norm_integral, py::arg("n"), py::arg("z"),
        py::arg("zp"));

  m.def(
      "load_table",
      [](const std::string& id, const std::string& source) {
        py::list rows;
        for (const auto& row :
             refdata::load_table(refdata::parse_table_id(id), refdata::parse_source(source)))
          rows.append(row_dict(row));
        return rows;
      },
      py::arg("table") = "I", py::arg("source") = "ours");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
