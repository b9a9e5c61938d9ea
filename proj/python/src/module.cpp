#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "rackkit/cohomology.hpp"
#include "rackkit/enveloping.hpp"
#include "rackkit/io.hpp"
#include "rackkit/registry.hpp"

namespace py = pybind11;
using namespace rackkit;

namespace {

QRack rack_from_text(const std::string& text) {
  auto any = io::parse_text(text);
  auto* s = std::get_if<io::Structure<Rational>>(&any);
  if (s == nullptr || !s->rack) throw ParseError("expected a rack structure over Q");
  return *s->rack;
}

py::dict report_dict(const RackReport& r) {
  py::dict d;
  d["coassociative"] = r.coassociative.ok;
  d["counit"] = r.counit.ok;
  d["unit_grouplike"] = r.unit_grouplike.ok;
  d["selfdist"] = r.selfdist.ok;
  d["morphism"] = r.morphism.ok;
  d["counit_mult"] = r.counit_mult.ok;
  d["unit_right"] = r.unit_right.ok;
  d["unit_left"] = r.unit_left.ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(_rackkit, m) {
  m.doc() = "Exact computations with rack bialgebras";

  // later registrations are tried first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<QRack>(m, "Rack")
      .def_static("builtin", &builtin, py::arg("name"))
      .def_static("from_json", &rack_from_text, py::arg("text"))
      .def("to_json", [](const QRack& r) { return io::dump(io::serialize(r)); })
      .def_property_readonly("dim", &QRack::dim)
      .def_property_readonly("labels", &QRack::labels)
      .def_property_readonly("unit", [](const QRack& r) { return r.labels()[r.unit()]; })
      .def("check", [](const QRack& r) { return report_dict(r.check()); })
      .def("is_cocommutative", [](const QRack& r) { return r.coalgebra().check_cocommutative(); })
      .def("satisfies_braid_relation", &QRack::satisfies_braid_relation)
      .def("tri",
           [](const QRack& r, const std::string& a, const std::string& b) {
             const auto& c = r.coalgebra();
             py::dict out;
             for (const auto& [k, coef] : r.tri(c.index_of(a), c.index_of(b))) out[py::str(r.labels()[k])] = coef.str();
             return out;
           })
      .def("__repr__", [](const QRack& r) { return "<Rack dim=" + std::to_string(r.dim()) + ">"; });

  m.def("builtin_names", &builtin_names);

  m.def(
      "enveloping",
      [](const QRack& r, int degree, int slack) {
        const auto u = build_enveloping(r, degree, slack);
        py::dict d;
        d["series"] = u.hilbert_series();
        d["stabilized"] = u.stabilized();
        d["ideal_dim"] = u.ideal_dim();
        d["letters"] = u.letter_labels();
        d["normal_words"] = u.labels();
        d["coideal"] = u.coideal();
        return d;
      },
      py::arg("rack"), py::arg("degree"), py::arg("slack") = 1);

  m.def(
      "deformation_complex",
      [](const QRack& r, std::size_t max_n) {
        const auto c = deformation_complex(r, max_n);
        py::dict d;
        d["coder_dims"] = c.coder_dims;
        d["ranks"] = c.ranks;
        d["lands"] = c.lands;
        d["d_squared_zero"] = c.d_squared_zero;
        d["betti"] = c.betti;
        return d;
      },
      py::arg("rack"), py::arg("max_n") = 2);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str());
      },
      py::arg("args"), "Run a command line; returns (exit code, JSON report text).");
}
