#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lchkit/diagram.hpp"
#include "lchkit/disks.hpp"
#include "lchkit/errors.hpp"
#include "lchkit/front.hpp"
#include "lchkit/io.hpp"
#include "lchkit/obstruction.hpp"
#include "lchkit/render.hpp"

namespace py = pybind11;
using namespace lchkit;

namespace {

FourierBoundary boundary_from(const std::vector<std::complex<double>>& inner, const std::vector<std::complex<double>>& outer) {
  FourierBoundary b;
  b.inner = inner;
  b.outer = outer;
  const std::size_t n = std::max(inner.size(), outer.size());
  b.inner.resize(n, 0.0);
  b.outer.resize(n, 0.0);
  return b;
}

}  // namespace

PYBIND11_MODULE(_lchkit, m) {
  m.doc() = "Legendrian contact homology toolkit";

  static py::exception<Error> error(m, "LchkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(e.what());
      inst.attr("kind") = e.name();
      inst.attr("location") = e.location();
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<FrontDiagram>(m, "Front")
      .def(py::init([](const std::string& text) { return parse_front(text); }), py::arg("text"))
      .def("__str__", &serialize_front)
      .def_property_readonly("component_count", &FrontDiagram::component_count)
      .def_property_readonly("crossing_count", &FrontDiagram::crossing_count)
      .def_property_readonly("is_plat", &FrontDiagram::is_plat)
      .def("platify", &platify)
      .def("invariants", [](const FrontDiagram& f) {
        std::vector<std::pair<int, int>> out;
        for (const auto& i : classical_invariants(f)) out.emplace_back(i.tb, i.rot);
        return out;
      });

  py::class_<LagrangianDiagram>(m, "Diagram")
      .def_property_readonly("chord_labels", [](const LagrangianDiagram& d) {
        std::vector<std::string> out;
        for (const auto& c : d.chords()) out.push_back(c.label);
        return out;
      })
      .def_property_readonly("bounded_face_count", &LagrangianDiagram::bounded_face_count)
      .def_property_readonly("component_count", &LagrangianDiagram::component_count)
      .def_property_readonly("cap_count", [](const LagrangianDiagram& d) { return d.caps().size(); })
      .def_property_readonly("is_lrs", [](const LagrangianDiagram& d) { return check_left_right_simple(d).lrs; })
      .def("euler_characteristic", &count_euler)
      .def("to_json", [](const LagrangianDiagram& d) { return dump(diagram_to_json(d)); });

  m.def("resolve", [](const FrontDiagram& f, bool require_plat) { return resolve(f, require_plat); }, py::arg("front"),
        py::arg("require_plat") = true);
  m.def("diagram_from_json", [](const std::string& text) { return diagram_from_json(Json::parse(text)); });
  m.def("n_copy", &n_copy, py::arg("diagram"), py::arg("n"));

  m.def("rigid_disks_json", [](const LagrangianDiagram& d, bool no_touching) {
    py::gil_scoped_release release;
    return dump(disks_to_json(d, enumerate_rigid_disks(d, {no_touching, 0}), true));
  }, py::arg("diagram"), py::arg("enforce_no_touching") = true);
  m.def("dga_json", [](const LagrangianDiagram& d, bool with_t) {
    py::gil_scoped_release release;
    const auto disks = enumerate_rigid_disks(d);
    return dump(dga_to_json(d, disks, grade_chords(d, disks), with_t));
  }, py::arg("diagram"), py::arg("with_t_marker") = false);
  m.def("chords_json", [](const LagrangianDiagram& d) {
    py::gil_scoped_release release;
    return dump(chords_to_json(d, grade_chords(d, enumerate_rigid_disks(d))));
  });
  m.def("census_json", [](const LagrangianDiagram& d) {
    py::gil_scoped_release release;
    return dump(census_to_json(d, index2_census(d)));
  });
  m.def("render_svg", [](const LagrangianDiagram& d, const std::vector<int>& highlight, bool labels) {
    return render_svg(d, {highlight, labels});
  }, py::arg("diagram"), py::arg("highlight") = std::vector<int>{}, py::arg("labels") = true);

  m.def("obstruction_integral", [](double C, const std::vector<std::complex<double>>& inner,
                                   const std::vector<std::complex<double>>& outer) {
    return obstruction_integral(make_annulus(C), boundary_from(inner, outer));
  }, py::arg("modulus"), py::arg("inner"), py::arg("outer"));
  m.def("obstruction_quadrature", [](double C, const std::vector<std::complex<double>>& inner,
                                     const std::vector<std::complex<double>>& outer, int samples) {
    return obstruction_quadrature(harmonic_extend(make_annulus(C), boundary_from(inner, outer)), samples);
  }, py::arg("modulus"), py::arg("inner"), py::arg("outer"), py::arg("samples") = 0);
  m.def("find_obstruction_zero", [](double C, const std::function<py::tuple(double)>& family, std::pair<double, double> bracket,
                                    double tol) {
    const auto z = find_obstruction_zero(make_annulus(C), [&](double T) {
      const py::tuple t = family(T);
      return boundary_from(t[0].cast<std::vector<std::complex<double>>>(), t[1].cast<std::vector<std::complex<double>>>());
    }, bracket, tol);
    return py::dict(py::arg("T") = z.T, py::arg("value") = z.value, py::arg("slope") = z.slope,
                    py::arg("iterations") = z.iterations);
  }, py::arg("modulus"), py::arg("family"), py::arg("bracket"), py::arg("tol") = 1e-9);
}
