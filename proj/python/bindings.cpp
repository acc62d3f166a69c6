#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "slicepoly/complex_poly.hpp"
#include "slicepoly/error.hpp"
#include "slicepoly/kernels.hpp"
#include "slicepoly/quadrature.hpp"
#include "slicepoly/quaternion.hpp"
#include "slicepoly/serialize.hpp"
#include "slicepoly/slice_poly.hpp"
#include "slicepoly/verify.hpp"

namespace py = pybind11;
using namespace slicepoly;

namespace {

std::vector<RegularSeries> series_list(const std::vector<std::vector<Quaternion>>& comps,
                                       double radius) {
  std::vector<RegularSeries> out;
  for (const auto& c : comps) out.emplace_back(c, radius);
  return out;
}

std::vector<std::vector<Quaternion>> coeff_lists(const PolySliceFunction& f) {
  std::vector<std::vector<Quaternion>> out;
  for (const auto& c : f.components()) out.push_back(c.coeffs());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternionic slice polyanalytic functions and their Fock/Bergman kernels";

  static py::exception<Error> exc(m, "SlicePolyError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(exc.ptr(), msg.c_str());
    }
  });

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init<double, double, double, double>(), py::arg("x0"), py::arg("x1") = 0.0,
           py::arg("x2") = 0.0, py::arg("x3") = 0.0)
      .def_readwrite("x0", &Quaternion::x0)
      .def_readwrite("x1", &Quaternion::x1)
      .def_readwrite("x2", &Quaternion::x2)
      .def_readwrite("x3", &Quaternion::x3)
      .def("components", &Quaternion::components)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Quaternion& q) {
        std::ostringstream os;
        os << "Quaternion" << q;
        return os.str();
      });

  py::class_<ImaginaryUnit>(m, "ImaginaryUnit")
      .def(py::init<const Quaternion&>())
      .def_static("normalized", &ImaginaryUnit::normalized)
      .def_static("i", &ImaginaryUnit::i)
      .def_static("j", &ImaginaryUnit::j)
      .def_static("k", &ImaginaryUnit::k)
      .def_property_readonly("value", &ImaginaryUnit::value);

  py::class_<SliceCoords>(m, "SliceCoords")
      .def_readonly("x", &SliceCoords::x)
      .def_readonly("y", &SliceCoords::y)
      .def_readonly("unit", &SliceCoords::unit);

  m.def("conj", [](const Quaternion& q) { return conj(q); });
  m.def("modulus", &modulus);
  m.def("slice_coords", &slice_coords);
  m.def("embed", [](const ImaginaryUnit& u, double x, double y) { return embed(u.value(), x, y); });
  m.def("orthogonal_unit", &orthogonal_unit);

  // Complex reference functions.
  py::class_<ComplexPolySeries>(m, "ComplexPolySeries")
      .def(py::init<std::vector<std::vector<Complex>>>())
      .def_property_readonly("order", &ComplexPolySeries::order)
      .def_property_readonly("components", &ComplexPolySeries::components)
      .def("__call__", &ComplexPolySeries::operator());
  m.def("fock_kernel_c", &fock_kernel_c, py::arg("n"), py::arg("z"), py::arg("w"));
  m.def("bergman_kernel_c", &bergman_kernel_c, py::arg("n"), py::arg("z"), py::arg("w"));

  // Series.
  py::class_<PolySliceFunction>(m, "PolySliceFunction")
      .def(py::init([](const std::vector<std::vector<Quaternion>>& comps, double radius) {
             return PolySliceFunction(series_list(comps, radius));
           }),
           py::arg("components"), py::arg("radius") = kInfiniteRadius)
      .def_static("from_json", [](const std::string& s) { return parse_poly_json(s); })
      .def("to_json", [](const PolySliceFunction& f) { return dump_json(f); })
      .def_property_readonly("order", &PolySliceFunction::order)
      .def_property_readonly("radius", &PolySliceFunction::radius)
      .def_property_readonly("truncated", &PolySliceFunction::truncated)
      .def_property_readonly("components", &coeff_lists)
      .def("__call__", &PolySliceFunction::operator());

  py::class_<SplitPair>(m, "SplitPair")
      .def_readonly("F", &SplitPair::F)
      .def_readonly("G", &SplitPair::G);
  py::class_<SliceComponents>(m, "SliceComponents")
      .def_readonly("alpha", &SliceComponents::alpha)
      .def_readonly("beta", &SliceComponents::beta);

  m.def("eval_poly", &eval_poly);
  m.def("split", &split);
  m.def("refined_split", &refined_split);
  m.def("representation_combine", &representation_combine);
  m.def("slice_components", &slice_components);
  m.def("extend", &extend, py::arg("h"), py::arg("unit"), py::arg("radius") = kInfiniteRadius);
  m.def("is_intrinsic", py::overload_cast<const PolySliceFunction&, double>(&is_intrinsic),
        py::arg("f"), py::arg("tol") = 1e-14);
  m.def("star_n", &star_n);
  m.def("dbar_power_numeric", &dbar_power_numeric, py::arg("f"), py::arg("unit"), py::arg("x"),
        py::arg("y"), py::arg("order"), py::arg("h") = 0.1, py::arg("richardson_levels") = 2);

  // Kernels.
  py::class_<KernelValue>(m, "KernelValue")
      .def_readonly("value", &KernelValue::value)
      .def_readonly("terms_used", &KernelValue::terms_used)
      .def_readonly("truncation_error_bound", &KernelValue::truncation_error_bound);
  m.def("e_star", &e_star, py::arg("p"), py::arg("q"), py::arg("tol") = 1e-14);
  m.def("laguerre", &laguerre, py::arg("alpha"), py::arg("j"), py::arg("x"));
  m.def("fock_kernel", &fock_kernel, py::arg("N"), py::arg("q"), py::arg("r"),
        py::arg("tol") = 1e-14);
  m.def("bergman_psi", &bergman_psi);
  m.def("bergman_kernel", &bergman_kernel);
  m.def("bergman_kernel_alt", &bergman_kernel_alt);

  // Quadrature.
  py::enum_<Space>(m, "Space").value("fock", Space::fock).value("bergman", Space::bergman);
  py::class_<QuadratureRule>(m, "QuadratureRule")
      .def_property_readonly("size", &QuadratureRule::size)
      .def_property_readonly("weights", &QuadratureRule::weights)
      .def_property_readonly("domain", [](const QuadratureRule& r) {
        return r.domain() == RuleDomain::gaussian_plane ? "gaussian_plane" : "unit_disk";
      });
  m.def("gauss_plane_rule", &gauss_plane_rule, py::arg("n") = kDefaultPlaneNodes);
  m.def("disk_rule", &disk_rule, py::arg("nr") = kDefaultDiskRadial,
        py::arg("nt") = kDefaultDiskAngular);
  m.def("reproduce_residual", &reproduce_residual);
  m.def("norm_equivalence_check", [](const PolySliceFunction& f, const ImaginaryUnit& I,
                                     const ImaginaryUnit& J, const QuadratureRule& rule) {
    const NormRatio r = norm_equivalence_check(f, I, J, rule);
    return py::make_tuple(r.ratio, r.within_bounds);
  });
  m.def("growth_bound_check", [](const PolySliceFunction& f, const Quaternion& q, Space space,
                                 const QuadratureRule& rule) {
    const GrowthMargin g = growth_bound_check(f, q, space, rule);
    return py::dict(py::arg("margin") = g.margin, py::arg("bound") = g.bound,
                    py::arg("value") = g.value);
  });

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, int samples, int nodes) {
        const auto s = parse_suite(suite);
        if (!s) throw Error(ErrorCode::Parse, "unknown suite " + suite);
        return py::module_::import("json").attr("loads")(
            run_verify(*s, {seed, samples, nodes}).to_json().dump());
      },
      py::arg("suite"), py::arg("seed") = 7, py::arg("samples") = 100, py::arg("nodes") = 0);
}
