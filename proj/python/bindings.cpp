#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcx/area.hpp"
#include "qcx/certify.hpp"
#include "qcx/extension.hpp"
#include "qcx/io.hpp"
#include "qcx/series.hpp"

namespace py = pybind11;
using namespace qcx;

namespace {

DerivativeMethod method_from(const std::string& name, double h) {
  if (name == "closed")
    return DerivativeMethod::closed_form();
  if (name == "fd")
    return DerivativeMethod::finite_difference(h);
  throw py::value_error("method must be 'closed' or 'fd'");
}

py::tuple wirtinger_tuple(const WirtingerPair& w) { return py::make_tuple(w.dz, w.dzb); }

} // namespace

PYBIND11_MODULE(_qcx, m) {
  m.doc() = "Quasiconformal extensions of univalent functions with a pole in [0, 1)";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<PoleMismatch>(m, "PoleMismatch", base.ptr());
  py::register_exception<RuleMismatch>(m, "RuleMismatch", base.ptr());
  py::register_exception<DegenerateError>(m, "DegenerateError", base.ptr());
  py::register_exception<NonFiniteError>(m, "NonFiniteError", base.ptr());
  py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_AssertionError);

  m.attr("DEFAULT_TRUNCATION") = kDefaultTruncation;

  py::class_<PoledFunction>(m, "PoledFunction")
      .def(py::init([](double p, std::vector<cplx> coeffs, double tail,
                       std::optional<std::pair<double, double>> envelope) {
             std::optional<GeometricEnvelope> env;
             if (envelope)
               env = GeometricEnvelope{envelope->first, envelope->second};
             return PoledFunction(p, std::move(coeffs), tail, env);
           }),
           py::arg("p"), py::arg("coeffs") = std::vector<cplx>{}, py::arg("tail_bound") = 0.0,
           py::arg("envelope") = py::none())
      .def_property_readonly("pole", &PoledFunction::pole)
      .def_property_readonly("coeffs", [](const PoledFunction& f) {
        return std::vector<cplx>(f.coeffs().begin(), f.coeffs().end());
      })
      .def_property_readonly("tail_bound", &PoledFunction::tail_bound)
      .def("to_json", [](const PoledFunction& f) { return io::to_json(f).dump(); })
      .def("__call__", &evaluate_inside, py::arg("z"));

  py::class_<WeightedSums>(m, "WeightedSums")
      .def_readonly("sum_n_sq", &WeightedSums::sum_n_sq)
      .def_readonly("sum_n_abs", &WeightedSums::sum_n_abs)
      .def_readonly("tail_bound", &WeightedSums::tail_bound)
      .def_readonly("sq_tail_bound", &WeightedSums::sq_tail_bound);

  m.def("evaluate_inside", &evaluate_inside, py::arg("f"), py::arg("z"));
  m.def("extremal_theorem1", &extremal_theorem1, py::arg("p"), py::arg("a0"), py::arg("a1"),
        py::arg("order") = kDefaultTruncation);
  m.def("chichra_extremal", &chichra_extremal, py::arg("p"), py::arg("a0") = cplx{});
  m.def("hadamard_product", &hadamard_product, py::arg("f"), py::arg("g"));
  m.def("weighted_sums", &weighted_sums, py::arg("f"));
  m.def(
      "coefficients_from_omega",
      [](const std::function<cplx(cplx)>& omega, std::size_t order, double radius,
         std::optional<std::size_t> samples) {
        return samples ? coefficients_from_omega(omega, order, radius, *samples)
                       : coefficients_from_omega(omega, order, radius);
      },
      py::arg("omega"), py::arg("order"), py::arg("radius"), py::arg("samples") = py::none());

  py::class_<AnalyticPart>(m, "AnalyticPart")
      .def_static("polynomial", &AnalyticPart::polynomial, py::arg("coeffs"))
      .def_static("from_callable", &AnalyticPart::from_callable, py::arg("value"),
                  py::arg("derivative"), py::arg("derivative_bound"))
      .def("__call__", &AnalyticPart::value)
      .def("derivative", &AnalyticPart::derivative)
      .def_property_readonly("derivative_bound", &AnalyticPart::derivative_bound);

  py::class_<ExtensionMap>(m, "ExtensionMap")
      .def_property_readonly("inner", &ExtensionMap::inner)
      .def_property_readonly("pole", &ExtensionMap::pole)
      .def("__call__", &evaluate, py::arg("z"));

  m.def("build_extremal_extension", &build_extremal_extension, py::arg("p"), py::arg("a0"),
        py::arg("a1"), py::arg("order") = kDefaultTruncation);
  m.def("build_theorem2_extension", &build_theorem2_extension, py::arg("omega"), py::arg("p"),
        py::arg("order") = kDefaultTruncation);
  m.def("evaluate", &evaluate, py::arg("map"), py::arg("z"));
  m.def(
      "wirtinger_closed_form",
      [](const ExtensionMap& map, cplx z) { return wirtinger_tuple(wirtinger_closed_form(map, z)); },
      py::arg("map"), py::arg("z"));
  m.def(
      "wirtinger_numeric",
      [](const ExtensionMap& map, cplx z, double h) { return wirtinger_tuple(wirtinger_numeric(map, z, h)); },
      py::arg("map"), py::arg("z"), py::arg("h") = kDefaultStep);
  m.def(
      "dilatation",
      [](const ExtensionMap& map, cplx z, const std::string& method, double h) {
        return dilatation(map, z, method_from(method, h));
      },
      py::arg("map"), py::arg("z"), py::arg("method") = "closed", py::arg("h") = kDefaultStep);

  py::class_<AnnulusGrid>(m, "AnnulusGrid")
      .def(py::init<>())
      .def(py::init([](double inner, double outer, std::size_t radii, std::size_t angles) {
             return AnnulusGrid{inner, outer, radii, angles};
           }),
           py::arg("inner_radius"), py::arg("outer_radius"), py::arg("radii"), py::arg("angles"))
      .def_readwrite("inner_radius", &AnnulusGrid::inner_radius)
      .def_readwrite("outer_radius", &AnnulusGrid::outer_radius)
      .def_readwrite("radii", &AnnulusGrid::radii)
      .def_readwrite("angles", &AnnulusGrid::angles);

  py::class_<DilatationSweep>(m, "DilatationSweep")
      .def_readonly("sup", &DilatationSweep::sup)
      .def_readonly("inf", &DilatationSweep::inf)
      .def_readonly("evaluated", &DilatationSweep::evaluated)
      .def_readonly("skipped", &DilatationSweep::skipped);

  m.def(
      "sweep_dilatation",
      [](const ExtensionMap& map, const AnnulusGrid& grid, const std::string& method, double h) {
        return sweep_dilatation(map, grid, method_from(method, h));
      },
      py::arg("map"), py::arg("grid") = AnnulusGrid{}, py::arg("method") = "closed",
      py::arg("h") = kDefaultStep);
  m.def(
      "sup_dilatation",
      [](const ExtensionMap& map, const AnnulusGrid& grid, const std::string& method, double h) {
        return sup_dilatation(map, grid, method_from(method, h));
      },
      py::arg("map"), py::arg("grid") = AnnulusGrid{}, py::arg("method") = "closed",
      py::arg("h") = kDefaultStep);
  m.def("boundary_mismatch", &boundary_mismatch, py::arg("map"), py::arg("samples"));

  py::class_<AreaReport>(m, "AreaReport")
      .def_readonly("series_area", &AreaReport::series_area)
      .def_readonly("quadrature_area", &AreaReport::quadrature_area)
      .def_readonly("abs_discrepancy", &AreaReport::abs_discrepancy)
      .def_readonly("rel_discrepancy", &AreaReport::rel_discrepancy)
      .def_readonly("samples", &AreaReport::samples)
      .def_readonly("tail_warning", &AreaReport::tail_warning);
  py::class_<AreaTheoremCheck>(m, "AreaTheoremCheck")
      .def_readonly("passed", &AreaTheoremCheck::pass)
      .def_readonly("equality", &AreaTheoremCheck::equality)
      .def_readonly("lhs", &AreaTheoremCheck::lhs)
      .def_readonly("bound", &AreaTheoremCheck::bound)
      .def_readonly("slack", &AreaTheoremCheck::slack);
  py::class_<A1BoundCheck>(m, "A1BoundCheck")
      .def_readonly("passed", &A1BoundCheck::pass)
      .def_readonly("a1_abs", &A1BoundCheck::a1_abs)
      .def_readonly("bound", &A1BoundCheck::bound)
      .def_readonly("margin", &A1BoundCheck::margin);

  m.def("complement_area_series", [](const PoledFunction& f) { return complement_area_series(f).value; },
        py::arg("f"));
  m.def("complement_area_green", &complement_area_green, py::arg("f"),
        py::arg("samples") = kDefaultAreaSamples);
  m.def("area_report", &area_report, py::arg("f"), py::arg("samples") = kDefaultAreaSamples);
  m.def("area_theorem_check", &area_theorem_check, py::arg("f"), py::arg("k"));
  m.def("a1_bound_check", &a1_bound_check, py::arg("f"), py::arg("k"));

  py::class_<MembershipCertificate>(m, "MembershipCertificate")
      .def_readonly("witness_k", &MembershipCertificate::witness_k)
      .def_readonly("valid", &MembershipCertificate::valid)
      .def_readonly("sampled", &MembershipCertificate::sampled)
      .def_readonly("inputs", &MembershipCertificate::inputs)
      .def_property_readonly("test", [](const MembershipCertificate& c) { return std::string(to_string(c.test)); })
      .def("to_json", [](const MembershipCertificate& c) { return io::to_json(c).dump(); });

  m.def("corollary1_certificate", &corollary1_certificate, py::arg("f"));
  m.def("theorem2_certificate", py::overload_cast<double, double>(&theorem2_certificate),
        py::arg("derivative_bound"), py::arg("p"));
  m.def("theorem2_certificate", py::overload_cast<const AnalyticPart&, double>(&theorem2_certificate),
        py::arg("omega"), py::arg("p"));
  m.def(
      "theorem2_certificate_sampled",
      [](const std::function<cplx(cplx)>& derivative, double p) {
        return theorem2_certificate_sampled(derivative, p);
      },
      py::arg("derivative"), py::arg("p"));
  m.def("theorem3_certificate", &theorem3_certificate, py::arg("k1"), py::arg("k2"), py::arg("p"));

  py::class_<ProbeReport>(m, "ProbeReport")
      .def_readonly("pairs", &ProbeReport::pairs)
      .def_readonly("min_ratio", &ProbeReport::min_ratio)
      .def_readonly("lower_bound", &ProbeReport::lower_bound)
      .def_readonly("meets_bound", &ProbeReport::meets_bound)
      .def_readonly("collision", &ProbeReport::collision);
  m.def("injectivity_probe", &injectivity_probe, py::arg("f"), py::arg("k"), py::arg("pairs"),
        py::arg("seed"), py::arg("enforce_bound") = false);
}
