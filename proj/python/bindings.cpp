#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cheshire/analysis.hpp"
#include "cheshire/elements.hpp"
#include "cheshire/experiment.hpp"
#include "cheshire/weak.hpp"

namespace py = pybind11;
using namespace cheshire;

namespace {

py::dict run_to_dict(const RunResult& r) {
  py::dict d;
  for (Detector det : kAllDetectors) {
    py::dict rec;
    rec["intensity_norm"] = r.at(det).intensity_norm;
    rec["intensity_cps"] = r.at(det).intensity_cps;
    rec["scale_ref_cps"] = r.at(det).scale_ref_cps;
    d[to_string(det)] = rec;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact simulator of the neutron-interferometer weak-value experiment";

  py::enum_<Path>(m, "Path").value("I", Path::I).value("II", Path::II);
  py::enum_<Truncation>(m, "Truncation")
      .value("Exact", Truncation::Exact)
      .value("Linear", Truncation::Linear)
      .value("Quadratic", Truncation::Quadratic);
  py::enum_<Detector>(m, "Detector")
      .value("O_selected", Detector::OSelected)
      .value("O_unselected", Detector::OUnselected)
      .value("H", Detector::H);

  py::class_<Scenario>(m, "Scenario")
      .def_readwrite("chi", &Scenario::chi)
      .def("__repr__", [](const Scenario& sc) {
        return "<Scenario chi=" + std::to_string(sc.chi) + ">";
      });

  m.def("reference_scenario", &reference_scenario, py::arg("chi") = 0.0);
  m.def("absorber_scenario", &absorber_scenario, py::arg("path"), py::arg("transmissivity"),
        py::arg("chi") = 0.0);
  m.def("magnet_scenario", &magnet_scenario, py::arg("path"), py::arg("alpha_rad"),
        py::arg("truncation") = Truncation::Exact, py::arg("chi") = 0.0);

  m.def(
      "run", [](const Scenario& sc, double scale) { return run_to_dict(run(sc, scale)); },
      py::arg("scenario"), py::arg("scale_ref_cps") = kDefaultScaleRefCps,
      "Intensities at every detector, keyed by detector name.");
  m.def("closed_form_O", &closed_form_O, py::arg("scenario"));
  m.def(
      "sweep_chi",
      [](const Scenario& tmpl, std::vector<double> grid, Detector det) {
        std::vector<double> out;
        for (const auto& r : sweep_chi(tmpl, grid)) out.push_back(r.norm(det));
        return out;
      },
      py::arg("template"), py::arg("grid"), py::arg("detector") = Detector::OSelected);
  m.def(
      "sweep_alpha",
      [](const Scenario& tmpl, std::vector<double> grid, Detector det) {
        std::vector<double> out;
        for (const auto& r : sweep_alpha(tmpl, grid)) out.push_back(r.norm(det));
        return out;
      },
      py::arg("template"), py::arg("grid"), py::arg("detector") = Detector::OSelected);

  m.def("weak_values", []() {
    const WeakValueSet wv = weak_values();
    py::dict d;
    d["pi_I"] = wv.pi_I;
    d["pi_II"] = wv.pi_II;
    d["sigma_pi_I"] = wv.sigma_pi_I;
    d["sigma_pi_II"] = wv.sigma_pi_II;
    return d;
  });
  m.def(
      "weakvalue_intensity",
      [](double alpha, Path path, double i_ref) {
        return weakvalue_intensity(RotationAngle(alpha), path, weak_values(), i_ref);
      },
      py::arg("alpha_rad"), py::arg("path"), py::arg("i_ref_norm") = kReferenceIntensity,
      "Second-order intensity expansion evaluated with the interferometer's weak values.");
  m.def(
      "projective_spin_expectation", [](Path p) { return projective_spin_expectation(p); },
      py::arg("path"));
  m.def(
      "estimate_sigma_pi",
      [](double i_mag, double i_ref, double alpha, double pi_w, double s_mag, double s_ref) {
        const auto e = estimate_sigma_pi(i_mag, i_ref, RotationAngle(alpha), pi_w, s_mag, s_ref);
        return py::make_tuple(e.value, e.uncertainty);
      },
      py::arg("i_mag_norm"), py::arg("i_ref_norm"), py::arg("alpha_rad"), py::arg("pi_w"),
      py::arg("sigma_mag") = 0.0, py::arg("sigma_ref") = 0.0);
  m.def(
      "estimate_pi_from_absorber",
      [](double i_abs, double i_ref, double t, double s_abs, double s_ref) {
        const auto e = estimate_pi_from_absorber(i_abs, i_ref, Transmissivity(t), s_abs, s_ref);
        return py::make_tuple(e.value, e.uncertainty);
      },
      py::arg("i_abs_norm"), py::arg("i_ref_norm"), py::arg("transmissivity"),
      py::arg("sigma_abs") = 0.0, py::arg("sigma_ref") = 0.0);

  py::class_<TruncationReport>(m, "TruncationReport")
      .def_readonly("path", &TruncationReport::path)
      .def_readonly("alpha", &TruncationReport::alpha)
      .def_readonly("i_exact", &TruncationReport::i_exact)
      .def_readonly("i_linear", &TruncationReport::i_linear)
      .def_readonly("i_quadratic", &TruncationReport::i_quadratic)
      .def_readonly("linear_error_exponent", &TruncationReport::linear_error_exponent)
      .def_readonly("quadratic_error_exponent", &TruncationReport::quadratic_error_exponent);
  m.def(
      "truncation_scan",
      [](Path p, std::vector<double> grid) { return truncation_scan(p, grid); }, py::arg("path"),
      py::arg("alpha_grid"));
  m.def(
      "cheshire_witness",
      [](double alpha) {
        const auto w = cheshire_witness(RotationAngle(alpha));
        return py::make_tuple(w.deficit_linear, w.deficit_quadratic, w.deficit_exact);
      },
      py::arg("alpha_rad"), "(deficit_linear, deficit_quadratic, deficit_exact)");

  py::class_<CountSample>(m, "CountSample")
      .def_readonly("rate_cps", &CountSample::rate_cps)
      .def_readonly("duration_s", &CountSample::duration_s)
      .def_readonly("counts", &CountSample::counts)
      .def_readonly("est_rate", &CountSample::est_rate)
      .def_readonly("est_sigma", &CountSample::est_sigma);
  m.def("poisson_counts", &poisson_counts, py::arg("rate_cps"), py::arg("duration_s"),
        py::arg("seed"));

  py::class_<ReproductionRow>(m, "ReproductionRow")
      .def_readonly("quantity", &ReproductionRow::quantity)
      .def_readonly("theory_norm", &ReproductionRow::theory_norm)
      .def_readonly("theory_cps", &ReproductionRow::theory_cps)
      .def_readonly("theory_sigma_cps", &ReproductionRow::theory_sigma_cps)
      .def_readonly("measured_cps", &ReproductionRow::measured_cps)
      .def_readonly("measured_sigma_cps", &ReproductionRow::measured_sigma_cps)
      .def_readonly("agrees", &ReproductionRow::agrees);
  m.def("reproduce_paper_table", []() { return reproduce_paper_table(); });
}
