#include "cheshire/experiment.hpp"

#include <cmath>
#include <stdexcept>

namespace cheshire {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_grid(std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("sweep grid must be nonempty");
  for (double x : grid)
    if (!std::isfinite(x)) throw std::invalid_argument("sweep grid values must be finite");
}

IntensityRecord make_record(const Scenario& sc, Detector d, double norm, double scale) {
  return {sc, d, norm, norm * (scale / kReferenceIntensity), scale};
}

}  // namespace

Scenario reference_scenario(double chi) { return {NoInsertion{}, chi}; }

Scenario absorber_scenario(Path path, double transmissivity, double chi) {
  return {AbsorberInsertion{path, Transmissivity(transmissivity)}, chi};
}

Scenario magnet_scenario(Path path, double alpha_rad, Truncation trunc, double chi) {
  return {MagnetInsertion{path, RotationAngle(alpha_rad), trunc}, chi};
}

JointOperator insertion_operator(const Insertion& ins) {
  return std::visit(
      overloaded{
          [](const NoInsertion&) { return JointOperator::identity(); },
          [](const AbsorberInsertion& a) { return absorber(a.path, a.transmissivity); },
          [](const MagnetInsertion& m) { return magnetic_rotation(m.path, m.alpha, m.truncation); },
      },
      ins);
}

const char* to_string(Detector d) noexcept {
  switch (d) {
    case Detector::OSelected:
      return "O_selected";
    case Detector::OUnselected:
      return "O_unselected";
    case Detector::H:
      return "H";
  }
  return "?";
}

JointState initial_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return (JointState::product(sx_plus(), Path::I) + JointState::product(sx_minus(), Path::II)) *
         Complex{r};
}

JointState postselection_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return (JointState::product(sx_minus(), Path::I) + JointState::product(sx_minus(), Path::II)) *
         Complex{r};
}

JointState evolve(const Scenario& sc) {
  const JointOperator op = compose(phase_shifter(sc.chi), insertion_operator(sc.insertion));
  return apply(op, initial_state());
}

RunResult run(const Scenario& sc, double scale_ref_cps) {
  if (!std::isfinite(scale_ref_cps) || scale_ref_cps < 0.0)
    throw std::invalid_argument("scale_ref_cps must be finite and nonnegative");
  const PortAmplitudes ports = recombine(evolve(sc));
  const double o_sel = std::norm(spin_select_minus(ports.o));
  const double o_all = norm2(ports.o);
  const double h = norm2(ports.h);
  return {sc,
          {make_record(sc, Detector::OSelected, o_sel, scale_ref_cps),
           make_record(sc, Detector::OUnselected, o_all, scale_ref_cps),
           make_record(sc, Detector::H, h, scale_ref_cps)}};
}

double closed_form_O(const Scenario& sc) {
  const auto* magnet = std::get_if<MagnetInsertion>(&sc.insertion);
  if (magnet == nullptr || magnet->truncation != Truncation::Exact)
    throw std::invalid_argument("closed_form_O: needs an exact-magnet scenario");
  const double a = magnet->alpha.radians();
  if (magnet->path == Path::II) {
    const double c = std::cos(a / 2.0);
    return kReferenceIntensity * c * c;
  }
  if (sc.chi != 0.0)
    throw std::invalid_argument("closed_form_O: magnet on path I only has a chi = 0 closed form");
  return kReferenceIntensity / 2.0 * (3.0 - std::cos(a));
}

std::vector<RunResult> sweep_chi(const Scenario& tmpl, std::span<const double> chi_grid,
                                 double scale_ref_cps) {
  require_grid(chi_grid);
  std::vector<RunResult> out;
  out.reserve(chi_grid.size());
  for (double chi : chi_grid) {
    Scenario sc = tmpl;
    sc.chi = chi;
    out.push_back(run(sc, scale_ref_cps));
  }
  return out;
}

std::vector<RunResult> sweep_alpha(const Scenario& tmpl, std::span<const double> alpha_grid,
                                   double scale_ref_cps) {
  require_grid(alpha_grid);
  if (!std::holds_alternative<MagnetInsertion>(tmpl.insertion))
    throw std::invalid_argument("sweep_alpha: template scenario must contain a magnet");
  std::vector<RunResult> out;
  out.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    Scenario sc = tmpl;
    std::get<MagnetInsertion>(sc.insertion).alpha = RotationAngle(alpha);
    out.push_back(run(sc, scale_ref_cps));
  }
  return out;
}

std::vector<double> linspace(double start, double end, std::size_t points) {
  if (points == 0) throw std::invalid_argument("linspace: points must be positive");
  if (points == 1) return {start};
  std::vector<double> g(points);
  const double step = (end - start) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) g[k] = start + step * static_cast<double>(k);
  g.back() = end;
  return g;
}

std::vector<double> logspace(double start, double end, std::size_t points) {
  if (!(start > 0.0 && end > 0.0)) throw std::invalid_argument("logspace: bounds must be positive");
  std::vector<double> g = linspace(std::log(start), std::log(end), points);
  for (double& x : g) x = std::exp(x);
  g.front() = start;
  if (points > 1) g.back() = end;
  return g;
}

}  // namespace cheshire
