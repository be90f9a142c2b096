#include "spinchain/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

Operator triple(const LocalOperator& a, const LocalOperator& b, const LocalOperator& c,
                int j, int n) {
  const SiteOperator ops[] = {{a, j - 1}, {b, j}, {c, j + 1}};
  return product_chain(ops, n);
}

double real_expectation(const Operator& rho, const Operator& op) {
  const cplx v = expectation(rho, op);
  if (std::abs(v.imag()) > 1e-8) {
    throw ConsistencyError("expectation has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

void summarize(const std::vector<double>& v, double& mean, double& spread) {
  if (v.empty()) {
    mean = 0.0;
    spread = 0.0;
    return;
  }
  mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  spread = *hi - *lo;
}

}  // namespace

Operator spin_current_operator(const ChainModel& model, int bond) {
  model.validate();
  const int n = model.n_sites;
  if (bond < 1 || bond > n - 1) {
    throw InvalidInput("bond " + std::to_string(bond) + " outside [1, " +
                       std::to_string(n - 1) + "]");
  }
  const auto x = pauli(PauliLabel::X);
  const auto y = pauli(PauliLabel::Y);
  const SiteOperator xy[] = {{x, bond}, {y, bond + 1}};
  const SiteOperator yx[] = {{y, bond}, {x, bond + 1}};
  return 2.0 * model.coupling(bond) * (product_chain(xy, n) - product_chain(yx, n));
}

Operator energy_current_operator(const ChainModel& model, int site, FieldTerm field) {
  model.validate();
  const int n = model.n_sites;
  const int j = site;
  if (j < 2 || j > n - 1) {
    throw InvalidInput("energy current site " + std::to_string(j) + " outside [2, " +
                       std::to_string(n - 1) + "]");
  }
  const auto x = pauli(PauliLabel::X);
  const auto y = pauli(PauliLabel::Y);
  const auto z = pauli(PauliLabel::Z);
  const Operator yzx = triple(y, z, x, j, n) - triple(x, z, y, j, n);
  const Operator zxy = triple(z, x, y, j, n) - triple(z, y, x, j, n);
  const Operator xyz = triple(x, y, z, j, n) - triple(y, x, z, j, n);

  if (model.kind == ModelKind::XXX) {
    return 2.0 * model.coupling(j - 1) * model.coupling(j) * (yzx + zxy + xyz);
  }
  const double a = model.alpha.at(0);
  Operator f = 2.0 * a *
               (a * yzx + model.anisotropy(j - 1) * zxy + model.anisotropy(j) * xyz);
  const double b = model.field_at(j);
  if (field == FieldTerm::Include && b != 0.0) {
    f += 0.5 * b * (spin_current_operator(model, j - 1) + spin_current_operator(model, j));
  }
  return f;
}

CurrentReport measure(const DensityMatrix& state, const ChainModel& model, FieldTerm field) {
  model.validate();
  if (state.n_sites() != model.n_sites) {
    throw InvalidInput("state and model have different numbers of sites");
  }
  const Operator& rho = state.matrix();
  CurrentReport report;
  for (int b = 1; b < model.n_sites; ++b) {
    report.spin_currents.push_back(real_expectation(rho, spin_current_operator(model, b)));
  }
  for (int j = 2; j < model.n_sites; ++j) {
    report.energy_currents.push_back(
        real_expectation(rho, energy_current_operator(model, j, field)));
  }
  summarize(report.spin_currents, report.mean_spin_current, report.max_site_deviation_spin);
  summarize(report.energy_currents, report.mean_energy_current,
            report.max_site_deviation_energy);
  return report;
}

}  // namespace spinchain
