#include "spinchain/chain_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinchain/error.hpp"

namespace spinchain {

void ChainModel::validate() const {
  if (n_sites < 2) throw InvalidInput("chain needs n_sites >= 2");
  hilbert_dim(n_sites);
  const auto bonds = static_cast<std::size_t>(n_sites - 1);
  const auto sites = static_cast<std::size_t>(n_sites);
  if (kind == ModelKind::XXZ) {
    if (alpha.size() != 1) {
      throw InvalidInput("XXZ model takes a single alpha, got " +
                         std::to_string(alpha.size()));
    }
    if (delta.size() != bonds) {
      throw InvalidInput("XXZ delta has " + std::to_string(delta.size()) +
                         " entries, expected " + std::to_string(bonds));
    }
  } else {
    if (alpha.size() != bonds) {
      throw InvalidInput("XXX alpha has " + std::to_string(alpha.size()) +
                         " entries, expected " + std::to_string(bonds));
    }
    if (!delta.empty()) throw InvalidInput("XXX model takes no delta");
  }
  if (!field.empty() && field.size() != sites) {
    throw InvalidInput("field has " + std::to_string(field.size()) +
                       " entries, expected " + std::to_string(sites));
  }
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(alpha.begin(), alpha.end(), finite) ||
      !std::all_of(delta.begin(), delta.end(), finite) ||
      !std::all_of(field.begin(), field.end(), finite)) {
    throw InvalidInput("model parameters must be finite");
  }
}

double ChainModel::coupling(int bond) const {
  if (bond < 1 || bond > n_bonds()) {
    throw InvalidInput("bond " + std::to_string(bond) + " outside [1, " +
                       std::to_string(n_bonds()) + "]");
  }
  return kind == ModelKind::XXZ ? alpha.at(0) : alpha.at(bond - 1);
}

double ChainModel::anisotropy(int bond) const {
  if (kind == ModelKind::XXX) return coupling(bond);
  coupling(bond);
  return delta.at(bond - 1);
}

double ChainModel::field_at(int site) const {
  if (site < 1 || site > n_sites) {
    throw InvalidInput("site " + std::to_string(site) + " outside chain");
  }
  return field.empty() ? 0.0 : field[site - 1];
}

bool ChainModel::has_field() const {
  return std::any_of(field.begin(), field.end(),
                     [](double b) { return b != 0.0; });
}

ChainModel make_xxz(double alpha, std::vector<double> delta,
                    std::vector<double> field) {
  ChainModel m;
  m.kind = ModelKind::XXZ;
  m.n_sites = static_cast<int>(delta.size()) + 1;
  m.alpha = {alpha};
  m.delta = std::move(delta);
  m.field = std::move(field);
  m.validate();
  return m;
}

ChainModel make_xxx(std::vector<double> alpha, std::vector<double> field) {
  ChainModel m;
  m.kind = ModelKind::XXX;
  m.n_sites = static_cast<int>(alpha.size()) + 1;
  m.alpha = std::move(alpha);
  m.field = std::move(field);
  m.validate();
  return m;
}

ChainModel without_field(ChainModel model) {
  model.field.clear();
  return model;
}

ChainModel mirrored(const ChainModel& model) {
  model.validate();
  ChainModel m = model;
  if (m.kind == ModelKind::XXX) std::reverse(m.alpha.begin(), m.alpha.end());
  std::reverse(m.delta.begin(), m.delta.end());
  std::reverse(m.field.begin(), m.field.end());
  return m;
}

std::vector<double> graded_profile(double base, double spread, int n_bonds) {
  if (n_bonds < 1) throw InvalidInput("graded_profile needs n_bonds >= 1");
  if (n_bonds == 1) return {base};
  std::vector<double> out(static_cast<std::size_t>(n_bonds));
  for (int i = 0; i < n_bonds; ++i) {
    out[i] = base + spread * (2.0 * i / (n_bonds - 1) - 1.0);
  }
  return out;
}

Operator build_hamiltonian(const ChainModel& model) {
  model.validate();
  const int n = model.n_sites;
  const auto x = pauli(PauliLabel::X);
  const auto y = pauli(PauliLabel::Y);
  const auto z = pauli(PauliLabel::Z);
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
  Operator h = Operator::Zero(dim, dim);
  for (int i = 1; i < n; ++i) {
    const SiteOperator xx[] = {{x, i}, {x, i + 1}};
    const SiteOperator yy[] = {{y, i}, {y, i + 1}};
    const SiteOperator zz[] = {{z, i}, {z, i + 1}};
    h += model.coupling(i) * (product_chain(xx, n) + product_chain(yy, n));
    h += model.anisotropy(i) * product_chain(zz, n);
  }
  for (int j = 1; j <= n; ++j) {
    const double b = model.field_at(j);
    if (b != 0.0) h += b * embed(z, j, n);
  }
  return h;
}

Operator site_reversal(int n_sites) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  Operator p = Operator::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    Eigen::Index rev = 0;
    for (int b = 0; b < n_sites; ++b) {
      if (r & (Eigen::Index{1} << b)) rev |= Eigen::Index{1} << (n_sites - 1 - b);
    }
    p(rev, r) = 1.0;
  }
  return p;
}

}  // namespace spinchain
