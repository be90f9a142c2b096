#include "spinchain/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinchain/error.hpp"
#include "spinchain/liouvillian.hpp"
#include "spinchain/observables.hpp"
#include "spinchain/pauli_basis.hpp"

namespace spinchain {

namespace {
constexpr cplx I(0.0, 1.0);

bool takes_twist(UnitaryFamily f) { return f == UnitaryFamily::U1 || f == UnitaryFamily::U3; }

bool same_angle(double a, double b) {
  const double d = std::remainder(a - b, 2.0 * std::numbers::pi);
  return std::abs(d) < 1e-12;
}
}  // namespace

std::string_view to_string(UnitaryFamily family) {
  switch (family) {
    case UnitaryFamily::U1: return "u1";
    case UnitaryFamily::U2: return "u2";
    case UnitaryFamily::U3: return "u3";
    case UnitaryFamily::U4: return "u4";
  }
  return "unknown";
}

LocalUnitary make_unitary(UnitaryFamily family, std::optional<double> theta) {
  if (takes_twist(family) != theta.has_value()) {
    throw InvalidInput(std::string(to_string(family)) +
                       (theta ? " takes no twist angle" : " requires a twist angle"));
  }
  if (theta && !std::isfinite(*theta)) throw InvalidInput("twist angle must be finite");
  const double r = 1.0 / std::sqrt(2.0);
  LocalOperator m;
  switch (family) {
    case UnitaryFamily::U1:
      m << 0.0, 1.0 + I, -std::exp(I * *theta) * (1.0 - I), 0.0;
      m *= r;
      break;
    case UnitaryFamily::U2:
      m << 0.0, -1.0 + I, 1.0 + I, 0.0;
      m *= r;
      break;
    case UnitaryFamily::U3: {
      // sqrt((1 - cos t)/2) = |sin(t/2)|, sqrt((1 + cos t)/2) = |cos(t/2)|;
      // the signed half-angle form is the one valid for every t.
      const double s = std::sin(*theta / 2);
      const double c = std::cos(*theta / 2);
      m << s, c, c, -s;
      m *= I;
      break;
    }
    case UnitaryFamily::U4:
      m << I, -1.0, 1.0, -I;
      m *= r;
      break;
  }
  return {m, family, theta};
}

LocalOperator sqrt_form_u3(double theta) {
  const double a = std::sqrt(1.0 - std::cos(theta));
  const double b = std::sqrt(1.0 + std::cos(theta));
  LocalOperator m;
  m << a, b, b, -a;
  return I / std::sqrt(2.0) * m;
}

DriveFamily matched_drive(UnitaryFamily family) {
  switch (family) {
    case UnitaryFamily::U1: return DriveFamily::TwistedXY;
    case UnitaryFamily::U2: return DriveFamily::SixOpXXZ;
    case UnitaryFamily::U3: return DriveFamily::TwistedZX;
    case UnitaryFamily::U4: return DriveFamily::SixOpXXX;
  }
  throw InvalidInput("unknown unitary family");
}

ModelKind matched_model(UnitaryFamily family) {
  return (family == UnitaryFamily::U1 || family == UnitaryFamily::U2) ? ModelKind::XXZ
                                                                      : ModelKind::XXX;
}

std::array<LocalOperator, 3> conjugation_table(UnitaryFamily family,
                                                       std::optional<double> theta) {
  if (takes_twist(family) != theta.has_value()) {
    throw InvalidInput("twist angle must be given exactly for u1 and u3");
  }
  const auto x = pauli(PauliLabel::X);
  const auto y = pauli(PauliLabel::Y);
  const auto z = pauli(PauliLabel::Z);
  switch (family) {
    case UnitaryFamily::U1: {
      const double s = std::sin(*theta);
      const double c = std::cos(*theta);
      LocalOperator ux, uy;
      ux << 0.0, -s - I * c, -s + I * c, 0.0;
      uy << 0.0, c - I * s, c + I * s, 0.0;
      return {ux, uy, LocalOperator(-z)};
    }
    case UnitaryFamily::U2:
      return {LocalOperator(-y), LocalOperator(-x), LocalOperator(-z)};
    case UnitaryFamily::U3: {
      const double s = std::sin(*theta);
      const double c = std::cos(*theta);
      LocalOperator ux, uz;
      ux << s, c, c, -s;
      uz << -c, s, s, c;
      return {ux, LocalOperator(-y), uz};
    }
    case UnitaryFamily::U4:
      return {LocalOperator(-x), LocalOperator(-z), LocalOperator(-y)};
  }
  throw InvalidInput("unknown unitary family");
}

double conjugation_table_deviation(const LocalUnitary& u) {
  const auto expected = conjugation_table(u.family, u.twist);
  const std::array<LocalOperator, 3> sig = {pauli(PauliLabel::X), pauli(PauliLabel::Y),
                                            pauli(PauliLabel::Z)};
  double dev = 0.0;
  for (int k = 0; k < 3; ++k) {
    const LocalOperator image = u.matrix * sig[k] * u.matrix.adjoint();
    dev = std::max(dev, (image - expected[k]).cwiseAbs().maxCoeff());
  }
  return dev;
}

Operator global_unitary(const LocalUnitary& u, int n_sites) {
  hilbert_dim(n_sites);
  Operator out = u.matrix;
  for (int s = 2; s <= n_sites; ++s) out = kron(out, Operator(u.matrix));
  return out;
}

double verify_hamiltonian_invariance(const Operator& u, const Operator& h) {
  if (u.rows() != h.rows() || u.cols() != h.cols()) {
    throw InvalidInput("unitary and Hamiltonian dimensions differ");
  }
  const double scale = h.norm();
  const double dev = (u * h * u.adjoint() - h).norm();
  return scale > 0 ? dev / scale : dev;
}

double verify_dissipator_swap(const LocalUnitary& u, const DriveSpec& spec, int n_sites) {
  if (matched_drive(u.family) != spec.family) {
    throw InvalidInput(std::string(to_string(u.family)) + " does not invert " +
                       std::string(to_string(spec.family)) + " baths");
  }
  if (u.twist && !same_angle(*u.twist, spec.twisted().theta)) {
    throw InvalidInput("unitary twist angle differs from the drive's theta");
  }
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  const Operator zero = Operator::Zero(dim, dim);
  const auto forward = build_jump_operators(spec, n_sites);
  const auto inverted = build_jump_operators(invert_baths(spec), n_sites);
  const Eigen::MatrixXd d = pauli_basis::generator(zero, forward);
  const Eigen::MatrixXd d_inv = pauli_basis::generator(zero, inverted);
  const Eigen::MatrixXd conj =
      pauli_basis::conjugate(d, pauli_basis::unitary_transfer(u.matrix), n_sites);
  const double scale = d.norm();
  const double dev = (d_inv - conj).norm();
  return scale > 0 ? dev / scale : dev;
}

double verify_current_invariance(const Operator& u, const ChainModel& model) {
  model.validate();
  if (model.n_sites < 3) throw InvalidInput("energy currents need n_sites >= 3");
  double worst = 0.0;
  for (int j = 2; j < model.n_sites; ++j) {
    const Operator f = energy_current_operator(model, j, FieldTerm::Exclude);
    if (u.rows() != f.rows()) throw InvalidInput("unitary and model dimensions differ");
    const double scale = f.norm();
    const double dev = (u * f * u.adjoint() - f).norm();
    worst = std::max(worst, scale > 0 ? dev / scale : dev);
  }
  return worst;
}

double mapped_state_residual(const LocalUnitary& u, const ChainModel& model,
                             const DriveSpec& spec, const DensityMatrix& rho) {
  const Operator big_u = global_unitary(u, model.n_sites);
  const Operator mapped = big_u * rho.matrix() * big_u.adjoint();
  const auto inverted = build_jump_operators(invert_baths(spec), model.n_sites);
  return apply_generator(build_hamiltonian(model), inverted, mapped).norm();
}

}  // namespace spinchain
