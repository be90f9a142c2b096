#include "spinchain/drives.hpp"

#include <array>
#include <cmath>
#include <string>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {
constexpr cplx I(0.0, 1.0);

void check_f(double f, const char* name) {
  if (!std::isfinite(f) || f < -1.0 || f > 1.0) {
    throw InvalidInput(std::string(name) + " = " + std::to_string(f) +
                       " outside f in [-1, 1]");
  }
}

void check_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma <= 0.0) {
    throw InvalidInput("gamma must be positive, got " + std::to_string(gamma));
  }
}

bool is_twisted(DriveFamily f) {
  return f == DriveFamily::TwistedXY || f == DriveFamily::TwistedZX;
}
bool is_six_op(DriveFamily f) {
  return f == DriveFamily::SixOpXXZ || f == DriveFamily::SixOpXXX;
}

// (A + i s B) with A, B Pauli matrices and s = +-1.
LocalOperator polarizer(const LocalOperator& a, const LocalOperator& b, double sign) {
  return a + sign * I * b;
}

// Amplitudes of the site-N list, in the order
// (x+iy, x-iy, y+iz, y-iz, z+ix, z-ix).
std::array<double, 6> right_amplitudes(DriveFamily family, const SixOpAmplitudes& a) {
  if (family == DriveFamily::SixOpXXZ) return {a.beta, a.alpha, a.v, a.u, a.q, a.p};
  return {a.v, a.u, a.q, a.p, a.beta, a.alpha};
}

}  // namespace

std::string_view to_string(DriveFamily family) {
  switch (family) {
    case DriveFamily::ZTarget: return "z_target";
    case DriveFamily::TwistedXY: return "twisted_xy";
    case DriveFamily::SixOpXXZ: return "six_op_xxz";
    case DriveFamily::TwistedZX: return "twisted_zx";
    case DriveFamily::SixOpXXX: return "six_op_xxx";
  }
  return "unknown";
}

DriveFamily drive_family_from_string(std::string_view name) {
  for (auto f : {DriveFamily::ZTarget, DriveFamily::TwistedXY, DriveFamily::SixOpXXZ,
                 DriveFamily::TwistedZX, DriveFamily::SixOpXXX}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidInput("unknown drive family '" + std::string(name) + "'");
}

void DriveSpec::validate() const {
  if (family == DriveFamily::ZTarget) {
    const auto& p = z_target();
    check_gamma(p.gamma);
    check_f(p.f_left, "f_left");
    check_f(p.f_right, "f_right");
  } else if (is_twisted(family)) {
    const auto& p = twisted();
    check_gamma(p.gamma);
    check_f(p.f, "f");
    if (!std::isfinite(p.theta)) throw InvalidInput("theta must be finite");
  } else {
    const auto& a = six_op();
    for (double x : {a.alpha, a.beta, a.p, a.q, a.u, a.v}) {
      if (!std::isfinite(x) || x < 0.0) {
        throw InvalidInput("drive amplitudes must be nonnegative, got " +
                           std::to_string(x));
      }
    }
  }
}

const ZTargetParams& DriveSpec::z_target() const {
  if (family != DriveFamily::ZTarget || !std::holds_alternative<ZTargetParams>(params)) {
    throw InvalidInput("drive is not z_target");
  }
  return std::get<ZTargetParams>(params);
}

const TwistedParams& DriveSpec::twisted() const {
  if (!is_twisted(family) || !std::holds_alternative<TwistedParams>(params)) {
    throw InvalidInput("drive is not a twisted family");
  }
  return std::get<TwistedParams>(params);
}

const SixOpAmplitudes& DriveSpec::six_op() const {
  if (!is_six_op(family) || !std::holds_alternative<SixOpAmplitudes>(params)) {
    throw InvalidInput("drive is not a six-operator family");
  }
  return std::get<SixOpAmplitudes>(params);
}

DriveSpec z_target_drive(double gamma, double f_left, double f_right) {
  DriveSpec s{DriveFamily::ZTarget, ZTargetParams{gamma, f_left, f_right}};
  s.validate();
  return s;
}

DriveSpec twisted_xy_drive(double gamma, double f, double theta) {
  DriveSpec s{DriveFamily::TwistedXY, TwistedParams{gamma, f, theta, false}};
  s.validate();
  return s;
}

DriveSpec twisted_zx_drive(double gamma, double f, double theta) {
  DriveSpec s{DriveFamily::TwistedZX, TwistedParams{gamma, f, theta, false}};
  s.validate();
  return s;
}

DriveSpec six_op_xxz_drive(const SixOpAmplitudes& a) {
  DriveSpec s{DriveFamily::SixOpXXZ, a};
  s.validate();
  return s;
}

DriveSpec six_op_xxx_drive(const SixOpAmplitudes& a) {
  DriveSpec s{DriveFamily::SixOpXXX, a};
  s.validate();
  return s;
}

std::vector<JumpOperator> build_jump_operators(const DriveSpec& spec, int n_sites) {
  if (n_sites < 2) throw InvalidInput("boundary drive needs n_sites >= 2");
  spec.validate();
  const auto x = pauli(PauliLabel::X);
  const auto y = pauli(PauliLabel::Y);
  const auto z = pauli(PauliLabel::Z);
  const int last = n_sites;
  std::vector<JumpOperator> out;

  switch (spec.family) {
    case DriveFamily::ZTarget: {
      const auto& p = spec.z_target();
      const auto up = pauli(PauliLabel::Plus);
      const auto down = pauli(PauliLabel::Minus);
      out.push_back({1, std::sqrt(p.gamma / 2 * (1 + p.f_left)) * up});
      out.push_back({1, std::sqrt(p.gamma / 2 * (1 - p.f_left)) * down});
      out.push_back({last, std::sqrt(p.gamma / 2 * (1 + p.f_right)) * up});
      out.push_back({last, std::sqrt(p.gamma / 2 * (1 - p.f_right)) * down});
      break;
    }
    case DriveFamily::TwistedXY:
    case DriveFamily::TwistedZX: {
      const auto& p = spec.twisted();
      const bool xy = spec.family == DriveFamily::TwistedXY;
      const int fixed_site = p.inverted ? last : 1;
      const int twisted_site = p.inverted ? 1 : last;
      // fixed edge: (y +- iz)/2 for XY, (x +- iy)/2 for ZX
      const LocalOperator& fa = xy ? y : x;
      const LocalOperator& fb = xy ? z : y;
      // twisted edge: (cos th x + sin th {y|z} +- i {z|y})/2
      const LocalOperator axis = std::cos(p.theta) * x + std::sin(p.theta) * (xy ? y : z);
      const LocalOperator& tb = xy ? z : y;
      const double up = std::sqrt(p.gamma * (1 + p.f));
      const double dn = std::sqrt(p.gamma * (1 - p.f));
      out.push_back({fixed_site, up * polarizer(fa, fb, +1) / 2.0});
      out.push_back({fixed_site, dn * polarizer(fa, fb, -1) / 2.0});
      out.push_back({twisted_site, dn * polarizer(axis, tb, +1) / 2.0});
      out.push_back({twisted_site, up * polarizer(axis, tb, -1) / 2.0});
      break;
    }
    case DriveFamily::SixOpXXZ:
    case DriveFamily::SixOpXXX: {
      const auto& a = spec.six_op();
      const std::array<LocalOperator, 6> forms = {
          polarizer(x, y, +1), polarizer(x, y, -1), polarizer(y, z, +1),
          polarizer(y, z, -1), polarizer(z, x, +1), polarizer(z, x, -1)};
      const std::array<double, 6> left = {a.alpha, a.beta, a.p, a.q, a.u, a.v};
      const auto right = right_amplitudes(spec.family, a);
      for (std::size_t k = 0; k < 6; ++k) out.push_back({1, left[k] * forms[k]});
      for (std::size_t k = 0; k < 6; ++k) out.push_back({last, right[k] * forms[k]});
      break;
    }
  }
  return out;
}

DriveSpec invert_baths(const DriveSpec& spec) {
  spec.validate();
  DriveSpec out = spec;
  switch (spec.family) {
    case DriveFamily::ZTarget: {
      auto p = spec.z_target();
      std::swap(p.f_left, p.f_right);
      out.params = p;
      break;
    }
    case DriveFamily::TwistedXY:
    case DriveFamily::TwistedZX: {
      auto p = spec.twisted();
      p.inverted = !p.inverted;
      out.params = p;
      break;
    }
    case DriveFamily::SixOpXXZ:
    case DriveFamily::SixOpXXX: {
      // New site-1 amplitudes are the old site-N amplitudes; the family's
      // pairing table then places the old site-1 content at site N.
      const auto r = right_amplitudes(spec.family, spec.six_op());
      out.params = SixOpAmplitudes{r[0], r[1], r[2], r[3], r[4], r[5]};
      break;
    }
  }
  return out;
}

std::vector<JumpOperator> swap_boundary_sites(std::vector<JumpOperator> jumps,
                                              int n_sites) {
  for (auto& j : jumps) {
    if (j.site == 1) {
      j.site = n_sites;
    } else if (j.site == n_sites) {
      j.site = 1;
    }
  }
  return jumps;
}

}  // namespace spinchain
