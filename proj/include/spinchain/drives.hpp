#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "spinchain/pauli.hpp"

namespace spinchain {

/// One Lindblad channel: a 2x2 matrix (rate absorbed) acting on one site.
struct JumpOperator {
  int site;
  LocalOperator matrix;
};

enum class DriveFamily { ZTarget, TwistedXY, SixOpXXZ, TwistedZX, SixOpXXX };

std::string_view to_string(DriveFamily family);
/// "z_target", "twisted_xy", "six_op_xxz", "twisted_zx", "six_op_xxx".
DriveFamily drive_family_from_string(std::string_view name);

/// sigma^z targets with independent driving at each edge.
struct ZTargetParams {
  double gamma = 1.0;
  double f_left = 0.0;
  double f_right = 0.0;
  bool operator==(const ZTargetParams&) const = default;
};

/// One edge with a fixed-axis target, the other twisted by theta.
/// `inverted` puts the twisted pair on site 1 and the fixed pair on site N.
struct TwistedParams {
  double gamma = 1.0;
  double f = 0.0;
  double theta = 0.0;
  bool inverted = false;
  bool operator==(const TwistedParams&) const = default;
};

/// Drive amplitudes of the twelve-operator families (not Hamiltonian couplings).
struct SixOpAmplitudes {
  double alpha = 0.0;
  double beta = 0.0;
  double p = 0.0;
  double q = 0.0;
  double u = 0.0;
  double v = 0.0;
  bool operator==(const SixOpAmplitudes&) const = default;
};

struct DriveSpec {
  DriveFamily family = DriveFamily::ZTarget;
  std::variant<ZTargetParams, TwistedParams, SixOpAmplitudes> params;

  /// Throws InvalidInput on out-of-range or mismatched parameters.
  void validate() const;

  const ZTargetParams& z_target() const;
  const TwistedParams& twisted() const;
  const SixOpAmplitudes& six_op() const;

  bool operator==(const DriveSpec&) const = default;
};

DriveSpec z_target_drive(double gamma, double f_left, double f_right);
DriveSpec twisted_xy_drive(double gamma, double f, double theta);
DriveSpec twisted_zx_drive(double gamma, double f, double theta);
DriveSpec six_op_xxz_drive(const SixOpAmplitudes& a);
DriveSpec six_op_xxx_drive(const SixOpAmplitudes& a);

std::vector<JumpOperator> build_jump_operators(const DriveSpec& spec, int n_sites);

/// Physically swaps the two baths: the content attached to site 1 moves to
/// site N and vice versa. An involution.
DriveSpec invert_baths(const DriveSpec& spec);

/// Operator list with every site label exchanged 1 <-> N.
std::vector<JumpOperator> swap_boundary_sites(std::vector<JumpOperator> jumps,
                                              int n_sites);


}  // namespace spinchain
