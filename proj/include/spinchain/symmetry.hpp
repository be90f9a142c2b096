#pragma once

// Local unitaries u with U = u (x) ... (x) u mapping each drive family onto
// its bath-inverted counterpart while leaving the field-free Hamiltonian and
// energy-current operators invariant.

#include <array>
#include <optional>
#include <string_view>

#include "spinchain/chain_model.hpp"
#include "spinchain/density_matrix.hpp"
#include "spinchain/drives.hpp"

namespace spinchain {

enum class UnitaryFamily { U1, U2, U3, U4 };

std::string_view to_string(UnitaryFamily family);

struct LocalUnitary {
  LocalOperator matrix;
  UnitaryFamily family;
  std::optional<double> twist;
};

/// u1(theta) pairs with TwistedXY, u2 with SixOpXXZ, u3(theta) with
/// TwistedZX, u4 with SixOpXXX. theta is required for u1/u3 and rejected
/// otherwise.
LocalUnitary make_unitary(UnitaryFamily family, std::optional<double> theta = {});

/// u3 in the square-root form with sqrt(1 -+ cos theta) entries. Agrees with
/// make_unitary(U3, theta) for theta in [0, pi] only.
LocalOperator sqrt_form_u3(double theta);

DriveFamily matched_drive(UnitaryFamily family);
/// Hamiltonian kind the pair is stated for.
ModelKind matched_model(UnitaryFamily family);

/// Closed-form images u sigma^{x,y,z} u^dag for the family.
std::array<LocalOperator, 3> conjugation_table(UnitaryFamily family,
                                                       std::optional<double> theta = {});

/// Max entrywise deviation of u sigma u^dag from the closed-form table.
double conjugation_table_deviation(const LocalUnitary& u);

Operator global_unitary(const LocalUnitary& u, int n_sites);

/// ||U H U^dag - H||_F / ||H||_F
double verify_hamiltonian_invariance(const Operator& u, const Operator& h);

/// ||D' - U D U^dag||_F / ||D||_F at superoperator level, where D is the
/// dissipator of `spec`, D' that of invert_baths(spec), and U D U^dag the map
/// rho -> U D(U^dag rho U) U^dag. Throws InvalidInput for unmatched pairs.
double verify_dissipator_swap(const LocalUnitary& u, const DriveSpec& spec, int n_sites);

/// max_j ||U F_j U^dag - F_j||_F / ||F_j||_F over interior sites, field-free F.
double verify_current_invariance(const Operator& u, const ChainModel& model);

/// ||L_inv(U rho U^dag)||_F with L_inv the generator of the model under the
/// inverted drive. Zero when U maps the steady state onto the inverted one.
double mapped_state_residual(const LocalUnitary& u, const ChainModel& model,
                             const DriveSpec& spec, const DensityMatrix& rho);

}  // namespace spinchain
