#pragma once

#include <vector>

#include "spinchain/pauli.hpp"

namespace spinchain {

enum class ModelKind { XXZ, XXX };

/// Spin-1/2 chain with nearest-neighbour couplings and an optional z field.
///
/// XXZ: `alpha` holds one value (uniform XY coupling), `delta` one value per
/// bond. XXX: `alpha` holds one value per bond, `delta` is empty. `field`
/// is per site; an empty vector means zero field. Bonds and sites are
/// 1-based in the accessors.
struct ChainModel {
  ModelKind kind = ModelKind::XXZ;
  int n_sites = 2;
  std::vector<double> alpha;
  std::vector<double> delta;
  std::vector<double> field;

  /// Throws InvalidInput on size mismatches or N < 2.
  void validate() const;

  int n_bonds() const { return n_sites - 1; }
  /// XY coupling on bond i (between sites i and i+1).
  double coupling(int bond) const;
  /// zz coupling on bond i; equals coupling(bond) for XXX.
  double anisotropy(int bond) const;
  double field_at(int site) const;
  bool has_field() const;
};

ChainModel make_xxz(double alpha, std::vector<double> delta,
                    std::vector<double> field = {});
ChainModel make_xxx(std::vector<double> alpha, std::vector<double> field = {});

/// Same model with the field removed.
ChainModel without_field(ChainModel model);

/// Site-reversed model: bond i <-> bond N-i, site j <-> site N+1-j.
ChainModel mirrored(const ChainModel& model);

/// Linear ramp centred on `base`: base + spread * (2(i-1)/(n_bonds-1) - 1).
std::vector<double> graded_profile(double base, double spread, int n_bonds);

Operator build_hamiltonian(const ChainModel& model);

/// Permutation operator reversing the order of the sites.
Operator site_reversal(int n_sites);

}  // namespace spinchain
