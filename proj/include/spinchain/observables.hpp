#pragma once

#include <vector>

#include "spinchain/chain_model.hpp"
#include "spinchain/density_matrix.hpp"

namespace spinchain {

enum class FieldTerm { Include, Exclude };

/// J_j = 2 a_j (x_j y_{j+1} - y_j x_{j+1}) on bond j in [1, N-1].
Operator spin_current_operator(const ChainModel& model, int bond);

/// Energy current through interior site j in [2, N-1]. For XXZ the field
/// contribution B_j (J_{j-1} + J_j) / 2 is added unless excluded. For XXX the
/// prefactor is 2 a_{j-1} a_j and there is no field contribution.
Operator energy_current_operator(const ChainModel& model, int site,
                                 FieldTerm field = FieldTerm::Include);

struct CurrentReport {
  std::vector<double> spin_currents;    // bonds 1..N-1
  std::vector<double> energy_currents;  // sites 2..N-1
  double mean_spin_current = 0.0;
  double mean_energy_current = 0.0;
  /// max - min over bonds / interior sites
  double max_site_deviation_spin = 0.0;
  double max_site_deviation_energy = 0.0;
};

/// Evaluates all current operators. Throws ConsistencyError if an
/// expectation has imaginary part above 1e-8.
CurrentReport measure(const DensityMatrix& state, const ChainModel& model,
                      FieldTerm field = FieldTerm::Include);

}  // namespace spinchain
