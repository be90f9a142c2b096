#pragma once

#include "spinchain/pauli.hpp"

namespace spinchain {

struct StateDiagnostics {
  double hermiticity_error;  // max |rho - rho^dagger| entrywise
  double trace_error;        // |tr rho - 1|
  double min_eigenvalue;
};

struct StateTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double positivity = 1e-10;
};

/// Density matrix of an N-site chain. Construction only checks the shape;
/// physical invariants are checked by diagnostics()/satisfies().
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator rho);

  static DensityMatrix maximally_mixed(int n_sites);

  const Operator& matrix() const { return rho_; }
  int n_sites() const { return n_sites_; }
  Eigen::Index dim() const { return rho_.rows(); }

  StateDiagnostics diagnostics() const;
  bool satisfies(const StateTolerances& tol = {}) const;

 private:
  Operator rho_;
  int n_sites_;
};

/// (rho + rho^dagger) / 2
Operator hermitian_part(const Operator& m);

/// 0.5 * || a - b ||_1 for Hermitian a, b.
double trace_distance(const Operator& a, const Operator& b);

/// tr(rho * op) without forming the product.
cplx expectation(const Operator& rho, const Operator& op);

}  // namespace spinchain
