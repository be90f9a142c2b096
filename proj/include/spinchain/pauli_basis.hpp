#pragma once

// Pauli-string representation of operators and of the Lindblad generator.
//
// A Pauli string on N sites is indexed by its base-4 digits, site 1 most
// significant, with digit codes I=0, X=1, Y=2, Z=3. In the orthonormal
// basis { P / sqrt(2^N) } every Hermiticity-preserving superoperator is a
// real matrix, unitarily similar to its column-stacked complex form.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "spinchain/drives.hpp"
#include "spinchain/pauli.hpp"

namespace spinchain::pauli_basis {

using StringIndex = std::uint32_t;

/// 4^N; throws CapacityError above kMaxGeneratorSites.
std::size_t basis_size(int n_sites);
inline constexpr int kMaxGeneratorSites = 8;

int digit(StringIndex s, int site, int n_sites);
StringIndex with_digit(StringIndex s, int site, int n_sites, int value);

struct Product {
  StringIndex string;
  cplx phase;
};

/// a * b = phase * string
Product multiply(StringIndex a, StringIndex b, int n_sites);

/// Dense 2^N matrix of a Pauli string.
Operator string_operator(StringIndex s, int n_sites);

struct Term {
  StringIndex string;
  double coefficient;
};

/// H = sum_k coefficient_k P_k. Drops the identity component and
/// coefficients below `cutoff`. Throws InvalidInput if H is not Hermitian.
std::vector<Term> decompose_hermitian(const Operator& h, double cutoff = 1e-15);

/// Real 4x4 matrix of X -> sum_k (L X L^dag - {L^dag L, X}/2) in the
/// single-site Pauli basis, for the given channels (all on one site).
Eigen::Matrix4d local_dissipator_transfer(std::span<const LocalOperator> channels);

/// Real 4x4 matrix of X -> u X u^dag in the single-site Pauli basis.
Eigen::Matrix4d unitary_transfer(const LocalOperator& u);

/// G[Q, P] = tr(Q L(P)) / 2^N for the generator L of (H, jumps).
/// Row 0 (identity component) is structurally zero.
Eigen::SparseMatrix<double> generator(const Operator& h,
                                      std::span<const JumpOperator> jumps);

/// rho = 2^-N sum_P r_P P
Operator state_from_coefficients(const Eigen::VectorXd& r, int n_sites);
/// r_P = Re tr(P rho)
Eigen::VectorXd coefficients_from_state(const Operator& rho);

/// (O x ... x O) G (O x ... x O)^T for a per-site 4x4 transfer matrix O.
Eigen::MatrixXd conjugate(const Eigen::MatrixXd& g, const Eigen::Matrix4d& site_transfer,
                          int n_sites);

}  // namespace spinchain::pauli_basis
