#pragma once

// Single-site Pauli and ladder operators and their embedding into the
// 2^N-dimensional chain space.
//
// Basis: sigma^z eigenbasis with |up> first. Site 1 is the leftmost tensor
// factor, i.e. the most significant bit of a basis index.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace spinchain {

using cplx = std::complex<double>;
using LocalOperator = Eigen::Matrix2cd;
/// Dense 2^N x 2^N operator (Hamiltonians, states, observables).
using Operator = Eigen::MatrixXcd;

inline constexpr int kMaxDenseSites = 12;

enum class PauliLabel { X, Y, Z, Plus, Minus, Identity };

LocalOperator pauli(PauliLabel label);
/// Accepts "x", "y", "z", "plus", "minus", "identity"; anything else throws InvalidInput.
LocalOperator pauli(std::string_view label);

/// 2^n_sites; throws InvalidInput for n_sites < 1 or above kMaxDenseSites.
std::size_t hilbert_dim(int n_sites);

/// Inverse of hilbert_dim; throws InvalidInput when dim is not a power of two.
int sites_from_dim(std::size_t dim);

/// I (x) ... (x) op (x) ... (x) I with op in slot `site` (1-based).
Operator embed(const LocalOperator& op, int site, int n_sites);

struct SiteOperator {
  LocalOperator op;
  int site;
};

/// Tensor placement of several single-site operators on distinct sites.
/// Empty list gives the identity. Duplicate sites throw InvalidInput.
Operator product_chain(std::span<const SiteOperator> ops, int n_sites);

Operator kron(const Operator& a, const Operator& b);

}  // namespace spinchain
