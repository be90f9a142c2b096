#include "spinchain/pauli_basis.hpp"

#include <array>
#include <cmath>
#include <string>

#include "spinchain/error.hpp"

namespace spinchain::pauli_basis {

namespace {
constexpr cplx I(0.0, 1.0);

// sigma_a sigma_b = kPhase[a][b] sigma_{a ^ b}
constexpr std::array<std::array<cplx, 4>, 4> kPhase = {{
    {cplx(1), cplx(1), cplx(1), cplx(1)},
    {cplx(1), cplx(1), I, -I},
    {cplx(1), -I, cplx(1), I},
    {cplx(1), I, -I, cplx(1)},
}};

const std::array<LocalOperator, 4>& single_site_paulis() {
  static const std::array<LocalOperator, 4> p = {
      pauli(PauliLabel::Identity), pauli(PauliLabel::X), pauli(PauliLabel::Y),
      pauli(PauliLabel::Z)};
  return p;
}

// Row r of a Pauli string has its single nonzero in column r ^ flip_mask.
Eigen::Index flip_mask(StringIndex s, int n_sites) {
  Eigen::Index mask = 0;
  for (int site = 1; site <= n_sites; ++site) {
    const int d = digit(s, site, n_sites);
    if (d == 1 || d == 2) mask |= Eigen::Index{1} << (n_sites - site);
  }
  return mask;
}

cplx row_value(StringIndex s, Eigen::Index row, int n_sites) {
  cplx v(1.0);
  for (int site = 1; site <= n_sites; ++site) {
    const int d = digit(s, site, n_sites);
    const bool down = (row >> (n_sites - site)) & 1;
    if (d == 2) {
      v *= down ? I : -I;
    } else if (d == 3 && down) {
      v = -v;
    }
  }
  return v;
}

}  // namespace

std::size_t basis_size(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxGeneratorSites) {
    throw CapacityError("Pauli-basis generator supports 1..." +
                        std::to_string(kMaxGeneratorSites) + " sites, got " +
                        std::to_string(n_sites));
  }
  return std::size_t{1} << (2 * n_sites);
}

int digit(StringIndex s, int site, int n_sites) {
  return static_cast<int>((s >> (2 * (n_sites - site))) & 3u);
}

StringIndex with_digit(StringIndex s, int site, int n_sites, int value) {
  const int shift = 2 * (n_sites - site);
  return (s & ~(StringIndex{3} << shift)) | (static_cast<StringIndex>(value) << shift);
}

Product multiply(StringIndex a, StringIndex b, int n_sites) {
  cplx phase(1.0);
  for (int site = 1; site <= n_sites; ++site) {
    phase *= kPhase[digit(a, site, n_sites)][digit(b, site, n_sites)];
  }
  return {a ^ b, phase};
}

Operator string_operator(StringIndex s, int n_sites) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  const Eigen::Index mask = flip_mask(s, n_sites);
  Operator out = Operator::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) out(r, r ^ mask) = row_value(s, r, n_sites);
  return out;
}

std::vector<Term> decompose_hermitian(const Operator& h, double cutoff) {
  const int n = sites_from_dim(static_cast<std::size_t>(h.rows()));
  const auto size = basis_size(n);
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidInput("Hamiltonian is not Hermitian");
  }
  const double norm = 1.0 / static_cast<double>(h.rows());
  std::vector<Term> terms;
  for (StringIndex s = 1; s < size; ++s) {
    const Eigen::Index mask = flip_mask(s, n);
    cplx acc(0.0);
    for (Eigen::Index r = 0; r < h.rows(); ++r) acc += row_value(s, r, n) * h(r ^ mask, r);
    acc *= norm;
    if (std::abs(acc.real()) > cutoff) terms.push_back({s, acc.real()});
  }
  return terms;
}

Eigen::Matrix4d local_dissipator_transfer(std::span<const LocalOperator> channels) {
  const auto& sig = single_site_paulis();
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 4; ++a) {
    LocalOperator image = LocalOperator::Zero();
    for (const auto& l : channels) {
      const LocalOperator ldl = l.adjoint() * l;
      image += l * sig[a] * l.adjoint() - 0.5 * (ldl * sig[a] + sig[a] * ldl);
    }
    for (int b = 0; b < 4; ++b) {
      const cplx c = 0.5 * (sig[b] * image).trace();
      if (std::abs(c.imag()) > 1e-12 * std::max(1.0, image.cwiseAbs().maxCoeff())) {
        throw ConsistencyError("dissipator is not Hermiticity preserving");
      }
      out(b, a) = c.real();
    }
  }
  out.row(0).setZero();  // trace preservation
  return out;
}

Eigen::Matrix4d unitary_transfer(const LocalOperator& u) {
  const auto& sig = single_site_paulis();
  Eigen::Matrix4d out;
  for (int a = 0; a < 4; ++a) {
    const LocalOperator image = u * sig[a] * u.adjoint();
    for (int b = 0; b < 4; ++b) out(b, a) = (0.5 * (sig[b] * image).trace()).real();
  }
  return out;
}

Eigen::SparseMatrix<double> generator(const Operator& h,
                                      std::span<const JumpOperator> jumps) {
  const int n = sites_from_dim(static_cast<std::size_t>(h.rows()));
  const auto size = basis_size(n);
  const auto terms = decompose_hermitian(h);

  std::vector<std::vector<LocalOperator>> per_site(static_cast<std::size_t>(n) + 1);
  for (const auto& j : jumps) {
    if (j.site < 1 || j.site > n) {
      throw InvalidInput("jump operator site " + std::to_string(j.site) + " outside chain");
    }
    per_site[j.site].push_back(j.matrix);
  }
  std::vector<std::pair<int, Eigen::Matrix4d>> dissipators;
  for (int s = 1; s <= n; ++s) {
    if (!per_site[s].empty()) dissipators.emplace_back(s, local_dissipator_transfer(per_site[s]));
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(size * (terms.size() / 2 + 4 * dissipators.size() + 1));
  for (StringIndex p = 0; p < size; ++p) {
    // i[P, H] = 2i c P S for anticommuting P, S; zero otherwise.
    for (const auto& t : terms) {
      const auto prod = multiply(p, t.string, n);
      if (prod.phase.imag() != 0.0) {
        const double value = (2.0 * I * t.coefficient * prod.phase).real();
        triplets.emplace_back(static_cast<int>(prod.string), static_cast<int>(p), value);
      }
    }
    for (const auto& [site, d] : dissipators) {
      const int a = digit(p, site, n);
      for (int b = 1; b < 4; ++b) {
        if (d(b, a) != 0.0) {
          triplets.emplace_back(static_cast<int>(with_digit(p, site, n, b)),
                                static_cast<int>(p), d(b, a));
        }
      }
    }
  }
  Eigen::SparseMatrix<double> g(static_cast<Eigen::Index>(size),
                                static_cast<Eigen::Index>(size));
  g.setFromTriplets(triplets.begin(), triplets.end());
  return g;
}

Operator state_from_coefficients(const Eigen::VectorXd& r, int n_sites) {
  const auto size = basis_size(n_sites);
  if (static_cast<std::size_t>(r.size()) != size) {
    throw InvalidInput("coefficient vector has wrong length");
  }
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  Operator rho = Operator::Zero(dim, dim);
  for (StringIndex s = 0; s < size; ++s) {
    if (r[s] == 0.0) continue;
    const Eigen::Index mask = flip_mask(s, n_sites);
    for (Eigen::Index row = 0; row < dim; ++row) {
      rho(row, row ^ mask) += r[s] * row_value(s, row, n_sites);
    }
  }
  return rho / static_cast<double>(dim);
}

Eigen::VectorXd coefficients_from_state(const Operator& rho) {
  const int n = sites_from_dim(static_cast<std::size_t>(rho.rows()));
  const auto size = basis_size(n);
  Eigen::VectorXd r(static_cast<Eigen::Index>(size));
  for (StringIndex s = 0; s < size; ++s) {
    const Eigen::Index mask = flip_mask(s, n);
    cplx acc(0.0);
    for (Eigen::Index row = 0; row < rho.rows(); ++row) {
      acc += row_value(s, row, n) * rho(row ^ mask, row);
    }
    r[s] = acc.real();
  }
  return r;
}

namespace {
// Applies O to the base-4 digit of `site` in the row index of m.
void transform_rows(Eigen::MatrixXd& m, const Eigen::Matrix4d& o, int site, int n_sites) {
  const Eigen::Index stride = Eigen::Index{1} << (2 * (n_sites - site));
  const Eigen::Index rows = m.rows();
  Eigen::MatrixXd block(4, m.cols());
  for (Eigen::Index base = 0; base < rows; base += 4 * stride) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Eigen::Index r0 = base + off;
      for (int a = 0; a < 4; ++a) block.row(a) = m.row(r0 + a * stride);
      for (int b = 0; b < 4; ++b) m.row(r0 + b * stride) = o.row(b) * block;
    }
  }
}
}  // namespace

Eigen::MatrixXd conjugate(const Eigen::MatrixXd& g, const Eigen::Matrix4d& site_transfer,
                          int n_sites) {
  if (static_cast<std::size_t>(g.rows()) != basis_size(n_sites) || g.rows() != g.cols()) {
    throw InvalidInput("conjugate: matrix does not match the Pauli basis size");
  }
  Eigen::MatrixXd out = g;
  for (int s = 1; s <= n_sites; ++s) transform_rows(out, site_transfer, s, n_sites);
  out.transposeInPlace();
  for (int s = 1; s <= n_sites; ++s) transform_rows(out, site_transfer, s, n_sites);
  out.transposeInPlace();
  return out;
}

}  // namespace spinchain::pauli_basis
