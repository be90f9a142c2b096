#include "spinchain/liouvillian.hpp"

#include <string>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {
constexpr cplx I(0.0, 1.0);

Eigen::Index site_bit(int site, int n_sites) {
  if (site < 1 || site > n_sites) {
    throw InvalidInput("site " + std::to_string(site) + " outside [1, " +
                       std::to_string(n_sites) + "]");
  }
  return Eigen::Index{1} << (n_sites - site);
}

void check_square(const Operator& m, Eigen::Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw InvalidInput(std::string(what) + ": dimension mismatch");
  }
}
}  // namespace

void apply_local_left(const kernels::KernelTable& k, const LocalOperator& op, int site,
                      int n_sites, Operator& rho) {
  const Eigen::Index bit = site_bit(site, n_sites);
  const cplx m[4] = {op(0, 0), op(0, 1), op(1, 0), op(1, 1)};
  // Column-major storage: (r, c) and (r | bit, c) sit `bit` apart, and the
  // pattern repeats every column because dim is a multiple of 2 * bit.
  cplx* data = rho.data();
  const auto total = static_cast<std::size_t>(rho.size());
  if (bit == 1) {
    k.mix_adjacent(m, data, total / 2);
    return;
  }
  const auto run = static_cast<std::size_t>(bit);
  for (std::size_t base = 0; base < total; base += 2 * run) {
    k.mix_pair(m, data + base, data + base + run, run);
  }
}

void apply_local_right(const kernels::KernelTable& k, const LocalOperator& op, int site,
                       int n_sites, Operator& rho) {
  const Eigen::Index bit = site_bit(site, n_sites);
  // new col c0 = op00 col c0 + op10 col c1; new col c1 = op01 col c0 + op11 col c1
  const cplx m[4] = {op(0, 0), op(1, 0), op(0, 1), op(1, 1)};
  const Eigen::Index dim = rho.rows();
  for (Eigen::Index c0 = 0; c0 < dim; ++c0) {
    if (c0 & bit) continue;
    k.mix_pair(m, rho.col(c0).data(), rho.col(c0 | bit).data(),
               static_cast<std::size_t>(dim));
  }
}

LindbladRhs::LindbladRhs(const Operator& h, std::span<const JumpOperator> jumps,
                         const kernels::KernelTable& k)
    : n_sites_(sites_from_dim(static_cast<std::size_t>(h.rows()))),
      h_eff_(h),
      jumps_(jumps.begin(), jumps.end()),
      kernels_(&k) {
  check_square(h, h.rows(), "Hamiltonian");
  for (const auto& j : jumps_) {
    site_bit(j.site, n_sites_);
    h_eff_ -= 0.5 * I * embed(j.matrix.adjoint() * j.matrix, j.site, n_sites_);
  }
}

void LindbladRhs::apply(const Operator& rho, Operator& out) const {
  check_square(rho, dim(), "apply_generator");
  // i[rho, H] - {K, rho}/2 = -i (H_eff rho - rho H_eff^dag), K = sum L^dag L
  out.noalias() = -I * (h_eff_ * rho);
  out.noalias() += I * (rho * h_eff_.adjoint());
  const auto n = static_cast<std::size_t>(out.size());
  for (const auto& j : jumps_) {
    scratch_ = rho;
    apply_local_left(*kernels_, j.matrix, j.site, n_sites_, scratch_);
    apply_local_right(*kernels_, j.matrix.adjoint(), j.site, n_sites_, scratch_);
    kernels_->axpy(cplx(1.0), scratch_.data(), out.data(), n);
  }
}

Operator apply_generator(const Operator& h, std::span<const JumpOperator> jumps,
                         const Operator& rho) {
  LindbladRhs rhs(h, jumps);
  Operator out;
  rhs.apply(rho, out);
  return out;
}

Eigen::MatrixXcd build_superoperator(const Operator& h, std::span<const JumpOperator> jumps) {
  const int n = sites_from_dim(static_cast<std::size_t>(h.rows()));
  if (n > kMaxSuperoperatorSites) {
    throw CapacityError("dense superoperator limited to N <= " +
                        std::to_string(kMaxSuperoperatorSites) + " sites, got " +
                        std::to_string(n));
  }
  check_square(h, h.rows(), "Hamiltonian");
  const Eigen::Index dim = h.rows();
  const Operator id = Operator::Identity(dim, dim);
  // vec(A X B) = (B^T kron A) vec(X)
  Eigen::MatrixXcd m = I * (kron(h.transpose(), id) - kron(id, h));
  for (const auto& j : jumps) {
    const Operator l = embed(j.matrix, j.site, n);
    const Operator ldl = l.adjoint() * l;
    m += kron(l.conjugate(), l);
    m -= 0.5 * kron(id, ldl);
    m -= 0.5 * kron(ldl.transpose(), id);
  }
  return m;
}

Eigen::VectorXcd vectorize(const Operator& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Operator unvectorize(const Eigen::VectorXcd& v) {
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (dim * dim != v.size()) throw InvalidInput("vector length is not a square");
  return Eigen::Map<const Operator>(v.data(), dim, dim);
}

double channel_rate(const JumpOperator& j) {
  Eigen::JacobiSVD<LocalOperator> svd(j.matrix);
  const double s = svd.singularValues()(0);
  return s * s;
}

}  // namespace spinchain
