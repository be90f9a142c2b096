#include "spinchain/pauli.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {
constexpr cplx I(0.0, 1.0);

void check_site(int site, int n_sites) {
  if (site < 1 || site > n_sites) {
    throw InvalidInput("site " + std::to_string(site) + " outside [1, " +
                       std::to_string(n_sites) + "]");
  }
}
}  // namespace

LocalOperator pauli(PauliLabel label) {
  LocalOperator m = LocalOperator::Zero();
  switch (label) {
    case PauliLabel::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliLabel::Y:
      m(0, 1) = -I;
      m(1, 0) = I;
      break;
    case PauliLabel::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case PauliLabel::Plus:
      m(0, 1) = 1.0;
      break;
    case PauliLabel::Minus:
      m(1, 0) = 1.0;
      break;
    case PauliLabel::Identity:
      m = LocalOperator::Identity();
      break;
  }
  return m;
}

LocalOperator pauli(std::string_view label) {
  if (label == "x") return pauli(PauliLabel::X);
  if (label == "y") return pauli(PauliLabel::Y);
  if (label == "z") return pauli(PauliLabel::Z);
  if (label == "plus") return pauli(PauliLabel::Plus);
  if (label == "minus") return pauli(PauliLabel::Minus);
  if (label == "identity") return pauli(PauliLabel::Identity);
  throw InvalidInput("unknown Pauli label '" + std::string(label) + "'");
}

std::size_t hilbert_dim(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxDenseSites) {
    throw InvalidInput("n_sites " + std::to_string(n_sites) + " outside [1, " +
                       std::to_string(kMaxDenseSites) + "]");
  }
  return std::size_t{1} << n_sites;
}

int sites_from_dim(std::size_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw InvalidInput("dimension " + std::to_string(dim) + " is not 2^N");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

Operator embed(const LocalOperator& op, int site, int n_sites) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_sites));
  check_site(site, n_sites);
  const Eigen::Index bit = Eigen::Index{1} << (n_sites - site);
  Operator out = Operator::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const int rb = (r & bit) ? 1 : 0;
    const Eigen::Index rest = r & ~bit;
    out(r, rest) = op(rb, 0);
    out(r, rest | bit) = op(rb, 1);
  }
  return out;
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator product_chain(std::span<const SiteOperator> ops, int n_sites) {
  hilbert_dim(n_sites);
  std::array<const LocalOperator*, kMaxDenseSites + 1> slot{};
  for (const auto& so : ops) {
    check_site(so.site, n_sites);
    if (slot[so.site] != nullptr) {
      throw InvalidInput("duplicate site " + std::to_string(so.site) +
                         " in product_chain");
    }
    slot[so.site] = &so.op;
  }
  Operator out = Operator::Identity(1, 1);
  for (int s = 1; s <= n_sites; ++s) {
    Operator factor = slot[s] ? Operator(*slot[s]) : Operator::Identity(2, 2);
    out = kron(out, factor);
  }
  return out;
}

}  // namespace spinchain
