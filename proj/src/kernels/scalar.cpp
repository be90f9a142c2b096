#include "spinchain/kernels.hpp"

namespace spinchain::kernels {

void householder_qr_generic(double* a, std::ptrdiff_t rows, std::ptrdiff_t cols, double* h_coeffs);

namespace {

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

void mix_pair_scalar(const cplx* m, cplx* x0, cplx* x1, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = x0[k];
    const cplx b = x1[k];
    x0[k] = m[0] * a + m[1] * b;
    x1[k] = m[2] * a + m[3] * b;
  }
}

void mix_adjacent_scalar(const cplx* m, cplx* x, std::size_t n_pairs) {
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const cplx a = x[2 * k];
    const cplx b = x[2 * k + 1];
    x[2 * k] = m[0] * a + m[1] * b;
    x[2 * k + 1] = m[2] * a + m[3] * b;
  }
}

constexpr KernelTable kScalar{Backend::Scalar, axpy_scalar, mix_pair_scalar,
                              mix_adjacent_scalar, householder_qr_generic};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace spinchain::kernels
