// Built with -mavx2 -mfma. Eigen is compiled here under its own namespace so
// none of its template instantiations are shared with the baseline build.

#define Eigen spinchain_eigen_avx2
#include <Eigen/Dense>
#undef Eigen

#include "spinchain/kernels.hpp"

namespace spinchain::kernels {

void householder_qr_avx2(double* a, std::ptrdiff_t rows, std::ptrdiff_t cols,
                         double* h_coeffs) {
  namespace E = spinchain_eigen_avx2;
  E::Map<E::MatrixXd> m(a, rows, cols);
  E::HouseholderQR<E::Ref<E::MatrixXd>> qr(m);
  E::Map<E::VectorXd>(h_coeffs, qr.hCoeffs().size()) = qr.hCoeffs();
}

}  // namespace spinchain::kernels
