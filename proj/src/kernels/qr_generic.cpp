#include <Eigen/Dense>

#include "spinchain/kernels.hpp"

namespace spinchain::kernels {

void householder_qr_generic(double* a, std::ptrdiff_t rows, std::ptrdiff_t cols,
                            double* h_coeffs) {
  Eigen::Map<Eigen::MatrixXd> m(a, rows, cols);
  Eigen::HouseholderQR<Eigen::Ref<Eigen::MatrixXd>> qr(m);
  Eigen::Map<Eigen::VectorXd>(h_coeffs, qr.hCoeffs().size()) = qr.hCoeffs();
}

}  // namespace spinchain::kernels
