#pragma once

// Data-parallel inner loops of the matrix-free Lindblad right-hand side and
// the dense Householder factorization behind the steady-state solve.
//
// Every kernel exists as a scalar reference and, on x86-64, an AVX2+FMA
// variant compiled in its own translation unit. The variant is picked once
// at runtime from CPUID; SPINCHAIN_KERNELS=scalar|avx2 overrides the choice.
// Complex numbers are std::complex<double> (interleaved re, im).

#include <complex>
#include <cstddef>
#include <string_view>

namespace spinchain::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend);

struct KernelTable {
  Backend backend;
  /// y[k] += a * x[k]
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
  /// (x0[k], x1[k]) <- (m[0] x0[k] + m[1] x1[k], m[2] x0[k] + m[3] x1[k])
  void (*mix_pair)(const cplx* m, cplx* x0, cplx* x1, std::size_t n);
  /// Same 2x2 mixing on consecutive pairs: (x[2k], x[2k+1]).
  void (*mix_adjacent)(const cplx* m, cplx* x, std::size_t n_pairs);
  /// Blocked Householder QR of a column-major rows x cols matrix, in place,
  /// in the LAPACK geqrf layout: R on and above the diagonal, reflector tails
  /// below it, min(rows, cols) reflector coefficients in h_coeffs.
  void (*householder_qr)(double* a, std::ptrdiff_t rows, std::ptrdiff_t cols, double* h_coeffs);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 translation unit was not built.
const KernelTable* avx2_table();

bool cpu_supports(Backend backend);

/// Table in use for this process. Selected on first call.
const KernelTable& active();

/// Table for an explicit backend; falls back to scalar when unavailable.
const KernelTable& table_for(Backend backend);

}  // namespace spinchain::kernels
