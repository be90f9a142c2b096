// Built with -mavx2 -mfma. Only reached after a CPUID check.

#include <immintrin.h>

#include "spinchain/kernels.hpp"

namespace spinchain::kernels {

void householder_qr_avx2(double* a, std::ptrdiff_t rows, std::ptrdiff_t cols, double* h_coeffs);

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// Broadcast a scalar complex into (re, re, re, re) and (im, im, im, im).
struct Coeff {
  __m256d re;
  __m256d im;
  explicit Coeff(cplx a) : re(_mm256_set1_pd(a.real())), im(_mm256_set1_pd(a.imag())) {}
  Coeff(__m256d r, __m256d i) : re(r), im(i) {}
};

// a * x for packed complex x.
inline __m256d cmul(const Coeff& a, __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);  // [im0, re0, im1, re1]
  return _mm256_fmaddsub_pd(a.re, x, _mm256_mul_pd(a.im, swapped));
}

// acc + a * x
inline __m256d cfma(const Coeff& a, __m256d x, __m256d acc) {
  return _mm256_add_pd(acc, cmul(a, x));
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const Coeff ca(a);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) store2(y + k, cfma(ca, load2(x + k), load2(y + k)));
  for (; k < n; ++k) y[k] += a * x[k];
}

void mix_pair_avx2(const cplx* m, cplx* x0, cplx* x1, std::size_t n) {
  const Coeff m00(m[0]), m01(m[1]), m10(m[2]), m11(m[3]);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d a = load2(x0 + k);
    const __m256d b = load2(x1 + k);
    store2(x0 + k, cfma(m01, b, cmul(m00, a)));
    store2(x1 + k, cfma(m11, b, cmul(m10, a)));
  }
  for (; k < n; ++k) {
    const cplx a = x0[k];
    const cplx b = x1[k];
    x0[k] = m[0] * a + m[1] * b;
    x1[k] = m[2] * a + m[3] * b;
  }
}

void mix_adjacent_avx2(const cplx* m, cplx* x, std::size_t n_pairs) {
  // Column coefficients: first = [m00, m10], second = [m01, m11].
  const Coeff first(_mm256_setr_pd(m[0].real(), m[0].real(), m[2].real(), m[2].real()),
                    _mm256_setr_pd(m[0].imag(), m[0].imag(), m[2].imag(), m[2].imag()));
  const Coeff second(_mm256_setr_pd(m[1].real(), m[1].real(), m[3].real(), m[3].real()),
                     _mm256_setr_pd(m[1].imag(), m[1].imag(), m[3].imag(), m[3].imag()));
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const __m256d v = load2(x + 2 * k);
    const __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);  // [a, a]
    const __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);  // [b, b]
    store2(x + 2 * k, cfma(second, hi, cmul(first, lo)));
  }
}

constexpr KernelTable kAvx2{Backend::Avx2, axpy_avx2, mix_pair_avx2, mix_adjacent_avx2,
                             householder_qr_avx2};

}  // namespace

const KernelTable* avx2_table_impl() { return &kAvx2; }

}  // namespace spinchain::kernels
