// AVX2 variants. Only IEEE-exact operations (sub/mul/add/sqrt) appear in the
// vector bodies, in the same per-element order as kernels::element, so the
// results match the scalar kernels bit-for-bit. No FMA: contraction would
// change rounding. Tails fall back to the per-element reference ops.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "trislit/kernels.hpp"

namespace trislit::kernels {

namespace {

void path_lengths_avx2(const double* slit_y, std::size_t slit_count,
                       double screen_distance, const double* d,
                       std::size_t point_count, double* out) {
  const __m256d dsq =
      _mm256_set1_pd(screen_distance * screen_distance);
  for (std::size_t s = 0; s < slit_count; ++s) {
    const __m256d y = _mm256_set1_pd(slit_y[s]);
    double* row = out + s * point_count;
    std::size_t p = 0;
    for (; p + 4 <= point_count; p += 4) {
      const __m256d dv = _mm256_loadu_pd(d + p);
      const __m256d dy = _mm256_sub_pd(dv, y);
      const __m256d sum = _mm256_add_pd(dsq, _mm256_mul_pd(dy, dy));
      _mm256_storeu_pd(row + p, _mm256_sqrt_pd(sum));
    }
    for (; p < point_count; ++p) {
      row[p] = element::path_length(slit_y[s], screen_distance, d[p]);
    }
  }
}

inline __m256d modulus_squared(__m256d re, __m256d im) {
  return _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im));
}

void sorkin_identity_avx2(const double* ar, const double* ai, const double* br,
                          const double* bi, const double* gr, const double* gi,
                          std::size_t count, double* out) {
  std::size_t t = 0;
  for (; t + 4 <= count; t += 4) {
    const __m256d a_r = _mm256_loadu_pd(ar + t);
    const __m256d a_i = _mm256_loadu_pd(ai + t);
    const __m256d b_r = _mm256_loadu_pd(br + t);
    const __m256d b_i = _mm256_loadu_pd(bi + t);
    const __m256d g_r = _mm256_loadu_pd(gr + t);
    const __m256d g_i = _mm256_loadu_pd(gi + t);

    const __m256d ab_r = _mm256_add_pd(a_r, b_r);
    const __m256d ab_i = _mm256_add_pd(a_i, b_i);
    const __m256d ag_r = _mm256_add_pd(a_r, g_r);
    const __m256d ag_i = _mm256_add_pd(a_i, g_i);
    const __m256d bg_r = _mm256_add_pd(b_r, g_r);
    const __m256d bg_i = _mm256_add_pd(b_i, g_i);
    const __m256d abg_r = _mm256_add_pd(ab_r, g_r);
    const __m256d abg_i = _mm256_add_pd(ab_i, g_i);

    __m256d kappa = modulus_squared(abg_r, abg_i);
    kappa = _mm256_sub_pd(kappa, modulus_squared(ab_r, ab_i));
    kappa = _mm256_sub_pd(kappa, modulus_squared(ag_r, ag_i));
    kappa = _mm256_sub_pd(kappa, modulus_squared(bg_r, bg_i));
    kappa = _mm256_add_pd(kappa, modulus_squared(a_r, a_i));
    kappa = _mm256_add_pd(kappa, modulus_squared(b_r, b_i));
    kappa = _mm256_add_pd(kappa, modulus_squared(g_r, g_i));
    _mm256_storeu_pd(out + t, kappa);
  }
  for (; t < count; ++t) {
    out[t] = element::sorkin_identity(ar[t], ai[t], br[t], bi[t], gr[t], gi[t]);
  }
}

}  // namespace

const KernelSet& avx2_kernel_set() {
  static const KernelSet set{"avx2", path_lengths_avx2, sorkin_identity_avx2};
  return set;
}

}  // namespace trislit::kernels

#endif  // x86-64
