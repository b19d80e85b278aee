#pragma once

#include <cmath>
#include <cstddef>

// Batch kernels for the two hot loops: path lengths over a detector sweep and
// the Sorkin identity evaluated over batteries of complex amplitude triples.
// Each kernel exists as a scalar reference and (on x86-64) an AVX2 variant.
// The vector variants use only IEEE-exact operations in the same per-element
// order as the scalar code, so all variants are bit-identical; that is an
// enforced contract, not an aspiration (see the equivalence tests).

namespace trislit::kernels {

// Per-element reference operations. Batch kernels must match these
// bit-for-bit on every element.
namespace element {

inline double path_length(double slit_y, double screen_distance,
                          double d) noexcept {
  const double dy = d - slit_y;
  return std::sqrt(screen_distance * screen_distance + dy * dy);
}

// kappa_S = P(a+b+g) - P(a+b) - P(a+g) - P(b+g) + P(a) + P(b) + P(g),
// P(z) = |z|^2. Zero for all complex triples; evaluating it measures only
// rounding noise. Fixed evaluation order.
inline double sorkin_identity(double ar, double ai, double br, double bi,
                              double gr, double gi) noexcept {
  const double ab_r = ar + br;
  const double ab_i = ai + bi;
  const double ag_r = ar + gr;
  const double ag_i = ai + gi;
  const double bg_r = br + gr;
  const double bg_i = bi + gi;
  const double abg_r = ab_r + gr;
  const double abg_i = ab_i + gi;
  const double p_abg = abg_r * abg_r + abg_i * abg_i;
  const double p_ab = ab_r * ab_r + ab_i * ab_i;
  const double p_ag = ag_r * ag_r + ag_i * ag_i;
  const double p_bg = bg_r * bg_r + bg_i * bg_i;
  const double p_a = ar * ar + ai * ai;
  const double p_b = br * br + bi * bi;
  const double p_g = gr * gr + gi * gi;
  return p_abg - p_ab - p_ag - p_bg + p_a + p_b + p_g;
}

}  // namespace element

// out is slit-major: out[s * point_count + p] = r_s(d[p]).
using PathLengthsFn = void (*)(const double* slit_y, std::size_t slit_count,
                               double screen_distance, const double* d,
                               std::size_t point_count, double* out);

// Split re/im arrays for the three amplitudes; out[t] = kappa_S(triple t).
using SorkinIdentityFn = void (*)(const double* ar, const double* ai,
                                  const double* br, const double* bi,
                                  const double* gr, const double* gi,
                                  std::size_t count, double* out);

struct KernelSet {
  const char* name;
  PathLengthsFn path_lengths;
  SorkinIdentityFn sorkin_identity;
};

enum class Variant { scalar, avx2 };

bool variant_available(Variant variant);
const KernelSet& kernel_set(Variant variant);  // throws if unavailable

// Selected once per process: AVX2 when compiled in and the CPU supports it,
// scalar otherwise. TRISLIT_KERNEL=scalar|avx2 in the environment overrides.
const KernelSet& active();
void set_active(Variant variant);  // test hook; throws if unavailable

}  // namespace trislit::kernels
