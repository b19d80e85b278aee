#include "trislit/kernels.hpp"

namespace trislit::kernels {

namespace {

void path_lengths_scalar(const double* slit_y, std::size_t slit_count,
                         double screen_distance, const double* d,
                         std::size_t point_count, double* out) {
  for (std::size_t s = 0; s < slit_count; ++s) {
    const double y = slit_y[s];
    double* row = out + s * point_count;
    for (std::size_t p = 0; p < point_count; ++p) {
      row[p] = element::path_length(y, screen_distance, d[p]);
    }
  }
}

void sorkin_identity_scalar(const double* ar, const double* ai,
                            const double* br, const double* bi,
                            const double* gr, const double* gi,
                            std::size_t count, double* out) {
  for (std::size_t t = 0; t < count; ++t) {
    out[t] = element::sorkin_identity(ar[t], ai[t], br[t], bi[t], gr[t], gi[t]);
  }
}

}  // namespace

const KernelSet& scalar_kernel_set() {
  static const KernelSet set{"scalar", path_lengths_scalar,
                             sorkin_identity_scalar};
  return set;
}

}  // namespace trislit::kernels
