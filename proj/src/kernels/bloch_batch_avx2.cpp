// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "grovernoise/kernels/bloch_batch.hpp"

namespace grovernoise::kernels {

void propagate_success_avx2(std::span<const Mat2> steps, std::span<const BlochState> init,
                            int t_end, std::span<double> out) {
  const std::size_t lanes = steps.size();
  const std::size_t blocked = lanes - lanes % 4;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);

  for (std::size_t base = 0; base < blocked; base += 4) {
    const Mat2* m = steps.data() + base;
    const BlochState* s = init.data() + base;
    const __m256d xx = _mm256_setr_pd(m[0].xx, m[1].xx, m[2].xx, m[3].xx);
    const __m256d xz = _mm256_setr_pd(m[0].xz, m[1].xz, m[2].xz, m[3].xz);
    const __m256d zx = _mm256_setr_pd(m[0].zx, m[1].zx, m[2].zx, m[3].zx);
    const __m256d zz = _mm256_setr_pd(m[0].zz, m[1].zz, m[2].zz, m[3].zz);
    __m256d x = _mm256_setr_pd(s[0].r_x, s[1].r_x, s[2].r_x, s[3].r_x);
    __m256d z = _mm256_setr_pd(s[0].r_z, s[1].r_z, s[2].r_z, s[3].r_z);

    for (int t = 0; t <= t_end; ++t) {
      double* row = out.data() + static_cast<std::size_t>(t) * lanes + base;
      _mm256_storeu_pd(row, _mm256_mul_pd(_mm256_sub_pd(one, z), half));
      const __m256d nx = _mm256_add_pd(_mm256_mul_pd(xx, x), _mm256_mul_pd(xz, z));
      const __m256d nz = _mm256_add_pd(_mm256_mul_pd(zx, x), _mm256_mul_pd(zz, z));
      x = nx;
      z = nz;
    }
  }

  if (blocked < lanes) {
    // Tail lanes go through the scalar kernel on a strided view.
    const std::size_t rest = lanes - blocked;
    std::vector<double> tail(static_cast<std::size_t>(t_end + 1) * rest);
    propagate_success_scalar(steps.subspan(blocked), init.subspan(blocked), t_end, tail);
    for (int t = 0; t <= t_end; ++t) {
      for (std::size_t i = 0; i < rest; ++i) {
        out[static_cast<std::size_t>(t) * lanes + blocked + i] =
            tail[static_cast<std::size_t>(t) * rest + i];
      }
    }
  }
}

}  // namespace grovernoise::kernels
