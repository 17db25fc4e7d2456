#include "grovernoise/kernels/bloch_batch.hpp"

namespace grovernoise::kernels {

void propagate_success_scalar(std::span<const Mat2> steps, std::span<const BlochState> init,
                              int t_end, std::span<double> out) {
  const std::size_t lanes = steps.size();
  for (std::size_t lane = 0; lane < lanes; ++lane) {
    const Mat2 m = steps[lane];
    double x = init[lane].r_x;
    double z = init[lane].r_z;
    for (int t = 0; t <= t_end; ++t) {
      out[static_cast<std::size_t>(t) * lanes + lane] = (1.0 - z) * 0.5;
      const double nx = m.xx * x + m.xz * z;
      const double nz = m.zx * x + m.zz * z;
      x = nx;
      z = nz;
    }
  }
}

}  // namespace grovernoise::kernels
