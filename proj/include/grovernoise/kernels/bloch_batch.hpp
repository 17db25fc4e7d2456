#pragma once

// Batched reduced-Bloch propagation.
//
// Each lane carries its own 2x2 step matrix and initial (r_x, r_z); all
// lanes advance in lockstep and the success probability (1 - r_z) / 2 of
// every lane is written for t = 0..t_end into out[t * lanes + lane].
// Parameter-grid sweeps run hundreds of independent trajectories, which is
// where the vector variants pay off.
//
// All variants evaluate the same expression tree without fused multiply-add,
// so their outputs are bit-identical.

#include <span>
#include <string_view>
#include <vector>

#include "grovernoise/bloch.hpp"

namespace grovernoise::kernels {

enum class SimdLevel { Scalar, Avx2 };

std::string_view to_string(SimdLevel level);

/// Best level supported by this CPU and build. GROVERNOISE_SIMD=scalar in
/// the environment forces the scalar path.
SimdLevel detect_simd_level();

bool simd_level_available(SimdLevel level);

void propagate_success_scalar(std::span<const Mat2> steps, std::span<const BlochState> init,
                              int t_end, std::span<double> out);

#if defined(__x86_64__) || defined(_M_X64)
void propagate_success_avx2(std::span<const Mat2> steps, std::span<const BlochState> init,
                            int t_end, std::span<double> out);
#endif

/// Throws std::invalid_argument on size mismatches or an unavailable level.
void propagate_success(std::span<const Mat2> steps, std::span<const BlochState> init, int t_end,
                       std::span<double> out, SimdLevel level);

void propagate_success(std::span<const Mat2> steps, std::span<const BlochState> init, int t_end,
                       std::span<double> out);

/// Convenience wrapper returning a (t_end + 1) x lanes row-major table.
std::vector<double> propagate_success(std::span<const Mat2> steps,
                                      std::span<const BlochState> init, int t_end);

}  // namespace grovernoise::kernels
