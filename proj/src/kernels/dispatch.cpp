#include <cstdlib>
#include <stdexcept>
#include <string>

#include "grovernoise/kernels/bloch_batch.hpp"

namespace grovernoise::kernels {

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

bool scalar_forced() {
  const char* env = std::getenv("GROVERNOISE_SIMD");
  return env != nullptr && std::string(env) == "scalar";
}

}  // namespace

std::string_view to_string(SimdLevel level) {
  return level == SimdLevel::Avx2 ? "avx2" : "scalar";
}

bool simd_level_available(SimdLevel level) {
  return level == SimdLevel::Scalar || cpu_has_avx2();
}

SimdLevel detect_simd_level() {
  return (!scalar_forced() && cpu_has_avx2()) ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

void propagate_success(std::span<const Mat2> steps, std::span<const BlochState> init, int t_end,
                       std::span<double> out, SimdLevel level) {
  if (t_end < 0) throw std::invalid_argument("t_end must be nonnegative");
  if (steps.size() != init.size()) {
    throw std::invalid_argument("one initial state per step matrix is required");
  }
  if (out.size() != static_cast<std::size_t>(t_end + 1) * steps.size()) {
    throw std::invalid_argument("output must hold (t_end + 1) * lanes values");
  }
  if (!simd_level_available(level)) {
    throw std::invalid_argument("SIMD level not available on this CPU");
  }
  switch (level) {
    case SimdLevel::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      propagate_success_avx2(steps, init, t_end, out);
      return;
#endif
    case SimdLevel::Scalar:
      propagate_success_scalar(steps, init, t_end, out);
      return;
  }
}

void propagate_success(std::span<const Mat2> steps, std::span<const BlochState> init, int t_end,
                       std::span<double> out) {
  propagate_success(steps, init, t_end, out, detect_simd_level());
}

std::vector<double> propagate_success(std::span<const Mat2> steps,
                                      std::span<const BlochState> init, int t_end) {
  if (t_end < 0) throw std::invalid_argument("t_end must be nonnegative");
  std::vector<double> out(static_cast<std::size_t>(t_end + 1) * steps.size());
  propagate_success(steps, init, t_end, out);
  return out;
}

}  // namespace grovernoise::kernels
