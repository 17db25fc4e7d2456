#include <doctest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "grovernoise/kernels/bloch_batch.hpp"

using namespace grovernoise;
using namespace grovernoise::kernels;

namespace {

struct Batch {
  std::vector<Mat2> steps;
  std::vector<BlochState> init;
};

Batch random_batch(std::size_t lanes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> eta(0.3, 1.0);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> n(4, 4096);
  const ChannelKind kinds[] = {ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                               ChannelKind::BitPhaseFlip, ChannelKind::PhaseDamping,
                               ChannelKind::Depolarizing};
  Batch b;
  for (std::size_t i = 0; i < lanes; ++i) {
    const auto p = grover_params(n(rng), 1);
    const auto ch = NoiseChannel::from_eta(kinds[kind(rng)], eta(rng));
    b.steps.push_back(
        iteration_matrix(p, ch, i % 2 ? Placement::PerReflection : Placement::PerIteration));
    b.init.push_back(initial_state(p));
  }
  return b;
}

}  // namespace

TEST_CASE("scalar kernel matches the bloch recursion") {
  const auto b = random_batch(9, 3);
  const int t_end = 80;
  std::vector<double> out((t_end + 1) * b.steps.size());
  propagate_success_scalar(b.steps, b.init, t_end, out);
  for (std::size_t lane = 0; lane < b.steps.size(); ++lane) {
    const auto ref = bloch_trace(b.steps[lane], b.init[lane], t_end);
    for (int t = 0; t <= t_end; ++t) CHECK(out[t * b.steps.size() + lane] == ref[t]);
  }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernel is bit-identical to scalar") {
  if (!simd_level_available(SimdLevel::Avx2)) {
    MESSAGE("AVX2 not available on this CPU; skipped");
    return;
  }
  for (std::size_t lanes : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 101u}) {
    const auto b = random_batch(lanes, lanes * 31);
    const int t_end = 120;
    std::vector<double> s((t_end + 1) * lanes), v((t_end + 1) * lanes);
    propagate_success(b.steps, b.init, t_end, s, SimdLevel::Scalar);
    propagate_success(b.steps, b.init, t_end, v, SimdLevel::Avx2);
    CHECK(s == v);
  }
}
#endif

TEST_CASE("dispatch") {
  CHECK(simd_level_available(SimdLevel::Scalar));
  CHECK(simd_level_available(detect_simd_level()));
  CHECK(to_string(SimdLevel::Scalar) == "scalar");
  CHECK(to_string(SimdLevel::Avx2) == "avx2");

  ::setenv("GROVERNOISE_SIMD", "scalar", 1);
  CHECK(detect_simd_level() == SimdLevel::Scalar);
  ::unsetenv("GROVERNOISE_SIMD");

  const auto b = random_batch(6, 5);
  const auto table = propagate_success(b.steps, b.init, 10);
  CHECK(table.size() == 66);
  std::vector<double> ref(66);
  propagate_success_scalar(b.steps, b.init, 10, ref);
  CHECK(table == ref);
}

TEST_CASE("size checks") {
  const auto b = random_batch(4, 9);
  std::vector<double> small(10);
  CHECK_THROWS_AS(propagate_success(b.steps, b.init, 10, small, SimdLevel::Scalar),
                  std::invalid_argument);
  const std::vector<BlochState> short_init(b.init.begin(), b.init.begin() + 3);
  std::vector<double> out(11 * 4);
  CHECK_THROWS_AS(propagate_success(b.steps, short_init, 10, out, SimdLevel::Scalar),
                  std::invalid_argument);
  CHECK_THROWS_AS(propagate_success(b.steps, b.init, -1, out, SimdLevel::Scalar),
                  std::invalid_argument);
  // empty batch is fine
  propagate_success(std::span<const Mat2>(), std::span<const BlochState>(), 5,
                    std::span<double>(), SimdLevel::Scalar);
}
