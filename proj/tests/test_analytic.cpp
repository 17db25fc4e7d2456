#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grovernoise/analytic.hpp"
#include "grovernoise/oracle.hpp"

using namespace grovernoise;

namespace {

std::vector<double> oracle_values(const GroverParams& p, ChannelKind kind, double eta, int t_end) {
  return success_values(
      simulate_trace(p, NoiseChannel::from_eta(kind, eta), t_end, Placement::PerIteration));
}

}  // namespace

TEST_CASE("spectral parameters") {
  for (auto [n, m] : {std::pair{16, 1}, {256, 1}, {1024, 3}}) {
    const auto p = grover_params(n, m);
    const auto sp = spectral_params(p, 1.0);
    CHECK(sp.a_plus == doctest::Approx(std::cos(2 * p.angle)).epsilon(1e-14));
    CHECK(sp.a_minus == 0.0);
    CHECK(sp.b == doctest::Approx(std::abs(std::sin(2 * p.angle))).epsilon(1e-12));
    CHECK(sp.phi == doctest::Approx(2 * p.angle).epsilon(1e-12));
    CHECK(sp.regime == Regime::Oscillatory);
  }
  CHECK(spectral_params(grover_params(256, 1), 0.7).regime == Regime::Oscillatory);
  // tiny angle: A+^2 ~ 0.9025 > 0.9
  CHECK(spectral_params(grover_params(1'000'000'000'000ULL, 1), 0.9).regime == Regime::Overdamped);
  CHECK_THROWS(spectral_params(grover_params(256, 1), 0.0));
  CHECK_THROWS(spectral_params(grover_params(256, 1), -0.5));
}

TEST_CASE("noiseless limit of the closed forms") {
  for (auto [n, m] : {std::pair{4, 1}, {64, 1}, {256, 1}, {256, 4}, {1024, 1}}) {
    const auto p = grover_params(n, m);
    for (int t = 0; t <= 60; ++t) {
      const double ideal = ideal_success_probability(p, t);
      CHECK(std::abs(phase_flip_probability(p, 1.0, t) - ideal) < 1e-12);
      CHECK(std::abs(bit_flip_probability(p, 1.0, t) - ideal) < 1e-12);
      CHECK(std::abs(bit_phase_flip_probability(p, 1.0, t) - ideal) < 1e-12);
    }
  }
}

TEST_CASE("t = 0 gives the initial overlap") {
  for (auto [n, m] : {std::pair{16, 1}, {256, 1}, {256, 4}}) {
    const auto p = grover_params(n, m);
    const double start = double(m) / n;
    for (double eta : {0.5, 0.8, 1.0}) {
      CHECK(phase_flip_probability(p, eta, 0) == doctest::Approx(start).epsilon(1e-12));
      CHECK(bit_flip_probability(p, eta, 0) == doctest::Approx(start).epsilon(1e-12));
      CHECK(bit_phase_flip_probability(p, eta, 0) == doctest::Approx(start).epsilon(1e-12));
      for (auto kind : {ChannelKind::PhaseFlip, ChannelKind::BitFlip, ChannelKind::Depolarizing}) {
        CHECK(matrix_power_probability(p, NoiseChannel::from_eta(kind, eta), 0,
                                       Placement::PerIteration) ==
              doctest::Approx(start).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("closed forms against the oracle") {
  const auto p = grover_params(256, 1);
  const auto pf = oracle_values(p, ChannelKind::PhaseFlip, 0.8, 12);
  CHECK(std::abs(phase_flip_probability(p, 0.8, 12) - pf[12]) < 1e-10);

  const auto bf = oracle_values(p, ChannelKind::BitFlip, 0.7, 50);
  for (int t = 1; t <= 50; ++t) CHECK(std::abs(bit_flip_probability(p, 0.7, t) - bf[t]) < 1e-10);

  const auto bpf = oracle_values(p, ChannelKind::BitPhaseFlip, 0.8, 100);
  for (int t = 0; t <= 100; ++t) {
    CHECK(std::abs(bit_phase_flip_probability(p, 0.8, t) - bpf[t]) < 1e-12);
  }
}

TEST_CASE("bit-phase flip formula") {
  const auto p = grover_params(256, 1);
  for (double eta : {0.3, 0.8}) {
    for (int t = 0; t < 30; ++t) {
      const double expected = 0.5 - std::pow(eta, t) / 2 * std::cos((2 * t + 1) * p.angle);
      CHECK(bit_phase_flip_probability(p, eta, t) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("envelopes") {
  const auto p = grover_params(256, 1);
  const int t_end = 4 * optimal_iterations(p);

  SUBCASE("noiseless envelope has constant amplitude about 1/2") {
    const auto sp = spectral_params(p, 1.0);
    const double amp = envelope_params(sp).r_amp / (2 * sp.b);
    for (int t = 0; t <= t_end; ++t) {
      CHECK(std::abs(phase_flip_envelope(p, 1.0, t) - 0.5) <= amp + 1e-15);
      CHECK(decay_envelope(p, ChannelKind::PhaseFlip, 1.0, t) == doctest::Approx(amp));
    }
  }

  SUBCASE("distance from the exact curve stays within the dropped terms") {
    // The envelope drops a sin(2a) sin(a) term (times eta for phase flip)
    // and the (1 - cos a) part of the cos(a) factor.
    const double eta = 0.9;
    const auto sp = spectral_params(p, eta);
    const auto env = envelope_params(sp);
    const double s2 = std::abs(std::sin(2 * p.angle));
    const double amp = env.r_amp / (2 * sp.b);
    double worst = 0;
    for (int t = 0; t <= t_end; ++t) {
      const double decay = std::pow(eta, 0.5 * t) / (2 * sp.b);
      const double tail = (1 - std::cos(p.angle)) * env.r_amp;
      const double pf_bound = decay * (eta * s2 * std::sin(p.angle) + tail);
      const double bf_bound = decay * (s2 * std::sin(p.angle) + tail);
      const double e_pf = std::abs(phase_flip_envelope(p, eta, t) - phase_flip_probability(p, eta, t));
      const double e_bf = std::abs(bit_flip_envelope(p, eta, t) - bit_flip_probability(p, eta, t));
      CHECK(e_pf <= pf_bound + 1e-14);
      CHECK(e_bf <= bf_bound + 1e-14);
      worst = std::max({worst, e_pf, e_bf});
    }
    CHECK(worst < 0.05);
    CHECK(worst < 0.1 * amp);
  }

  SUBCASE("decay bound") {
    for (double eta : {0.7, 0.8, 0.9}) {
      for (int t = 0; t <= 200; ++t) {
        const double amp = decay_envelope(p, ChannelKind::PhaseFlip, eta, t);
        CHECK(std::abs(phase_flip_envelope(p, eta, t) - 0.5) <= amp + 1e-15);
        CHECK(std::abs(bit_phase_flip_probability(p, eta, t) - 0.5) <=
              decay_envelope(p, ChannelKind::BitPhaseFlip, eta, t) + 1e-15);
      }
    }
  }

  SUBCASE("phase relation between bit flip and phase flip") {
    const double eta = 0.9;
    const auto sp = spectral_params(p, eta);
    const auto env = envelope_params(sp);
    for (int t = 0; t <= t_end; ++t) {
      const double a = std::pow(eta, 0.5 * t) / (2 * sp.b) * env.r_amp;
      CHECK(phase_flip_envelope(p, eta, t) ==
            doctest::Approx(0.5 - a * std::sin(sp.phi * t + env.delta)));
      CHECK(bit_flip_envelope(p, eta, t) ==
            doctest::Approx(0.5 + a * std::sin(sp.phi * t - env.delta)));
    }
    CHECK(env.delta == doctest::Approx(std::atan2(sp.b, sp.a_minus)));
  }

  SUBCASE("large m/N is rejected") {
    CHECK_THROWS_AS(phase_flip_envelope(grover_params(16, 1), 0.9, 3), std::domain_error);
    CHECK_THROWS_AS(bit_flip_envelope(grover_params(256, 5), 0.9, 3), std::domain_error);
    CHECK_NOTHROW(bit_flip_envelope(grover_params(256, 4), 0.9, 3));
    // overdamped: no envelope
    CHECK_THROWS_AS(phase_flip_envelope(p, 0.5, 3), std::domain_error);
  }
}

TEST_CASE("oscillation center") {
  const auto p = grover_params(256, 1);
  const double eta = 0.9;
  const auto sp = spectral_params(p, eta);
  const int period = static_cast<int>(std::lround(2 * std::numbers::pi / sp.phi));
  const auto values = oracle_values(p, ChannelKind::PhaseFlip, eta, 6 * period);
  for (int k = 2; k <= 5; ++k) {
    double mean = 0;
    for (int t = (k - 1) * period; t < k * period; ++t) mean += values[t];
    mean /= period;
    CHECK(std::abs(mean - 0.5) < 0.02);
  }
}

TEST_CASE("matrix power") {
  const Mat2 m{0.3, -1.1, 0.7, 0.2};
  for (int t : {0, 1, 2, 7, 31, 64}) {
    CHECK(max_abs_diff(matrix_power(m, t), matrix_power_by_squaring(m, t)) < 1e-12);
  }
  // defective: a single Jordan block
  const Mat2 jordan{0.9, 1.0, 0.0, 0.9};
  const auto j10 = matrix_power(jordan, 10);
  CHECK(j10.xx == doctest::Approx(std::pow(0.9, 10)));
  CHECK(j10.xz == doctest::Approx(10 * std::pow(0.9, 9)));
  CHECK(j10.zx == 0.0);
  // nearly degenerate real pair
  const Mat2 close{0.95, 1e-9, 1e-9, 0.95 + 1e-9};
  CHECK(max_abs_diff(matrix_power(close, 50), matrix_power_by_squaring(close, 50)) < 1e-12);
  CHECK_THROWS(matrix_power(m, -1));
}

TEST_CASE("matrix power probability agrees with closed forms") {
  for (auto [n, m] : {std::pair{16, 1}, {64, 1}, {256, 1}, {256, 4}, {1024, 1}}) {
    const auto p = grover_params(n, m);
    for (double eta : {0.5, 0.7, 0.9, 0.95, 1.0}) {
      if (spectral_params(p, eta).regime != Regime::Oscillatory) continue;
      const auto pf = NoiseChannel::from_eta(ChannelKind::PhaseFlip, eta);
      const auto bf = NoiseChannel::from_eta(ChannelKind::BitFlip, eta);
      for (int t = 0; t <= 4 * optimal_iterations(p); ++t) {
        CHECK(std::abs(matrix_power_probability(p, pf, t, Placement::PerIteration) -
                       phase_flip_probability(p, eta, t)) < 1e-10);
        CHECK(std::abs(matrix_power_probability(p, bf, t, Placement::PerIteration) -
                       bit_flip_probability(p, eta, t)) < 1e-10);
      }
    }
  }
  CHECK_THROWS(matrix_power_probability(grover_params(16, 1), NoiseChannel::amplitude_damping(0.5),
                                        2, Placement::PerIteration));
}

TEST_CASE("overdamped decay") {
  const auto p = grover_params(1'000'000, 1);
  REQUIRE(spectral_params(p, 0.99).regime == Regime::Overdamped);

  // phase flip: monotone approach to 1/2 from below
  const auto pf = NoiseChannel::from_eta(ChannelKind::PhaseFlip, 0.99);
  double prev = 0.0;
  for (int t = 0; t <= 20000; t += 10) {
    const double pt = closed_form_probability(p, pf, t, Placement::PerIteration);
    CHECK(pt <= 0.5 + 1e-15);
    CHECK(pt >= prev - 1e-15);
    prev = pt;
  }
  CHECK(prev == doctest::Approx(0.5).epsilon(1e-6));

  // bit flip: real eigenvalues allow a single overshoot, never an oscillation
  const auto bf = NoiseChannel::from_eta(ChannelKind::BitFlip, 0.99);
  const auto oracle = success_values(simulate_trace(p, bf, 20000, Placement::PerIteration));
  int crossings = 0;
  for (int t = 1; t <= 20000; ++t) {
    CHECK(std::abs(closed_form_probability(p, bf, t, Placement::PerIteration) - oracle[t]) < 1e-10);
    if ((oracle[t] - 0.5) * (oracle[t - 1] - 0.5) < 0) ++crossings;
  }
  CHECK(crossings <= 1);
  CHECK(oracle.back() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("closed form dispatch") {
  const auto p = grover_params(256, 1);
  // overdamped point routes to the matrix power
  const auto pf = NoiseChannel::from_eta(ChannelKind::PhaseFlip, 0.5);
  REQUIRE(spectral_params(p, 0.5).regime == Regime::Overdamped);
  const auto oracle = success_values(simulate_trace(p, pf, 48, Placement::PerIteration));
  for (int t = 0; t <= 48; ++t) {
    CHECK(std::abs(closed_form_probability(p, pf, t, Placement::PerIteration) - oracle[t]) < 1e-12);
  }
  // eta = 0 and reflection placement
  const auto zero = NoiseChannel::from_eta(ChannelKind::BitPhaseFlip, 0.0);
  CHECK(closed_form_probability(p, zero, 3, Placement::PerIteration) == doctest::Approx(0.5));
  const auto bf = NoiseChannel::from_eta(ChannelKind::BitFlip, 0.9);
  const auto refl = success_values(simulate_trace(p, bf, 48, Placement::PerReflection));
  for (int t = 0; t <= 48; ++t) {
    CHECK(std::abs(closed_form_probability(p, bf, t, Placement::PerReflection) - refl[t]) < 1e-12);
  }
  CHECK_THROWS(closed_form_probability(p, NoiseChannel::amplitude_damping(0.5), 1,
                                       Placement::PerIteration));
}

TEST_CASE("t_max and p_max") {
  const auto p = grover_params(256, 1);
  CHECK(t_max(p, 1.0) == 12);
  CHECK(t_max(p, 0.7) <= 12);
  const auto scan = argmax_scan(oracle_values(p, ChannelKind::BitPhaseFlip, 0.7, 24));
  CHECK(std::abs(t_max(p, 0.7) - scan.first) <= 1);

  int prev_t = 0;
  double prev_p = 0;
  for (double eta : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    CHECK(t_max(p, eta) >= prev_t);
    CHECK(p_max(p, eta) >= prev_p);
    CHECK(p_max(p, eta) >= 0.5);
    prev_t = t_max(p, eta);
    prev_p = p_max(p, eta);
  }
  CHECK(p_max(p, 1.0) == doctest::Approx(0.999947042103).epsilon(1e-11));
  CHECK(p_max(p, 0.7) < p_max(p, 0.9));
  for (double eta : {0.05, 0.2, 0.45}) CHECK(p_max(p, eta) >= 0.5);

  const auto ext = bpf_extremum(p, 0.8);
  CHECK(ext.p == doctest::Approx(bit_phase_flip_probability(p, 0.8, ext.t)));
  for (int t = std::max(0, ext.t - 2); t <= ext.t + 2; ++t) {
    CHECK(bit_phase_flip_probability(p, 0.8, t) <= ext.p);
  }

  CHECK_THROWS(t_max(p, 0.0));
  CHECK_THROWS(p_max(p, -1.0));
}

TEST_CASE("bit-phase flip versus ideal ordering") {
  const auto p = grover_params(256, 1);
  CHECK(bpf_vs_ideal_ordering(p, 0.8, 0) == Ordering::NoisyHigher);
  CHECK(bpf_vs_ideal_ordering(p, 0.8, 5) == Ordering::NoisyHigher);
  CHECK(bpf_vs_ideal_ordering(p, 0.8, 10) == Ordering::NoisyLower);
  CHECK(bpf_vs_ideal_ordering(p, 1.0, 10) == Ordering::Equal);

  // N = 2: the angle is pi/2, so cos(angle) = 0 at t = 0
  CHECK(bpf_vs_ideal_ordering(grover_params(2, 1), 0.5, 0) == Ordering::Equal);
}
