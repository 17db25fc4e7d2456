#include "grovernoise/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace grovernoise {

namespace {

void require_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must lie in (0, 1], got " + std::to_string(eta));
  }
}

void require_t(int t) {
  if (t < 0) throw std::invalid_argument("iteration count must be nonnegative");
}

double clamp_probability(double p) {
  if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
    throw std::logic_error("closed form left [0, 1]: " + std::to_string(p));
  }
  return std::clamp(p, 0.0, 1.0);
}

bool closed_form_usable(const SpectralParams& sp) {
  return sp.regime == Regime::Oscillatory && sp.b >= kSmallB * std::sqrt(sp.eta);
}

SpectralParams envelope_spectrum(const GroverParams& params, double eta) {
  const double fraction =
      static_cast<double>(params.n_targets) / static_cast<double>(params.n_items);
  if (fraction > kEnvelopeMaxFraction) {
    throw std::domain_error("small-angle envelope needs m/N <= 1/64");
  }
  const auto sp = spectral_params(params, eta);
  if (!closed_form_usable(sp)) {
    throw std::domain_error("envelope is only defined in the oscillatory regime");
  }
  return sp;
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Oscillatory: return "oscillatory";
    case Regime::Critical: return "critical";
    case Regime::Overdamped: return "overdamped";
  }
  return "?";
}

SpectralParams spectral_params(const GroverParams& params, double eta) {
  require_eta(eta);
  if (!(params.angle > 0.0 && params.angle <= std::numbers::pi)) {
    throw std::invalid_argument("rotation angle must lie in (0, pi]");
  }
  const double c = std::cos(2.0 * params.angle);
  SpectralParams sp;
  sp.eta = eta;
  sp.a_plus = 0.5 * (1.0 + eta) * c;
  sp.a_minus = 0.5 * (1.0 - eta) * c;
  const double gap = eta - sp.a_plus * sp.a_plus;
  if (std::abs(gap) <= 1e-14) {
    sp.regime = Regime::Critical;
  } else if (gap > 0.0) {
    sp.regime = Regime::Oscillatory;
  } else {
    sp.regime = Regime::Overdamped;
  }
  sp.b = std::sqrt(std::abs(gap));
  if (sp.regime == Regime::Oscillatory) sp.phi = std::atan2(sp.b, sp.a_plus);
  return sp;
}

EnvelopeParams envelope_params(const SpectralParams& spectral) {
  return {std::hypot(spectral.a_minus, spectral.b), std::atan2(spectral.b, spectral.a_minus)};
}

double phase_flip_probability(const GroverParams& params, double eta, int t) {
  require_t(t);
  const auto sp = spectral_params(params, eta);
  if (!closed_form_usable(sp)) {
    return matrix_power_probability(params, NoiseChannel::from_eta(ChannelKind::PhaseFlip, eta),
                                    t, Placement::PerIteration);
  }
  const double ft = sp.phi * t;
  const double s2 = std::sin(2.0 * params.angle);
  const double decay = std::pow(eta, 0.5 * t) / (2.0 * sp.b);
  const double bracket = eta * std::sin(ft) * s2 * std::sin(params.angle) -
                         (sp.b * std::cos(ft) + sp.a_minus * std::sin(ft)) * std::cos(params.angle);
  return clamp_probability(0.5 + decay * bracket);
}

double bit_flip_probability(const GroverParams& params, double eta, int t) {
  require_t(t);
  const auto sp = spectral_params(params, eta);
  if (!closed_form_usable(sp)) {
    return matrix_power_probability(params, NoiseChannel::from_eta(ChannelKind::BitFlip, eta), t,
                                    Placement::PerIteration);
  }
  const double ft = sp.phi * t;
  const double s2 = std::sin(2.0 * params.angle);
  const double decay = std::pow(eta, 0.5 * t) / (2.0 * sp.b);
  const double bracket = std::sin(ft) * s2 * std::sin(params.angle) -
                         (sp.b * std::cos(ft) - sp.a_minus * std::sin(ft)) * std::cos(params.angle);
  return clamp_probability(0.5 + decay * bracket);
}

double bit_phase_flip_probability(const GroverParams& params, double eta, int t) {
  require_t(t);
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must lie in [0, 1], got " + std::to_string(eta));
  }
  return clamp_probability(0.5 - 0.5 * std::pow(eta, t) * std::cos((2.0 * t + 1.0) * params.angle));
}

double phase_flip_envelope(const GroverParams& params, double eta, int t) {
  require_t(t);
  const auto sp = envelope_spectrum(params, eta);
  const auto env = envelope_params(sp);
  return 0.5 - std::pow(eta, 0.5 * t) / (2.0 * sp.b) * env.r_amp * std::sin(sp.phi * t + env.delta);
}

double bit_flip_envelope(const GroverParams& params, double eta, int t) {
  require_t(t);
  const auto sp = envelope_spectrum(params, eta);
  const auto env = envelope_params(sp);
  // Same amplitude and offset as phase flip, opposite phase shift and sign.
  return 0.5 + std::pow(eta, 0.5 * t) / (2.0 * sp.b) * env.r_amp * std::sin(sp.phi * t - env.delta);
}

double decay_envelope(const GroverParams& params, ChannelKind kind, double eta, int t) {
  require_t(t);
  switch (kind) {
    case ChannelKind::BitPhaseFlip:
    case ChannelKind::Depolarizing:
      require_eta(eta);
      return 0.5 * std::pow(eta, t);
    case ChannelKind::PhaseFlip:
    case ChannelKind::PhaseDamping:
    case ChannelKind::BitFlip: {
      const auto sp = envelope_spectrum(params, eta);
      return std::pow(eta, 0.5 * t) * envelope_params(sp).r_amp / (2.0 * sp.b);
    }
    case ChannelKind::Identity:
      return 0.5;
    case ChannelKind::AmplitudeDamping:
      break;
  }
  throw std::invalid_argument("no decay envelope for amplitude damping");
}

Mat2 matrix_power_by_squaring(Mat2 m, int t) {
  require_t(t);
  Mat2 result = Mat2::identity();
  while (t > 0) {
    if (t & 1) result = result * m;
    m = m * m;
    t >>= 1;
  }
  return result;
}

Mat2 matrix_power(const Mat2& m, int t) {
  require_t(t);
  if (t == 0) return Mat2::identity();
  const double half_trace = 0.5 * m.trace();
  const double det = m.det();
  const double disc = half_trace * half_trace - det;
  const double split = std::sqrt(std::abs(disc));
  const double scale = std::max({std::sqrt(std::abs(det)), std::abs(half_trace), 1e-300});
  // The spectral expansion divides by the eigenvalue split; below this
  // relative split squaring is the more accurate route.
  if (split < 1e-4 * scale) return matrix_power_by_squaring(m, t);

  const Mat2 shifted{m.xx - half_trace, m.xz, m.zx, m.zz - half_trace};
  if (disc < 0.0) {
    // lambda = rho e^{+/- i phi}: M^t = rho^t / b [sin(t phi) (M - a I) + b cos(t phi) I].
    const double rho = std::sqrt(det);
    const double phi = std::atan2(split, half_trace);
    const double scale_t = std::pow(rho, t) / split;
    const double s = std::sin(phi * t) * scale_t;
    const double c = std::cos(phi * t) * std::pow(rho, t);
    return {s * shifted.xx + c, s * shifted.xz, s * shifted.zx, s * shifted.zz + c};
  }
  // Real eigenvalues a +/- d: M^t = [(l1^t - l2^t)/(2d)] (M - a I) + [(l1^t + l2^t)/2] I.
  const double l1 = std::pow(half_trace + split, t);
  const double l2 = std::pow(half_trace - split, t);
  const double s = (l1 - l2) / (2.0 * split);
  const double c = 0.5 * (l1 + l2);
  return {s * shifted.xx + c, s * shifted.xz, s * shifted.zx, s * shifted.zz + c};
}

double matrix_power_probability(const GroverParams& params, const NoiseChannel& channel, int t,
                                Placement placement) {
  require_t(t);
  const Mat2 step = iteration_matrix(params, channel, placement);
  return success_from_state(matrix_power(step, t) * initial_state(params));
}

double closed_form_probability(const GroverParams& params, const NoiseChannel& channel, int t,
                               Placement placement) {
  if (channel.kind() == ChannelKind::AmplitudeDamping) {
    throw std::invalid_argument("amplitude damping has no closed form");
  }
  const double eta = channel.eta();
  const double eta_eff = placement == Placement::PerReflection ? eta * eta : eta;
  switch (channel.kind()) {
    case ChannelKind::Identity:
      return ideal_success_probability(params, t);
    case ChannelKind::BitPhaseFlip:
    case ChannelKind::Depolarizing:
      return bit_phase_flip_probability(params, eta_eff, t);
    case ChannelKind::PhaseFlip:
    case ChannelKind::PhaseDamping:
      if (eta_eff <= 0.0) return matrix_power_probability(params, channel, t, placement);
      return phase_flip_probability(params, eta_eff, t);
    case ChannelKind::BitFlip:
      if (eta_eff <= 0.0) return matrix_power_probability(params, channel, t, placement);
      return bit_flip_probability(params, eta_eff, t);
    case ChannelKind::AmplitudeDamping:
      break;
  }
  throw std::logic_error("unhandled channel kind");
}

int t_max(const GroverParams& params, double eta) {
  require_eta(eta);
  const double two_angle = 2.0 * params.angle;
  return static_cast<int>(
      std::floor((std::atan(std::log(eta) / two_angle) + std::numbers::pi) / two_angle));
}

Extremum bpf_extremum(const GroverParams& params, double eta) {
  const int centre = t_max(params, eta);
  Extremum best{-1, -1.0};
  for (int t = std::max(0, centre - 2); t <= centre + 2; ++t) {
    const double p = bit_phase_flip_probability(params, eta, t);
    if (p > best.p) best = {t, p};
  }
  return best;
}

double p_max(const GroverParams& params, double eta) { return bpf_extremum(params, eta).p; }

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::NoisyHigher: return "noisy-higher";
    case Ordering::Equal: return "equal";
    case Ordering::NoisyLower: return "noisy-lower";
  }
  return "?";
}

Ordering bpf_vs_ideal_ordering(const GroverParams& params, double eta, int t) {
  require_t(t);
  require_eta(eta);
  if (eta == 1.0) return Ordering::Equal;
  const double c = std::cos((2.0 * t + 1.0) * params.angle);
  if (std::abs(c) <= 1e-12) return Ordering::Equal;
  return c > 0.0 ? Ordering::NoisyHigher : Ordering::NoisyLower;
}

}  // namespace grovernoise
