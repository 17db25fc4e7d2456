#include "grovernoise/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace grovernoise {

namespace {

void require_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

void require_flip_probability(double p) {
  if (!(p >= 0.5 && p <= 1.0)) {
    throw std::invalid_argument("flip channel p must lie in [1/2, 1], got " +
                                std::to_string(p));
  }
}

}  // namespace

GroverParams grover_params(std::uint64_t n_items, std::uint64_t n_targets) {
  if (n_items < 2) {
    throw std::invalid_argument("database size N must be at least 2");
  }
  if (n_targets == 0 || n_targets > n_items) {
    throw std::invalid_argument("target count m must satisfy 1 <= m <= N");
  }
  GroverParams params;
  params.n_items = n_items;
  params.n_targets = n_targets;
  params.half_angle =
      std::asin(std::sqrt(static_cast<double>(n_targets) / static_cast<double>(n_items)));
  params.angle = 2.0 * params.half_angle;
  return params;
}

double ideal_success_probability(const GroverParams& params, int t) {
  const double s = std::sin((2.0 * t + 1.0) * params.half_angle);
  return s * s;
}

int optimal_iterations(const GroverParams& params) {
  const double ratio =
      static_cast<double>(params.n_items) / static_cast<double>(params.n_targets);
  return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  return std::max({std::abs(a.xx - b.xx), std::abs(a.xz - b.xz), std::abs(a.zx - b.zx),
                   std::abs(a.zz - b.zz)});
}

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "BitFlip";
    case ChannelKind::PhaseFlip: return "PhaseFlip";
    case ChannelKind::BitPhaseFlip: return "BitPhaseFlip";
    case ChannelKind::Depolarizing: return "Depolarizing";
    case ChannelKind::PhaseDamping: return "PhaseDamping";
    case ChannelKind::AmplitudeDamping: return "AmplitudeDamping";
    case ChannelKind::Identity: return "Identity";
  }
  return "?";
}

std::string_view short_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bf";
    case ChannelKind::PhaseFlip: return "pf";
    case ChannelKind::BitPhaseFlip: return "bpf";
    case ChannelKind::Depolarizing: return "dp";
    case ChannelKind::PhaseDamping: return "pd";
    case ChannelKind::AmplitudeDamping: return "ad";
    case ChannelKind::Identity: return "id";
  }
  return "?";
}

ChannelKind parse_channel_kind(std::string_view tag) {
  for (auto kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::BitPhaseFlip,
                    ChannelKind::Depolarizing, ChannelKind::PhaseDamping,
                    ChannelKind::AmplitudeDamping, ChannelKind::Identity}) {
    if (tag == short_name(kind)) return kind;
  }
  throw std::invalid_argument("unknown channel '" + std::string(tag) + "'");
}

bool is_diagonalizable(ChannelKind kind) { return kind != ChannelKind::AmplitudeDamping; }

NoiseChannel NoiseChannel::bit_flip(double p) {
  require_flip_probability(p);
  return {ChannelKind::BitFlip, p, 2.0 * p - 1.0};
}

NoiseChannel NoiseChannel::phase_flip(double p) {
  require_flip_probability(p);
  return {ChannelKind::PhaseFlip, p, 2.0 * p - 1.0};
}

NoiseChannel NoiseChannel::bit_phase_flip(double p) {
  require_flip_probability(p);
  return {ChannelKind::BitPhaseFlip, p, 2.0 * p - 1.0};
}

NoiseChannel NoiseChannel::depolarizing(double alpha) {
  require_unit_interval(alpha, "depolarizing alpha");
  return {ChannelKind::Depolarizing, alpha, 1.0 - alpha};
}

NoiseChannel NoiseChannel::phase_damping(double gamma) {
  require_unit_interval(gamma, "phase damping gamma");
  return {ChannelKind::PhaseDamping, gamma, std::sqrt(gamma)};
}

NoiseChannel NoiseChannel::amplitude_damping(double gamma) {
  require_unit_interval(gamma, "amplitude damping gamma");
  return {ChannelKind::AmplitudeDamping, gamma, 0.0};  // eta() refuses AD
}

NoiseChannel NoiseChannel::identity() { return {ChannelKind::Identity, 1.0, 1.0}; }

NoiseChannel NoiseChannel::from_eta(ChannelKind kind, double eta) {
  require_unit_interval(eta, "eta");
  switch (kind) {
    case ChannelKind::BitFlip:
    case ChannelKind::PhaseFlip:
    case ChannelKind::BitPhaseFlip:
      return {kind, 0.5 * (1.0 + eta), eta};
    case ChannelKind::Depolarizing:
      return {kind, 1.0 - eta, eta};
    case ChannelKind::PhaseDamping:
      return {kind, eta * eta, eta};
    case ChannelKind::Identity:
      if (eta != 1.0) throw std::invalid_argument("identity channel requires eta = 1");
      return identity();
    case ChannelKind::AmplitudeDamping:
      break;
  }
  throw std::invalid_argument("amplitude damping has no contraction factor eta");
}

double NoiseChannel::eta() const {
  if (kind_ == ChannelKind::AmplitudeDamping) {
    throw std::logic_error("amplitude damping has no contraction factor eta");
  }
  return eta_;
}

double effective_eta(const NoiseChannel& channel) { return channel.eta(); }

BlochVector3 AffineBlochMap::apply(const BlochVector3& r) const {
  const std::array<double, 3> v{r.x, r.y, r.z};
  std::array<double, 3> out{offset.x, offset.y, offset.z};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i] += linear[i][j] * v[j];
  }
  return {out[0], out[1], out[2]};
}

bool AffineBlochMap::is_diagonal() const {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && linear[i][j] != 0.0) return false;
    }
  }
  return true;
}

AffineBlochMap noise_bloch_map(const NoiseChannel& channel) {
  auto diag = [](double x, double y, double z) {
    AffineBlochMap map;
    map.linear[0][0] = x;
    map.linear[1][1] = y;
    map.linear[2][2] = z;
    return map;
  };
  switch (channel.kind()) {
    case ChannelKind::BitFlip: {
      const double eta = channel.eta();
      return diag(1.0, eta, eta);
    }
    case ChannelKind::PhaseFlip:
    case ChannelKind::PhaseDamping: {
      const double eta = channel.eta();
      return diag(eta, eta, 1.0);
    }
    case ChannelKind::BitPhaseFlip: {
      const double eta = channel.eta();
      return diag(eta, 1.0, eta);
    }
    case ChannelKind::Depolarizing: {
      const double eta = channel.eta();
      return diag(eta, eta, eta);
    }
    case ChannelKind::AmplitudeDamping: {
      const double gamma = channel.raw_param();
      const double root = std::sqrt(gamma);
      auto map = diag(root, root, gamma);
      map.offset = {0.0, 0.0, 1.0 - gamma};
      return map;
    }
    case ChannelKind::Identity:
      return diag(1.0, 1.0, 1.0);
  }
  throw std::logic_error("unhandled channel kind");
}

Mat2 oracle_matrix() { return Mat2::diagonal(-1.0, 1.0); }

Mat2 reflection_matrix(const GroverParams& params) {
  const double c = std::cos(2.0 * params.angle);
  const double s = std::sin(2.0 * params.angle);
  return {-c, s, s, c};
}

Mat2 grover_matrix(const GroverParams& params) {
  // Advances the Bloch polar angle by 2 * angle: (sin b, cos b) -> (sin(b + 2a), cos(b + 2a)).
  const double c = std::cos(2.0 * params.angle);
  const double s = std::sin(2.0 * params.angle);
  return {c, s, -s, c};
}

Mat2 reduced_noise_matrix(const NoiseChannel& channel) {
  switch (channel.kind()) {
    case ChannelKind::PhaseFlip:
    case ChannelKind::PhaseDamping:
      return Mat2::diagonal(channel.eta(), 1.0);
    case ChannelKind::BitFlip:
      return Mat2::diagonal(1.0, channel.eta());
    case ChannelKind::BitPhaseFlip:
    case ChannelKind::Depolarizing:
      return Mat2::diagonal(channel.eta(), channel.eta());
    case ChannelKind::Identity:
      return Mat2::identity();
    case ChannelKind::AmplitudeDamping:
      break;
  }
  throw std::invalid_argument(
      "amplitude damping is affine in the Bloch picture; use the density-matrix oracle");
}

std::string_view to_string(Placement placement) {
  return placement == Placement::PerIteration ? "iteration" : "reflection";
}

Mat2 iteration_matrix(const Mat2& reflection, const Mat2& oracle, const Mat2& noise,
                      Placement placement) {
  if (placement == Placement::PerIteration) return reflection * (oracle * noise);
  return reflection * (noise * (oracle * noise));
}

Mat2 iteration_matrix(const GroverParams& params, const NoiseChannel& channel,
                      Placement placement) {
  return iteration_matrix(reflection_matrix(params), oracle_matrix(),
                          reduced_noise_matrix(channel), placement);
}

BlochState initial_state(const GroverParams& params) {
  return {std::sin(params.angle), std::cos(params.angle)};
}

BlochState noisy_grover_step(const BlochState& state, const GroverParams& params,
                             const NoiseChannel& channel, Placement placement) {
  return iteration_matrix(params, channel, placement) * state;
}

double success_from_state(const BlochState& state) {
  if (!(std::abs(state.r_z) <= 1.0 + 1e-9)) {
    throw std::domain_error("Bloch state left the unit ball: r_z = " +
                            std::to_string(state.r_z));
  }
  return std::clamp((1.0 - state.r_z) * 0.5, 0.0, 1.0);
}

std::vector<double> bloch_trace(const Mat2& step, const BlochState& init, int t_end) {
  if (t_end < 0) throw std::invalid_argument("t_end must be nonnegative");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(t_end) + 1);
  BlochState state = init;
  for (int t = 0; t <= t_end; ++t) {
    out.push_back(success_from_state(state));
    state = step * state;
  }
  return out;
}

std::vector<double> bloch_trace(const GroverParams& params, const NoiseChannel& channel,
                                int t_end, Placement placement) {
  return bloch_trace(iteration_matrix(params, channel, placement), initial_state(params),
                     t_end);
}

}  // namespace grovernoise
