#pragma once

// Grover geometry in the reduced Bloch picture.
//
// The search state lives in the two-dimensional subspace spanned by
// |chi0> (uniform superposition of non-targets) and |chi1> (uniform
// superposition of targets). A qubit density matrix over that basis is
// described by its Bloch vector (r_x, r_y, r_z); r_y stays zero for every
// channel handled here, so the reduced dynamics act on (r_x, r_z) only.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace grovernoise {

struct GroverParams {
  std::uint64_t n_items = 0;
  std::uint64_t n_targets = 0;
  double half_angle = 0.0;  // arcsin(sqrt(m / N))
  double angle = 0.0;       // rotation of the state per iteration
};

/// Builds the search instance; throws std::invalid_argument unless
/// 1 <= n_targets <= n_items and n_items >= 2.
GroverParams grover_params(std::uint64_t n_items, std::uint64_t n_targets);

/// sin^2((2t + 1) * angle / 2).
double ideal_success_probability(const GroverParams& params, int t);

/// floor(pi/4 * sqrt(N/m)).
int optimal_iterations(const GroverParams& params);

/// 2x2 real matrix acting on the column (r_x, r_z).
struct Mat2 {
  double xx = 0.0, xz = 0.0;
  double zx = 0.0, zz = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diagonal(double x, double z) { return {x, 0.0, 0.0, z}; }

  double det() const { return xx * zz - xz * zx; }
  double trace() const { return xx + zz; }
  Mat2 transposed() const { return {xx, zx, xz, zz}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.xx * b.xx + a.xz * b.zx, a.xx * b.xz + a.xz * b.zz,
            a.zx * b.xx + a.zz * b.zx, a.zx * b.xz + a.zz * b.zz};
  }
  friend Mat2 operator*(double s, const Mat2& a) {
    return {s * a.xx, s * a.xz, s * a.zx, s * a.zz};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

double max_abs_diff(const Mat2& a, const Mat2& b);

struct BlochState {
  double r_x = 0.0;
  double r_z = 1.0;

  friend bool operator==(const BlochState&, const BlochState&) = default;
};

inline BlochState operator*(const Mat2& m, const BlochState& s) {
  return {m.xx * s.r_x + m.xz * s.r_z, m.zx * s.r_x + m.zz * s.r_z};
}

struct BlochVector3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

enum class ChannelKind {
  BitFlip,
  PhaseFlip,
  BitPhaseFlip,
  Depolarizing,
  PhaseDamping,
  AmplitudeDamping,
  Identity,
};

std::string_view to_string(ChannelKind kind);

/// Short CLI tag: bf, pf, bpf, dp, pd, ad, id.
std::string_view short_name(ChannelKind kind);

/// Inverse of short_name; throws std::invalid_argument on unknown tags.
ChannelKind parse_channel_kind(std::string_view tag);

/// True for every kind whose reduced Bloch action is diagonal in (r_x, r_z).
bool is_diagonalizable(ChannelKind kind);

/// A single-qubit noise channel with its physical parameter and the
/// effective contraction factor eta. Both are stored so that channels built
/// from the same eta compare exactly, whatever their physical parameter.
class NoiseChannel {
 public:
  /// Flip channels take the no-flip probability p in [1/2, 1].
  static NoiseChannel bit_flip(double p);
  static NoiseChannel phase_flip(double p);
  static NoiseChannel bit_phase_flip(double p);
  /// alpha in [0, 1]: probability of replacement by I/2.
  static NoiseChannel depolarizing(double alpha);
  /// gamma in [0, 1]; gamma = 1 leaves the state untouched.
  static NoiseChannel phase_damping(double gamma);
  static NoiseChannel amplitude_damping(double gamma);
  static NoiseChannel identity();

  /// Builds a channel of the given kind with contraction eta in [0, 1].
  /// Not available for AmplitudeDamping; Identity requires eta == 1.
  static NoiseChannel from_eta(ChannelKind kind, double eta);

  ChannelKind kind() const { return kind_; }
  double raw_param() const { return raw_param_; }
  /// Throws std::logic_error for AmplitudeDamping.
  double eta() const;

  friend bool operator==(const NoiseChannel&, const NoiseChannel&) = default;

 private:
  NoiseChannel(ChannelKind kind, double raw_param, double eta)
      : kind_(kind), raw_param_(raw_param), eta_(eta) {}

  ChannelKind kind_;
  double raw_param_;
  double eta_;
};

double effective_eta(const NoiseChannel& channel);

/// Affine action r -> linear * r + offset on the full Bloch vector.
struct AffineBlochMap {
  std::array<std::array<double, 3>, 3> linear{};
  BlochVector3 offset{};

  BlochVector3 apply(const BlochVector3& r) const;
  bool is_diagonal() const;
};

AffineBlochMap noise_bloch_map(const NoiseChannel& channel);

/// Oracle reflection about |chi0>, as a map on (r_x, r_z).
Mat2 oracle_matrix();

/// Reflection about the initial state.
Mat2 reflection_matrix(const GroverParams& params);

/// One noiseless iteration, reflection_matrix * oracle_matrix.
Mat2 grover_matrix(const GroverParams& params);

/// (r_x, r_z) restriction of the channel's Bloch map. Throws
/// std::invalid_argument for AmplitudeDamping.
Mat2 reduced_noise_matrix(const NoiseChannel& channel);

enum class Placement {
  PerIteration,   // R . O . E
  PerReflection,  // R . E . O . E
};

std::string_view to_string(Placement placement);

/// Composes one noisy iteration from its parts.
Mat2 iteration_matrix(const Mat2& reflection, const Mat2& oracle, const Mat2& noise,
                      Placement placement);

Mat2 iteration_matrix(const GroverParams& params, const NoiseChannel& channel,
                      Placement placement);

/// r(0) = (sin angle, cos angle), the Bloch vector of the uniform superposition.
BlochState initial_state(const GroverParams& params);

BlochState noisy_grover_step(const BlochState& state, const GroverParams& params,
                             const NoiseChannel& channel, Placement placement);

/// (1 - r_z) / 2, clamped to [0, 1]. Throws std::domain_error when
/// |r_z| > 1 + 1e-9.
double success_from_state(const BlochState& state);

/// Success probabilities for t = 0..t_end from repeated application of step.
std::vector<double> bloch_trace(const Mat2& step, const BlochState& init, int t_end);

std::vector<double> bloch_trace(const GroverParams& params, const NoiseChannel& channel,
                                int t_end, Placement placement);

}  // namespace grovernoise
