#pragma once

// Closed-form success probabilities for Grover search under the
// diagonalizable channels.
//
// Phase flip (and phase damping) and bit flip share the iteration-matrix
// spectrum lambda = A+ +/- iB with |lambda| = sqrt(eta); bit-phase flip
// (and depolarizing) scales the noiseless rotation by eta. All t are integer
// iteration counts.

#include "grovernoise/bloch.hpp"

namespace grovernoise {

enum class Regime { Oscillatory, Critical, Overdamped };

std::string_view to_string(Regime regime);

struct SpectralParams {
  double a_plus = 0.0;   // (1 + eta)/2 * cos(2 angle)
  double a_minus = 0.0;  // (1 - eta)/2 * cos(2 angle)
  double b = 0.0;        // sqrt(|eta - a_plus^2|)
  double phi = 0.0;      // eigenvalue argument; zero outside the oscillatory regime
  double eta = 0.0;
  Regime regime = Regime::Oscillatory;
};

/// Throws std::invalid_argument unless 0 < eta <= 1.
SpectralParams spectral_params(const GroverParams& params, double eta);

struct EnvelopeParams {
  double r_amp = 0.0;  // hypot(a_minus, b)
  double delta = 0.0;  // atan2(b, a_minus)
};

EnvelopeParams envelope_params(const SpectralParams& spectral);

/// Below this |B| / sqrt(eta) the closed forms hand over to matrix powers.
inline constexpr double kSmallB = 1e-7;

/// Largest m/N for which the small-angle envelopes are accepted.
inline constexpr double kEnvelopeMaxFraction = 1.0 / 64.0;

double phase_flip_probability(const GroverParams& params, double eta, int t);
double bit_flip_probability(const GroverParams& params, double eta, int t);
double bit_phase_flip_probability(const GroverParams& params, double eta, int t);

/// Small-angle approximations, valid for m << N in the oscillatory regime.
/// Throw std::domain_error when m/N > 1/64 or the spectrum is not oscillatory.
double phase_flip_envelope(const GroverParams& params, double eta, int t);
double bit_flip_envelope(const GroverParams& params, double eta, int t);

/// Bound on |P(t) - 1/2| used for decay checks: eta^(t/2) * r / (2B) for
/// phase and bit flip (same domain as the envelopes), eta^t / 2 for
/// bit-phase flip and depolarizing.
double decay_envelope(const GroverParams& params, ChannelKind kind, double eta, int t);

/// t-th power of a 2x2 real matrix. Uses the closed-form spectral
/// expansion when the eigenvalues are well separated and repeated squaring
/// when they are (nearly) degenerate.
Mat2 matrix_power(const Mat2& m, int t);
Mat2 matrix_power_by_squaring(Mat2 m, int t);

/// Success probability from the t-th power of the noisy iteration matrix.
/// Throws std::invalid_argument for AmplitudeDamping.
double matrix_power_probability(const GroverParams& params, const NoiseChannel& channel,
                                int t, Placement placement);

/// Dispatches to the closed form that matches the channel kind. Under
/// PerReflection placement the channel acts twice per iteration, which is
/// the PerIteration closed form evaluated at eta^2.
double closed_form_probability(const GroverParams& params, const NoiseChannel& channel,
                               int t, Placement placement);

/// floor((atan(ln(eta) / (2 angle)) + pi) / (2 angle)) for bit-phase flip noise.
int t_max(const GroverParams& params, double eta);

struct Extremum {
  int t = 0;
  double p = 0.0;
};

/// Best bit-phase-flip success probability in a +/-2 window around t_max.
Extremum bpf_extremum(const GroverParams& params, double eta);

/// Maximum success probability under bit-phase flip noise.
double p_max(const GroverParams& params, double eta);

enum class Ordering { NoisyHigher, Equal, NoisyLower };

std::string_view to_string(Ordering ordering);

/// Sign of P_bp(t) - P_ideal(t), read off from cos((2t + 1) angle).
/// |cos| <= 1e-12 counts as Equal.
Ordering bpf_vs_ideal_ordering(const GroverParams& params, double eta, int t);

}  // namespace grovernoise
