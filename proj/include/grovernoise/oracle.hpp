#pragma once

// Density-matrix ground truth for noisy Grover search.
//
// Evolves the full complex 2x2 density matrix over {|chi0>, |chi1>} with
// exact unitaries and Kraus operator sums. Nothing here depends on the
// Bloch recursion or the closed forms.

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grovernoise/bloch.hpp"

namespace grovernoise {

using Complex = std::complex<double>;

/// Complex 2x2 operator, row-major.
struct Operator2 {
  Complex a00{}, a01{}, a10{}, a11{};

  static Operator2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Operator2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static Operator2 pauli_y() { return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}; }
  static Operator2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

  Operator2 adjoint() const {
    return {std::conj(a00), std::conj(a10), std::conj(a01), std::conj(a11)};
  }
  Complex& entry(int index);
  const Complex& entry(int index) const;

  friend Operator2 operator*(const Operator2& a, const Operator2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
  }
  friend Operator2 operator*(Complex s, const Operator2& a) {
    return {s * a.a00, s * a.a01, s * a.a10, s * a.a11};
  }
  friend Operator2 operator+(const Operator2& a, const Operator2& b) {
    return {a.a00 + b.a00, a.a01 + b.a01, a.a10 + b.a10, a.a11 + b.a11};
  }
};

double max_abs_diff(const Operator2& a, const Operator2& b);

class DensityMatrix2 {
 public:
  DensityMatrix2() = default;
  DensityMatrix2(Complex rho00, Complex rho01, Complex rho10, Complex rho11)
      : m_{rho00, rho01, rho10, rho11} {}

  /// |psi><psi| for psi = c0 |chi0> + c1 |chi1> (normalised by the caller).
  static DensityMatrix2 pure(Complex c0, Complex c1);
  /// (I + r . sigma) / 2.
  static DensityMatrix2 from_bloch(const BlochVector3& r);

  Complex rho00() const { return m_.a00; }
  Complex rho01() const { return m_.a01; }
  Complex rho10() const { return m_.a10; }
  Complex rho11() const { return m_.a11; }
  const Operator2& matrix() const { return m_; }

  BlochVector3 to_bloch() const;
  Complex trace() const { return m_.a00 + m_.a11; }
  double purity() const;
  /// Largest |rho10 - conj(rho01)| and imaginary parts on the diagonal.
  double hermiticity_error() const;
  double min_eigenvalue() const;

 private:
  Operator2 m_{};
};

struct KrausSet {
  std::vector<Operator2> ops;

  /// max |sum_k E_k^dagger E_k - I|.
  double completeness_error() const;
};

/// Operator-sum elements of the channel. Operators with zero weight are dropped.
KrausSet kraus_ops(const NoiseChannel& channel);

/// sum_k E_k rho E_k^dagger; throws std::invalid_argument when the set is not
/// trace preserving to 1e-12.
DensityMatrix2 apply_channel(const DensityMatrix2& rho, const KrausSet& kraus);

DensityMatrix2 apply_unitary(const DensityMatrix2& rho, const Operator2& u);

/// Rotation by the Grover angle: [[cos a, -sin a], [sin a, cos a]].
Operator2 grover_unitary(const GroverParams& params);

/// O = diag(1, -1) and R = 2|psi0><psi0| - I.
std::pair<Operator2, Operator2> oracle_and_reflection_unitaries(const GroverParams& params);

DensityMatrix2 initial_density(const GroverParams& params);

struct TracePoint {
  int t = 0;
  double p_success = 0.0;
};

struct SimulationTrace {
  GroverParams params;
  std::optional<NoiseChannel> channel;  // empty for custom Kraus sets
  Placement placement = Placement::PerIteration;
  std::vector<TracePoint> points;
  int argmax_t = 0;
  double p_max = 0.0;
};

/// Per step: PerIteration applies the channel, then O, then R;
/// PerReflection applies channel, O, channel, R. Supports every channel,
/// amplitude damping included. Throws std::invalid_argument if t_end < 0.
SimulationTrace simulate_trace(const GroverParams& params, const NoiseChannel& channel, int t_end,
                               Placement placement);

/// Same recursion with an explicit Kraus set.
SimulationTrace simulate_trace(const GroverParams& params, const KrausSet& kraus, int t_end,
                               Placement placement);

/// First t attaining the maximum; throws std::invalid_argument if empty.
std::pair<int, double> argmax_scan(const SimulationTrace& trace);
std::pair<int, double> argmax_scan(std::span<const double> p_success);

std::vector<double> success_values(const SimulationTrace& trace);

/// max_t |p_density(t) - p_bloch(t)|. Throws std::invalid_argument for
/// amplitude damping.
double bloch_oracle_crosscheck(const GroverParams& params, const NoiseChannel& channel, int t_end,
                               Placement placement);

}  // namespace grovernoise
