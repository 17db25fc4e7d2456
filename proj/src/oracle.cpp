#include "grovernoise/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grovernoise {

Complex& Operator2::entry(int index) {
  switch (index) {
    case 0: return a00;
    case 1: return a01;
    case 2: return a10;
    case 3: return a11;
  }
  throw std::out_of_range("operator entry index must be 0..3");
}

const Complex& Operator2::entry(int index) const {
  return const_cast<Operator2*>(this)->entry(index);
}

double max_abs_diff(const Operator2& a, const Operator2& b) {
  return std::max({std::abs(a.a00 - b.a00), std::abs(a.a01 - b.a01), std::abs(a.a10 - b.a10),
                   std::abs(a.a11 - b.a11)});
}

DensityMatrix2 DensityMatrix2::pure(Complex c0, Complex c1) {
  return {c0 * std::conj(c0), c0 * std::conj(c1), c1 * std::conj(c0), c1 * std::conj(c1)};
}

DensityMatrix2 DensityMatrix2::from_bloch(const BlochVector3& r) {
  return {0.5 * (1.0 + r.z), Complex(0.5 * r.x, -0.5 * r.y), Complex(0.5 * r.x, 0.5 * r.y),
          0.5 * (1.0 - r.z)};
}

BlochVector3 DensityMatrix2::to_bloch() const {
  const Complex off = 0.5 * (m_.a01 + std::conj(m_.a10));
  return {2.0 * off.real(), -2.0 * off.imag(), (m_.a00 - m_.a11).real()};
}

double DensityMatrix2::purity() const {
  return (m_ * m_).a00.real() + (m_ * m_).a11.real();
}

double DensityMatrix2::hermiticity_error() const {
  return std::max({std::abs(m_.a10 - std::conj(m_.a01)), std::abs(m_.a00.imag()),
                   std::abs(m_.a11.imag())});
}

double DensityMatrix2::min_eigenvalue() const {
  // Hermitian part only; eigenvalues are mean -/+ sqrt(half_diff^2 + |rho01|^2).
  const double a = m_.a00.real();
  const double d = m_.a11.real();
  const Complex off = 0.5 * (m_.a01 + std::conj(m_.a10));
  const double mean = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  return mean - std::sqrt(half_diff * half_diff + std::norm(off));
}

double KrausSet::completeness_error() const {
  Operator2 sum{};
  for (const auto& e : ops) sum = sum + e.adjoint() * e;
  return max_abs_diff(sum, Operator2::identity());
}

KrausSet kraus_ops(const NoiseChannel& channel) {
  KrausSet set;
  auto push = [&set](double weight, const Operator2& op) {
    if (weight != 0.0) set.ops.push_back(Complex(weight) * op);
  };
  const double q = channel.raw_param();
  switch (channel.kind()) {
    case ChannelKind::BitFlip:
      push(std::sqrt(q), Operator2::identity());
      push(std::sqrt(1.0 - q), Operator2::pauli_x());
      break;
    case ChannelKind::PhaseFlip:
      push(std::sqrt(q), Operator2::identity());
      push(std::sqrt(1.0 - q), Operator2::pauli_z());
      break;
    case ChannelKind::BitPhaseFlip:
      push(std::sqrt(q), Operator2::identity());
      push(std::sqrt(1.0 - q), Operator2::pauli_y());
      break;
    case ChannelKind::Depolarizing:
      push(std::sqrt(1.0 - 0.75 * q), Operator2::identity());
      push(std::sqrt(0.25 * q), Operator2::pauli_x());
      push(std::sqrt(0.25 * q), Operator2::pauli_y());
      push(std::sqrt(0.25 * q), Operator2::pauli_z());
      break;
    case ChannelKind::PhaseDamping:
      set.ops.push_back({1.0, 0.0, 0.0, std::sqrt(q)});
      if (q != 1.0) set.ops.push_back({0.0, 0.0, 0.0, std::sqrt(1.0 - q)});
      break;
    case ChannelKind::AmplitudeDamping:
      set.ops.push_back({1.0, 0.0, 0.0, std::sqrt(q)});
      if (q != 1.0) set.ops.push_back({0.0, std::sqrt(1.0 - q), 0.0, 0.0});
      break;
    case ChannelKind::Identity:
      set.ops.push_back(Operator2::identity());
      break;
  }
  return set;
}

DensityMatrix2 apply_channel(const DensityMatrix2& rho, const KrausSet& kraus) {
  if (!(kraus.completeness_error() <= 1e-12)) {
    throw std::invalid_argument("Kraus set is not trace preserving");
  }
  Operator2 out{};
  for (const auto& e : kraus.ops) out = out + e * rho.matrix() * e.adjoint();
  return {out.a00, out.a01, out.a10, out.a11};
}

DensityMatrix2 apply_unitary(const DensityMatrix2& rho, const Operator2& u) {
  const Operator2 out = u * rho.matrix() * u.adjoint();
  return {out.a00, out.a01, out.a10, out.a11};
}

Operator2 grover_unitary(const GroverParams& params) {
  const double c = std::cos(params.angle);
  const double s = std::sin(params.angle);
  return {c, -s, s, c};
}

std::pair<Operator2, Operator2> oracle_and_reflection_unitaries(const GroverParams& params) {
  const Operator2 oracle{1.0, 0.0, 0.0, -1.0};
  const double c = std::cos(params.half_angle);
  const double s = std::sin(params.half_angle);
  // 2|psi0><psi0| - I with psi0 = (cos h, sin h).
  const Operator2 reflection{2.0 * c * c - 1.0, 2.0 * c * s, 2.0 * c * s, 2.0 * s * s - 1.0};
  return {oracle, reflection};
}

DensityMatrix2 initial_density(const GroverParams& params) {
  return DensityMatrix2::pure(std::cos(params.half_angle), std::sin(params.half_angle));
}

namespace {

SimulationTrace run_trace(const GroverParams& params, const KrausSet& kraus, int t_end,
                          Placement placement) {
  if (t_end < 0) throw std::invalid_argument("t_end must be nonnegative");
  if (!(kraus.completeness_error() <= 1e-12)) {
    throw std::invalid_argument("Kraus set is not trace preserving");
  }
  const auto [oracle, reflection] = oracle_and_reflection_unitaries(params);
  SimulationTrace trace;
  trace.params = params;
  trace.placement = placement;
  trace.points.reserve(static_cast<std::size_t>(t_end) + 1);
  DensityMatrix2 rho = initial_density(params);
  for (int t = 0; t <= t_end; ++t) {
    const double p = rho.rho11().real();
    if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
      throw std::domain_error("density matrix population left [0, 1]");
    }
    trace.points.push_back({t, std::clamp(p, 0.0, 1.0)});
    if (t == t_end) break;
    rho = apply_channel(rho, kraus);
    rho = apply_unitary(rho, oracle);
    if (placement == Placement::PerReflection) rho = apply_channel(rho, kraus);
    rho = apply_unitary(rho, reflection);
  }
  const auto [best_t, best_p] = argmax_scan(trace);
  trace.argmax_t = best_t;
  trace.p_max = best_p;
  return trace;
}

}  // namespace

SimulationTrace simulate_trace(const GroverParams& params, const NoiseChannel& channel, int t_end,
                               Placement placement) {
  auto trace = run_trace(params, kraus_ops(channel), t_end, placement);
  trace.channel = channel;
  return trace;
}

SimulationTrace simulate_trace(const GroverParams& params, const KrausSet& kraus, int t_end,
                               Placement placement) {
  return run_trace(params, kraus, t_end, placement);
}

std::pair<int, double> argmax_scan(std::span<const double> p_success) {
  if (p_success.empty()) throw std::invalid_argument("argmax of an empty trace");
  std::size_t best = 0;
  for (std::size_t i = 1; i < p_success.size(); ++i) {
    if (p_success[i] > p_success[best]) best = i;
  }
  return {static_cast<int>(best), p_success[best]};
}

std::pair<int, double> argmax_scan(const SimulationTrace& trace) {
  if (trace.points.empty()) throw std::invalid_argument("argmax of an empty trace");
  const TracePoint* best = &trace.points.front();
  for (const auto& point : trace.points) {
    if (point.p_success > best->p_success) best = &point;
  }
  return {best->t, best->p_success};
}

std::vector<double> success_values(const SimulationTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.points.size());
  for (const auto& point : trace.points) out.push_back(point.p_success);
  return out;
}

double bloch_oracle_crosscheck(const GroverParams& params, const NoiseChannel& channel, int t_end,
                               Placement placement) {
  if (!is_diagonalizable(channel.kind())) {
    throw std::invalid_argument("amplitude damping has no reduced Bloch recursion");
  }
  const auto density = simulate_trace(params, channel, t_end, placement);
  const auto bloch = bloch_trace(params, channel, t_end, placement);
  double worst = 0.0;
  for (std::size_t i = 0; i < bloch.size(); ++i) {
    worst = std::max(worst, std::abs(density.points[i].p_success - bloch[i]));
  }
  return worst;
}

}  // namespace grovernoise
