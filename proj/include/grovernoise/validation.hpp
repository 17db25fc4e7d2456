#pragma once

// Grid checks that tie the three evaluation routes together: closed forms,
// reduced Bloch recursion and the density-matrix oracle.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grovernoise/bloch.hpp"
#include "grovernoise/oracle.hpp"

namespace grovernoise {

struct ValidationGrid {
  std::vector<ChannelKind> kinds{ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                                 ChannelKind::BitPhaseFlip, ChannelKind::PhaseDamping,
                                 ChannelKind::Depolarizing};
  std::vector<double> etas{0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 1.0};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> instances{
      {4, 1}, {16, 1}, {64, 1}, {256, 1}, {256, 4}, {1024, 1}};

  /// Last iteration checked for an instance: 4T.
  static int t_end(const GroverParams& params);
};

/// The pieces of the model under test. Tests swap in perturbed versions to
/// confirm the checks notice.
struct Model {
  std::function<Mat2(const GroverParams&)> grover = grover_matrix;
  std::function<KrausSet(const NoiseChannel&)> kraus = kraus_ops;
};

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status status);

struct PropertyResult {
  std::string name;
  Status status = Status::Pass;
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;

  bool ok() const { return status != Status::Fail; }
};

/// |closed form - Kraus oracle| over kinds x etas x instances x t in [0, 4T].
PropertyResult check_oracle_equivalence(const ValidationGrid& grid, const Model& model = {});

/// PerReflection at sqrt(eta) against PerIteration at eta, on the Bloch
/// recursion, on the oracle, and across the two.
PropertyResult check_reflection_equivalence(const ValidationGrid& grid, const Model& model = {});

/// Phase flip vs phase damping and bit-phase flip vs depolarizing share the
/// reduced noise matrix exactly.
PropertyResult check_channel_aliasing(const ValidationGrid& grid);

/// Bit-phase flip argmax over [0, 2T] within one iteration of t_max.
PropertyResult check_extremum_consistency(const ValidationGrid& grid);

/// Random (channel, rho) pairs, amplitude damping included: trace,
/// hermiticity and positivity after the channel.
PropertyResult check_cptp(std::size_t samples, std::uint64_t seed);

/// Kraus action and Bloch map agree on random density matrices.
PropertyResult check_kraus_bloch_dictionary(std::size_t samples_per_channel, std::uint64_t seed);

/// Random density matrix with Bloch vector uniform in the unit ball.
DensityMatrix2 random_density(std::mt19937_64& rng);

/// Random channel of any kind with a valid parameter.
NoiseChannel random_channel(std::mt19937_64& rng);

struct ValidationOptions {
  ValidationGrid grid{};
  Model model{};
  bool include_amplitude_damping = false;
  std::size_t cptp_samples = 10000;
  std::uint64_t seed = 20240521;
};

std::vector<PropertyResult> run_validation(const ValidationOptions& options);

}  // namespace grovernoise
