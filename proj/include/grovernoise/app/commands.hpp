#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grovernoise/app/csv.hpp"
#include "grovernoise/bloch.hpp"

namespace grovernoise::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitIoError = 3;

enum class Subcommand { Sweep, Validate, Threshold, Figure };

/// How the numbers given for the channel are to be read.
enum class ValueForm { Eta, P, Gamma, Alpha };

struct RunConfig {
  Subcommand subcommand = Subcommand::Sweep;
  std::uint64_t n_items = 256;
  std::uint64_t n_targets = 1;
  ChannelKind kind = ChannelKind::BitPhaseFlip;
  ValueForm form = ValueForm::Eta;
  std::vector<double> values{1.0, 0.9, 0.8, 0.7};
  std::optional<int> t_end;  // defaults to 4T
  Placement placement = Placement::PerIteration;
  std::optional<double> p_req;
  std::string output_path;  // empty: stdout (figure: current directory)
};

/// Turns the configured values into channels, sorted by eta descending
/// (raw gamma for amplitude damping). Throws std::invalid_argument when a
/// value form does not fit the channel or a value is out of range.
std::vector<NoiseChannel> resolve_channels(const RunConfig& config);

/// Rows for every (channel, t) plus one summary row per channel. Channels are
/// evaluated in parallel; the row order is fixed by the input order.
SweepTable compute_sweep(const GroverParams& params, const std::vector<NoiseChannel>& channels,
                         int t_end, Placement placement);

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_threshold(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_figure(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grovernoise::app
