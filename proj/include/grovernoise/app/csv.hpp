#pragma once

// Plot-ready CSV for success-probability sweeps.
//
// A file holds a data block followed by a blank line and a summary block:
//
//   channel,eta,t,p_analytic,p_oracle,abs_diff
//   ...
//
//   channel,eta,t_m,p_max,source
//   ...
//
// Reals are printed with 12 significant digits in the shortest general form,
// '.' as decimal separator, '\n' line endings. An empty p_analytic / abs_diff
// field means no closed form exists for the channel (amplitude damping).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grovernoise/bloch.hpp"

namespace grovernoise::app {

struct DataRow {
  ChannelKind kind = ChannelKind::Identity;
  double eta = 1.0;  // raw gamma for amplitude damping
  int t = 0;
  std::optional<double> p_analytic;
  double p_oracle = 0.0;
  std::optional<double> abs_diff;
};

struct SummaryRow {
  ChannelKind kind = ChannelKind::Identity;
  double eta = 1.0;
  int t_m = 0;
  double p_max = 0.0;
  std::string source;  // "analytic" or "scan"
};

struct SweepTable {
  std::vector<DataRow> data;
  std::vector<SummaryRow> summary;
};

inline constexpr const char* kDataHeader = "channel,eta,t,p_analytic,p_oracle,abs_diff";
inline constexpr const char* kSummaryHeader = "channel,eta,t_m,p_max,source";

std::string format_number(double value);

void write_csv(std::ostream& out, const SweepTable& table);

/// Throws std::runtime_error on malformed input.
SweepTable parse_csv(std::istream& in);

}  // namespace grovernoise::app
