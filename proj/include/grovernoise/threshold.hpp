#pragma once

// Noise thresholds: the weakest channel strength (smallest eta) that still
// reaches a requested success probability, and the query-count comparison
// against unstructured classical search (N/2 queries for success 1/2).

#include <stdexcept>
#include <string>
#include <vector>

#include "grovernoise/bloch.hpp"

namespace grovernoise {

/// The requested probability is at or above the noiseless maximum.
class NoThresholdExists : public std::domain_error {
 public:
  NoThresholdExists(double requested, double ideal_max);
  double ideal_max() const { return ideal_max_; }

 private:
  double ideal_max_;
};

/// Every eta in (0, 1] meets the request.
class TrivialRequest : public std::domain_error {
 public:
  explicit TrivialRequest(double requested);
};

/// The channel never reaches the requested probability within the horizon.
class UnreachableTarget : public std::domain_error {
 public:
  UnreachableTarget(double requested, int best_t, double best_p);
  int best_t() const { return best_t_; }
  double best_p() const { return best_p_; }

 private:
  int best_t_;
  double best_p_;
};

struct ThresholdResult {
  double eta_star = 1.0;
  int t_at_threshold = 0;
  double p_requested = 0.0;
  double p_achieved = 0.0;
  ChannelKind channel_kind = ChannelKind::BitPhaseFlip;
  double classical_queries = 0.0;  // N / 2
  int quantum_queries = 0;
};

struct SpeedupReport {
  ThresholdResult result;
  bool quantum_advantage = false;
};

/// Iterations scanned when searching for the maximum: max(2T, 1).
int threshold_horizon(const GroverParams& params);

struct ScanMaximum {
  int t = 0;
  double p = 0.0;
};

/// Maximum of the density-matrix trace over t in [0, horizon] for the
/// channel of the given kind at contraction eta (eta = 0 allowed).
ScanMaximum scan_maximum(const GroverParams& params, ChannelKind kind, double eta, int horizon);

/// Scan maxima on eta = 0.05, 0.10, ..., 1.00. Throws std::logic_error if
/// the sequence decreases anywhere.
std::vector<std::pair<double, double>> monotonicity_audit(const GroverParams& params,
                                                          ChannelKind kind);

/// Smallest eta (to 1e-6) whose scan maximum over [0, 2T] reaches
/// p_requested. Bisection; every step checks that the midpoint value sits
/// between the bracket values.
ThresholdResult eta_threshold(const GroverParams& params, ChannelKind kind, double p_requested);

/// First t with p_success(t) >= p_requested under the channel, scanned up
/// to max(4T, 4), against the classical N/2 baseline.
SpeedupReport speedup_report(const GroverParams& params, const NoiseChannel& channel,
                             double p_requested);

/// Smallest t with cos((2t + 1) angle) <= 0. From there on the bit-phase
/// flip success probability is at least 1/2 whatever eta is.
int half_way_iterations(const GroverParams& params);

}  // namespace grovernoise
