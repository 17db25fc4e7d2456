#include "grovernoise/threshold.hpp"

#include <algorithm>
#include <cmath>

#include "grovernoise/oracle.hpp"

namespace grovernoise {

NoThresholdExists::NoThresholdExists(double requested, double ideal_max)
    : std::domain_error("no threshold: requested " + std::to_string(requested) +
                        " is not below the noiseless maximum " + std::to_string(ideal_max)),
      ideal_max_(ideal_max) {}

TrivialRequest::TrivialRequest(double requested)
    : std::domain_error("trivial request: " + std::to_string(requested) +
                        " is reached for every eta") {}

UnreachableTarget::UnreachableTarget(double requested, int best_t, double best_p)
    : std::domain_error("unreachable: requested " + std::to_string(requested) +
                        ", best is " + std::to_string(best_p) + " at t = " +
                        std::to_string(best_t)),
      best_t_(best_t),
      best_p_(best_p) {}

int threshold_horizon(const GroverParams& params) {
  return std::max(2 * optimal_iterations(params), 1);
}

ScanMaximum scan_maximum(const GroverParams& params, ChannelKind kind, double eta, int horizon) {
  const auto trace =
      simulate_trace(params, NoiseChannel::from_eta(kind, eta), horizon, Placement::PerIteration);
  return {trace.argmax_t, trace.p_max};
}

std::vector<std::pair<double, double>> monotonicity_audit(const GroverParams& params,
                                                          ChannelKind kind) {
  const int horizon = threshold_horizon(params);
  std::vector<std::pair<double, double>> grid;
  for (int i = 1; i <= 20; ++i) {
    const double eta = 0.05 * i;
    grid.emplace_back(eta, scan_maximum(params, kind, eta, horizon).p);
    if (grid.size() > 1 && grid.back().second < grid[grid.size() - 2].second) {
      throw std::logic_error("scan maximum decreases between eta = " +
                             std::to_string(grid[grid.size() - 2].first) + " and " +
                             std::to_string(eta));
    }
  }
  return grid;
}

ThresholdResult eta_threshold(const GroverParams& params, ChannelKind kind, double p_requested) {
  if (kind == ChannelKind::AmplitudeDamping || kind == ChannelKind::Identity) {
    throw std::invalid_argument("threshold needs a channel with a tunable eta");
  }
  if (p_requested <= 0.5) throw TrivialRequest(p_requested);

  const int horizon = threshold_horizon(params);
  const auto ideal = scan_maximum(params, kind, 1.0, horizon);
  if (p_requested >= ideal.p) throw NoThresholdExists(p_requested, ideal.p);

  monotonicity_audit(params, kind);

  double lo = 0.0;
  double hi = 1.0;
  double f_lo = scan_maximum(params, kind, lo, horizon).p;
  ScanMaximum at_hi = ideal;
  if (f_lo >= p_requested) throw TrivialRequest(p_requested);

  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    const auto at_mid = scan_maximum(params, kind, mid, horizon);
    if (at_mid.p < f_lo || at_mid.p > at_hi.p) {
      throw std::logic_error("scan maximum is not monotone in eta near " + std::to_string(mid));
    }
    if (at_mid.p >= p_requested) {
      hi = mid;
      at_hi = at_mid;
    } else {
      lo = mid;
      f_lo = at_mid.p;
    }
  }

  ThresholdResult result;
  result.eta_star = hi;
  result.t_at_threshold = at_hi.t;
  result.p_requested = p_requested;
  result.p_achieved = at_hi.p;
  result.channel_kind = kind;
  result.classical_queries = 0.5 * static_cast<double>(params.n_items);
  result.quantum_queries = at_hi.t;
  return result;
}

SpeedupReport speedup_report(const GroverParams& params, const NoiseChannel& channel,
                             double p_requested) {
  const int horizon = std::max(4 * optimal_iterations(params), 4);
  const auto trace = simulate_trace(params, channel, horizon, Placement::PerIteration);
  SpeedupReport report;
  auto& r = report.result;
  r.p_requested = p_requested;
  r.channel_kind = channel.kind();
  r.classical_queries = 0.5 * static_cast<double>(params.n_items);
  r.eta_star = channel.kind() == ChannelKind::AmplitudeDamping ? channel.raw_param() : channel.eta();
  const auto hit = std::find_if(trace.points.begin(), trace.points.end(),
                                [&](const TracePoint& pt) { return pt.p_success >= p_requested; });
  if (hit == trace.points.end()) {
    throw UnreachableTarget(p_requested, trace.argmax_t, trace.p_max);
  }
  r.t_at_threshold = hit->t;
  r.quantum_queries = hit->t;
  r.p_achieved = hit->p_success;
  report.quantum_advantage = static_cast<double>(r.quantum_queries) < r.classical_queries;
  return report;
}

int half_way_iterations(const GroverParams& params) {
  int t = 0;
  while (std::cos((2.0 * t + 1.0) * params.angle) > 0.0) ++t;
  return t;
}

}  // namespace grovernoise
