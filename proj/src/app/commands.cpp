#include "grovernoise/app/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "grovernoise/analytic.hpp"
#include "grovernoise/kernels/bloch_batch.hpp"
#include "grovernoise/oracle.hpp"
#include "grovernoise/threshold.hpp"
#include "grovernoise/validation.hpp"

namespace grovernoise::app {

namespace {

NoiseChannel make_channel(ChannelKind kind, ValueForm form, double value) {
  switch (form) {
    case ValueForm::Eta:
      if (kind == ChannelKind::AmplitudeDamping) {
        throw std::invalid_argument("amplitude damping takes --gamma, not --eta");
      }
      return NoiseChannel::from_eta(kind, value);
    case ValueForm::P:
      if (kind == ChannelKind::BitFlip) return NoiseChannel::bit_flip(value);
      if (kind == ChannelKind::PhaseFlip) return NoiseChannel::phase_flip(value);
      if (kind == ChannelKind::BitPhaseFlip) return NoiseChannel::bit_phase_flip(value);
      throw std::invalid_argument("--p applies to flip channels only");
    case ValueForm::Gamma:
      if (kind == ChannelKind::PhaseDamping) return NoiseChannel::phase_damping(value);
      if (kind == ChannelKind::AmplitudeDamping) return NoiseChannel::amplitude_damping(value);
      throw std::invalid_argument("--gamma applies to pd and ad only");
    case ValueForm::Alpha:
      if (kind == ChannelKind::Depolarizing) return NoiseChannel::depolarizing(value);
      throw std::invalid_argument("--alpha applies to dp only");
  }
  throw std::invalid_argument("unknown value form");
}

double sort_key(const NoiseChannel& channel) {
  return channel.kind() == ChannelKind::AmplitudeDamping ? channel.raw_param() : channel.eta();
}

int default_t_end(const GroverParams& params) {
  return std::max(4 * optimal_iterations(params), 1);
}

int resolve_t_end(const RunConfig& config, const GroverParams& params) {
  if (!config.t_end) return default_t_end(params);
  if (*config.t_end < 1) throw std::invalid_argument("--t-end must be at least 1");
  return *config.t_end;
}

SummaryRow summarize(const GroverParams& params, const NoiseChannel& channel,
                     Placement placement, const SimulationTrace& trace) {
  SummaryRow row;
  row.kind = channel.kind();
  row.eta = sort_key(channel);
  const bool bpf_like =
      channel.kind() == ChannelKind::BitPhaseFlip || channel.kind() == ChannelKind::Depolarizing;
  if (bpf_like) {
    const double eta = channel.eta();
    const double eta_eff = placement == Placement::PerReflection ? eta * eta : eta;
    if (eta_eff > 0.0) {
      row.t_m = t_max(params, eta_eff);
      row.p_max = p_max(params, eta_eff);
      row.source = "analytic";
      return row;
    }
  }
  row.t_m = trace.argmax_t;
  row.p_max = trace.p_max;
  row.source = "scan";
  return row;
}

struct ChannelBlock {
  std::vector<DataRow> rows;
  SummaryRow summary;
};

ChannelBlock evaluate_channel(const GroverParams& params, const NoiseChannel& channel, int t_end,
                              Placement placement) {
  ChannelBlock block;
  const auto trace = simulate_trace(params, channel, t_end, placement);
  const bool analytic = is_diagonalizable(channel.kind());
  block.rows.reserve(trace.points.size());
  for (const auto& point : trace.points) {
    DataRow row;
    row.kind = channel.kind();
    row.eta = sort_key(channel);
    row.t = point.t;
    row.p_oracle = point.p_success;
    if (analytic) {
      row.p_analytic = closed_form_probability(params, channel, point.t, placement);
      row.abs_diff = std::abs(*row.p_analytic - point.p_success);
    }
    block.rows.push_back(row);
  }
  block.summary = summarize(params, channel, placement, trace);
  return block;
}

template <typename Fn>
int write_output(const std::string& path, std::ostream& out, std::ostream& err, Fn&& write) {
  if (path.empty()) {
    write(out);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kExitIoError;
  }
  write(file);
  file.flush();
  if (!file) {
    err << "error: write to '" << path << "' failed\n";
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace

std::vector<NoiseChannel> resolve_channels(const RunConfig& config) {
  std::vector<NoiseChannel> channels;
  if (config.kind == ChannelKind::Identity) {
    channels.push_back(NoiseChannel::identity());
    return channels;
  }
  if (config.values.empty()) throw std::invalid_argument("no channel parameter given");
  for (double value : config.values) {
    auto channel = make_channel(config.kind, config.form, value);
    if (channel.kind() != ChannelKind::AmplitudeDamping && !(channel.eta() > 0.0)) {
      throw std::invalid_argument("eta must lie in (0, 1]");
    }
    channels.push_back(channel);
  }
  std::stable_sort(channels.begin(), channels.end(), [](const auto& a, const auto& b) {
    return sort_key(a) > sort_key(b);
  });
  return channels;
}

SweepTable compute_sweep(const GroverParams& params, const std::vector<NoiseChannel>& channels,
                         int t_end, Placement placement) {
  std::vector<std::future<ChannelBlock>> jobs;
  jobs.reserve(channels.size());
  for (const auto& channel : channels) {
    jobs.push_back(std::async(std::launch::async, evaluate_channel, params, channel, t_end,
                              placement));
  }
  SweepTable table;
  for (auto& job : jobs) {
    auto block = job.get();
    table.data.insert(table.data.end(), block.rows.begin(), block.rows.end());
    table.summary.push_back(block.summary);
  }
  return table;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  GroverParams params;
  std::vector<NoiseChannel> channels;
  int t_end = 0;
  try {
    params = grover_params(config.n_items, config.n_targets);
    channels = resolve_channels(config);
    t_end = resolve_t_end(config, params);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  const auto table = compute_sweep(params, channels, t_end, config.placement);
  return write_output(config.output_path, out, err,
                      [&](std::ostream& os) { write_csv(os, table); });
}

int run_validate(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  ValidationOptions options;
  options.include_amplitude_damping = config.kind == ChannelKind::AmplitudeDamping;
  const auto results = run_validation(options);
  out << "simd: " << kernels::to_string(kernels::detect_simd_level()) << '\n';
  bool ok = true;
  for (const auto& r : results) {
    out << std::left << std::setw(30) << r.name << std::setw(8) << to_string(r.status);
    if (r.status != Status::Skipped) {
      out << " worst=" << std::setprecision(3) << r.worst << " tol=" << r.tolerance;
    }
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << '\n';
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitInvariantFailure;
}

int run_threshold(const RunConfig& config, std::ostream& out, std::ostream& err) {
  GroverParams params;
  try {
    params = grover_params(config.n_items, config.n_targets);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  if (!config.p_req) {
    err << "error: threshold needs --p-req\n";
    return kExitInvalidArguments;
  }
  const double p_req = *config.p_req;
  const auto kind = config.kind;
  const bool bpf_like = kind == ChannelKind::BitPhaseFlip || kind == ChannelKind::Depolarizing;

  ThresholdResult result;
  try {
    result = eta_threshold(params, kind, p_req);
  } catch (const TrivialRequest&) {
    out << "trivial: any eta suffices for p_req = " << p_req << '\n';
    if (bpf_like) {
      const int t_half = half_way_iterations(params);
      out << "quantum_queries = " << t_half << " (P >= 1/2 at this t for every eta), "
          << "classical_queries = " << format_number(0.5 * static_cast<double>(params.n_items))
          << '\n';
    }
    return kExitOk;
  } catch (const NoThresholdExists& e) {
    err << "NoThresholdExists: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::logic_error& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kExitInvariantFailure;
  }

  const int horizon = threshold_horizon(params);
  const double below = std::max(result.eta_star - 1e-6, 0.0);
  const auto check_below = scan_maximum(params, kind, below, horizon);
  const bool advantage = static_cast<double>(result.quantum_queries) < result.classical_queries;

  out << std::fixed << std::setprecision(6);
  out << "channel: " << short_name(kind) << "  N=" << params.n_items
      << "  m=" << params.n_targets << "  p_req=" << p_req << '\n';
  out << "eta*: " << result.eta_star << '\n';
  out << "t at threshold: " << result.t_at_threshold << '\n';
  out << "p achieved: " << std::setprecision(9) << result.p_achieved << '\n';
  out << "scan max at eta* - 1e-6: " << check_below.p << '\n';
  out << std::setprecision(1) << "quantum queries: " << result.quantum_queries
      << "  classical queries (N/2): " << result.classical_queries
      << "  advantage: " << (advantage ? "yes" : "no") << '\n';
  out << std::defaultfloat;

  return write_output(config.output_path, out, err, [&](std::ostream& os) {
    os << "channel,n,m,p_req,eta_star,t,p_achieved,quantum_queries,classical_queries,advantage\n"
       << short_name(kind) << ',' << params.n_items << ',' << params.n_targets << ','
       << format_number(p_req) << ',' << format_number(result.eta_star) << ','
       << result.t_at_threshold << ',' << format_number(result.p_achieved) << ','
       << result.quantum_queries << ',' << format_number(result.classical_queries) << ','
       << (advantage ? 1 : 0) << '\n';
  });
}

int run_figure(const RunConfig& config, std::ostream& out, std::ostream& err) {
  GroverParams params;
  int t_end = 0;
  try {
    if (config.form != ValueForm::Eta) {
      throw std::invalid_argument("figure takes noise levels as --eta");
    }
    params = grover_params(config.n_items, config.n_targets);
    t_end = resolve_t_end(config, params);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  namespace fs = std::filesystem;
  const fs::path dir = config.output_path.empty() ? fs::path(".") : fs::path(config.output_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create '" << dir.string() << "': " << ec.message() << '\n';
    return kExitIoError;
  }
  for (auto kind : {ChannelKind::PhaseFlip, ChannelKind::BitFlip, ChannelKind::BitPhaseFlip}) {
    RunConfig figure = config;
    figure.kind = kind;
    std::vector<NoiseChannel> channels;
    try {
      channels = resolve_channels(figure);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitInvalidArguments;
    }
    const auto table = compute_sweep(params, channels, t_end, config.placement);
    const auto path = dir / ("figure-" + std::string(short_name(kind)) + ".csv");
    const int code = write_output(path.string(), out, err,
                                  [&](std::ostream& os) { write_csv(os, table); });
    if (code != kExitOk) return code;
    out << path.string() << '\n';
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover search success probability under single-qubit noise channels"};
  app.require_subcommand(1);

  RunConfig config;
  std::string channel_tag = "bpf";
  std::string placement_tag = "iteration";
  std::vector<double> eta, p, gamma, alpha;
  int t_end = 0;
  double p_req = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n_items, "database size N")->capture_default_str();
    sub->add_option("--m", config.n_targets, "number of targets m")->capture_default_str();
    sub->add_option("--channel", channel_tag, "bf, pf, bpf, dp, pd, ad or id")
        ->capture_default_str();
    sub->add_option("--eta", eta, "contraction factors, comma separated")->delimiter(',');
    sub->add_option("--p", p, "flip channel no-flip probabilities")->delimiter(',');
    sub->add_option("--gamma", gamma, "damping parameters (pd, ad)")->delimiter(',');
    sub->add_option("--alpha", alpha, "depolarizing probabilities")->delimiter(',');
    sub->add_option("--t-end", t_end, "last iteration (default 4T)");
    sub->add_option("--placement", placement_tag, "iteration or reflection")
        ->check(CLI::IsMember({"iteration", "reflection"}))
        ->capture_default_str();
    sub->add_option("--p-req", p_req, "requested success probability");
    sub->add_option("--out", config.output_path, "output file (figure: directory)");
  };

  auto* sweep = app.add_subcommand("sweep", "success probability vs iteration, CSV");
  auto* validate = app.add_subcommand("validate", "run the invariant grid");
  auto* threshold = app.add_subcommand("threshold", "noise threshold for a requested probability");
  auto* figure = app.add_subcommand("figure", "CSV series for the three flip-noise figures");
  for (auto* sub : {sweep, validate, threshold, figure}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == sweep) config.subcommand = Subcommand::Sweep;
  if (chosen == validate) config.subcommand = Subcommand::Validate;
  if (chosen == threshold) config.subcommand = Subcommand::Threshold;
  if (chosen == figure) config.subcommand = Subcommand::Figure;

  try {
    config.kind = parse_channel_kind(channel_tag);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  config.placement =
      placement_tag == "reflection" ? Placement::PerReflection : Placement::PerIteration;
  const int forms = !eta.empty() + !p.empty() + !gamma.empty() + !alpha.empty();
  if (forms > 1) {
    err << "error: give only one of --eta, --p, --gamma, --alpha\n";
    return kExitInvalidArguments;
  }
  if (!eta.empty()) {
    config.form = ValueForm::Eta;
    config.values = eta;
  } else if (!p.empty()) {
    config.form = ValueForm::P;
    config.values = p;
  } else if (!gamma.empty()) {
    config.form = ValueForm::Gamma;
    config.values = gamma;
  } else if (!alpha.empty()) {
    config.form = ValueForm::Alpha;
    config.values = alpha;
  } else if (config.kind == ChannelKind::AmplitudeDamping) {
    config.form = ValueForm::Gamma;
  }
  if (chosen->count("--t-end") > 0) config.t_end = t_end;
  if (chosen->count("--p-req") > 0) config.p_req = p_req;

  switch (config.subcommand) {
    case Subcommand::Sweep: return run_sweep(config, out, err);
    case Subcommand::Validate: return run_validate(config, out, err);
    case Subcommand::Threshold: return run_threshold(config, out, err);
    case Subcommand::Figure: return run_figure(config, out, err);
  }
  return kExitInvalidArguments;
}

}  // namespace grovernoise::app
