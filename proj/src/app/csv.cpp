#include "grovernoise/app/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace grovernoise::app {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_double(std::string_view field) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("bad number '" + std::string(field) + "'");
  }
  return value;
}

int parse_int(std::string_view field) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("bad integer '" + std::string(field) + "'");
  }
  return value;
}

std::optional<double> parse_optional(std::string_view field) {
  if (field.empty()) return std::nullopt;
  return parse_double(field);
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << kDataHeader << '\n';
  for (const auto& row : table.data) {
    out << short_name(row.kind) << ',' << format_number(row.eta) << ',' << row.t << ','
        << (row.p_analytic ? format_number(*row.p_analytic) : "") << ','
        << format_number(row.p_oracle) << ','
        << (row.abs_diff ? format_number(*row.abs_diff) : "") << '\n';
  }
  out << '\n' << kSummaryHeader << '\n';
  for (const auto& row : table.summary) {
    out << short_name(row.kind) << ',' << format_number(row.eta) << ',' << row.t_m << ','
        << format_number(row.p_max) << ',' << row.source << '\n';
  }
}

SweepTable parse_csv(std::istream& in) {
  SweepTable table;
  std::string line;
  if (!std::getline(in, line) || line != kDataHeader) {
    throw std::runtime_error("missing data header");
  }
  bool summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) {
      if (summary) throw std::runtime_error("unexpected blank line in summary block");
      if (!std::getline(in, line) || line != kSummaryHeader) {
        throw std::runtime_error("missing summary header");
      }
      summary = true;
      continue;
    }
    const auto fields = split(line);
    if (!summary) {
      if (fields.size() != 6) throw std::runtime_error("data row needs 6 fields: " + line);
      table.data.push_back({parse_channel_kind(fields[0]), parse_double(fields[1]),
                            parse_int(fields[2]), parse_optional(fields[3]),
                            parse_double(fields[4]), parse_optional(fields[5])});
    } else {
      if (fields.size() != 5) throw std::runtime_error("summary row needs 5 fields: " + line);
      table.summary.push_back({parse_channel_kind(fields[0]), parse_double(fields[1]),
                               parse_int(fields[2]), parse_double(fields[3]),
                               std::string(fields[4])});
    }
  }
  if (!summary) throw std::runtime_error("missing summary block");
  return table;
}

}  // namespace grovernoise::app
