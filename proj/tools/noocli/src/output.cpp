#include "noocli/output.hpp"

#include <charconv>
#include <cstdio>

namespace noocli {

std::string format_csv_number(double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_exact(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const noosphere::Trajectory& trajectory) {
  out << 't';
  for (const auto& name : trajectory.names()) out << ',' << name;
  out << '\n';
  for (const auto& s : trajectory.samples()) {
    out << format_csv_number(s.t);
    for (double v : s.state) out << ',' << format_csv_number(v);
    out << '\n';
  }
}

std::string format_report(const noosphere::SingularityReport& report) {
  std::string out = "year,EB,plants,percent\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.year) + ',' + format_exact(row.information) + ',' +
           format_exact(row.plants) + ',' + format_exact(row.percent) + '\n';
  }
  if (report.collapse_year) {
    out += "collapse year: " + std::to_string(*report.collapse_year) + '\n';
  } else {
    out += "collapse: not reached\n";
  }
  return out;
}

}  // namespace noocli
