#pragma once

#include <ostream>
#include <string>

#include "noosphere/integrator.hpp"
#include "noosphere/noosim.hpp"

namespace noocli {

// 17 significant digits, enough to round-trip any double.
std::string format_csv_number(double v);
// Shortest decimal that round-trips to exactly `v`.
std::string format_exact(double v);

// Header "t,<names...>" then one newline-terminated row per sample.
void write_csv(std::ostream& out, const noosphere::Trajectory& trajectory);

// "year,EB,plants,percent" table followed by the collapse line.
std::string format_report(const noosphere::SingularityReport& report);

}  // namespace noocli
