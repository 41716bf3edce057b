#pragma once

// Command-line front end: run, sweep, weakvalues, reproduce, analyze.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 a reproduce row disagrees
// with the measured value.

#include <iosfwd>
#include <span>
#include <string>

#include "cheshire/experiment.hpp"

namespace cheshire {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagree = 2;

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// CSV with header
///   scenario_id,detector,chi_rad,alpha_rad,truncation,intensity_norm,intensity_cps
/// one row per (grid point, detector), LF line endings, 15 significant digits.
void write_csv(std::ostream& out, std::span<const RunResult> results);

/// %.15g, used for CSV fields.
std::string format_csv_number(double x);

}  // namespace cheshire
