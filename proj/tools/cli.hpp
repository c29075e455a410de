#pragma once

#include "hitchin/type_d.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hitchin::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kConfigError = 2 };

/// Runs one subcommand; `args` excludes the program name. The report goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lattice plot of the polygon: one circle per integer point, class "admissible" or
/// "excluded", with data-alpha / data-beta attributes; points on even edges are ringed.
std::string newton_svg(const NewtonPolygon& polygon);

}  // namespace hitchin::cli
