#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flatsphere/geodesic.hpp"

namespace flatsphere::cli {

// Runs one command line (without the program name). Exit status: 0 success, 1 failed check,
// 2 usage, parse or I/O error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Developed trajectory with every unfolded triangle outlined.
std::string trajectory_svg(const Trajectory& t);

std::string saddles_csv(const ConeSurface& d, const std::vector<SaddleConnection>& cs, bool simple_only);

}  // namespace flatsphere::cli
