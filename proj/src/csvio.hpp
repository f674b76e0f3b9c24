#pragma once

// CSV emission with shortest round-trip decimal floats, so identical runs
// produce byte-identical files.

#include <string>
#include <vector>

namespace chemoflow {

std::string format_double(double x);
std::string csv_row(const std::vector<std::string>& cells);
std::string csv_row_doubles(const std::vector<double>& cells);

}  // namespace chemoflow
