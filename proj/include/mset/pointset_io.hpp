#ifndef MSET_POINTSET_IO_HPP
#define MSET_POINTSET_IO_HPP

#include <iosfwd>
#include <string>

#include "mset/configuration.hpp"

namespace mset {

// Point-set text format:
//   - '#' starts a comment line; blank lines are ignored
//   - first data line: "n m" (ambient dimension, point count)
//   - then m lines of n decimal coordinates separated by single spaces,
//     written with 17 significant digits
// The reader verifies unit norms within kUnitNormTol unless normalize is
// set, in which case each point is rescaled first. Violations raise
// FormatError with the offending line number.

SphericalConfiguration read_pointset(std::istream& in, bool normalize = false);
SphericalConfiguration read_pointset_file(const std::string& path, bool normalize = false);

void write_pointset(std::ostream& out, const SphericalConfiguration& x);
void write_pointset_file(const std::string& path, const SphericalConfiguration& x);

}  // namespace mset

#endif  // MSET_POINTSET_IO_HPP
