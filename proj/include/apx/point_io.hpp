#pragma once

// "apx-points v1" text format:
//
//   apx-points 1 dim=<D> count=<K>
//   # comment lines may appear anywhere after the header
//   <D whitespace-separated rationals, each <int> or <int>/<posint>>   (K lines)
//
// Comment lines of the form `# key=value key=value` are also read back as
// metadata. The provenance sidecar lists one source lattice point per line as
// comma-separated integers, in point order.

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "apx/linalg.hpp"

namespace apx {

struct PointFile {
  std::size_t dim = 0;
  std::vector<RatVector> points;
  std::map<std::string, std::string> meta;
};

void write_points(std::ostream& os, const std::vector<RatVector>& points, std::size_t dim,
                  const std::map<std::string, std::string>& meta = {});
/// Throws ParseError carrying the 1-based line number.
PointFile read_points(std::istream& is);

void write_provenance(std::ostream& os, const std::vector<std::vector<std::int64_t>>& prov);
std::vector<std::vector<std::int64_t>> read_provenance(std::istream& is);

}  // namespace apx
