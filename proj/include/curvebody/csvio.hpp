#pragma once

#include <string>
#include <vector>

namespace curvebody {

// Every floating value in an output file goes through this.  %.17g prints
// the shortest-or-full form that round-trips a double exactly, so identical
// runs produce byte-identical files.
std::string format_g17(double x);

// Plain numeric table: comma separator, '.' decimal point, mandatory header
// row.  Anything non-numeric (event kinds, notes) is not a table and is
// written by its own emitter.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const CsvTable& table);
void write_csv(const std::string& path, const CsvTable& table);

// Inverse of write_csv, for golden-file comparisons and post-processing.
// Throws on missing files, ragged rows, or cells that fail to parse fully.
CsvTable read_csv(const std::string& path);

}  // namespace curvebody
