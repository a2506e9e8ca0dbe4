#pragma once

#include <string>
#include <vector>

namespace treewave::csv {

// Format a double with 15 significant digits ("%.15g"). All CSV output in
// the project goes through this so repeated runs are byte-identical.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Write header + numeric rows. Throws FormatError on I/O failure.
void write_table(const std::string& path, const Table& table);

// Parse a numeric CSV with a header line. Throws FormatError on malformed
// input (missing header, ragged rows, non-numeric cells).
Table read_table(const std::string& path);

}  // namespace treewave::csv
