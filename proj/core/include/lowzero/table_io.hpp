#ifndef LOWZERO_TABLE_IO_HPP
#define LOWZERO_TABLE_IO_HPP

#include <string>
#include <vector>

namespace lowzero {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Header row + one line per row.  Values carry seven significant digits
// so a round trip stays within 1e-6 relative.
std::string to_csv(const Table& table);
Table parse_csv(const std::string& csv);

// Array of one object per row, keyed by column name.
std::string to_json(const Table& table);

}  // namespace lowzero

#endif
