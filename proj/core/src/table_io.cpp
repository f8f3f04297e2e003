#include "lowzero/table_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "lowzero/errors.hpp"

namespace lowzero {

namespace {
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}
}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw domain_error("to_csv: ragged row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += fmt(row[c]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(const std::string& csv) {
  Table table;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string cell;
    if (header) {
      while (std::getline(ls, cell, ',')) table.columns.push_back(cell);
      header = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    if (row.size() != table.columns.size())
      throw domain_error("parse_csv: ragged row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_json(const Table& table) {
  std::string out = "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r ? ",\n {" : "\n {";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ", ";
      out += '"';
      out += table.columns[c];
      out += "\": ";
      out += fmt(table.rows[r][c]);
    }
    out += '}';
  }
  out += "\n]\n";
  return out;
}

}  // namespace lowzero
