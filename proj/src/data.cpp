#include "mockm11/data.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#ifndef MOCKM11_DEFAULT_DATA_DIR
#define MOCKM11_DEFAULT_DATA_DIR "data"
#endif

namespace mockm11 {

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("MOCKM11_DATA_DIR"); env && *env) return env;
  return MOCKM11_DEFAULT_DATA_DIR;
}

std::string read_data_file(std::string_view name) {
  const auto path = data_directory() / std::string(name);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    out.push_back(std::move(cells));
  }
  return out;
}

std::int64_t ReferenceTable::at(std::int64_t abs_d, std::size_t column) const {
  auto it = rows.find(abs_d);
  if (it == rows.end() || column >= it->second.size())
    throw std::out_of_range("reference table " + std::to_string(which) + " has no cell |D|=" + std::to_string(abs_d));
  return it->second[column];
}

namespace {

const char* table_file(int which) {
  switch (which) {
    case 2:
      return "table2_mckay_thompson_default.csv";
    case 3:
      return "table3_multiplicities_default.csv";
    case 4:
      return "table4_mckay_thompson_twisted.csv";
    case 5:
      return "table5_multiplicities_twisted.csv";
  }
  throw std::invalid_argument("reference_table: which must be 2, 3, 4 or 5");
}

ReferenceTable load(int which) {
  const auto rows = parse_csv(read_data_file(table_file(which)));
  if (rows.empty()) throw std::runtime_error("reference table " + std::to_string(which) + " is empty");
  ReferenceTable t;
  t.which = which;
  t.columns.assign(rows[0].begin() + 1, rows[0].end());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::runtime_error("reference table " + std::to_string(which) + ": ragged row " + std::to_string(i));
    std::vector<std::int64_t> cells;
    for (std::size_t j = 1; j < rows[i].size(); ++j) cells.push_back(std::stoll(rows[i][j]));
    t.rows.emplace(std::stoll(rows[i][0]), std::move(cells));
  }
  return t;
}

}  // namespace

const ReferenceTable& reference_table(int which) {
  static std::array<ReferenceTable, 4> cache;
  static std::array<std::once_flag, 4> flags;
  if (which < 2 || which > 5) throw std::invalid_argument("reference_table: which must be 2, 3, 4 or 5");
  std::call_once(flags[which - 2], [which] { cache[which - 2] = load(which); });
  return cache[which - 2];
}

}  // namespace mockm11
