#ifndef MOCKM11_DATA_HPP
#define MOCKM11_DATA_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mockm11 {

// $MOCKM11_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path data_directory();
std::string read_data_file(std::string_view name);

// Splits CSV text into rows of cells, skipping blank and '#' lines.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// One of the bundled appendix tables (2, 3, 4 or 5): integer cells keyed
// by |D|, columns in file order.
struct ReferenceTable {
  int which = 0;
  std::vector<std::string> columns;
  std::map<std::int64_t, std::vector<std::int64_t>> rows;

  std::int64_t at(std::int64_t abs_d, std::size_t column) const;
};

const ReferenceTable& reference_table(int which);

}  // namespace mockm11

#endif
