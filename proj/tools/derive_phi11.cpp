// Regenerates data/phi11_coefficients.csv from the bundled level-11
// McKay-Thompson column and the class number series R_11.
#include <fstream>
#include <iostream>

#include "mockm11/class_numbers.hpp"
#include "mockm11/data.hpp"
#include "mockm11/moonshine.hpp"

using namespace mockm11;

int main(int argc, char** argv) {
  const ReferenceTable& t2 = reference_table(2);
  std::size_t col = 0;
  while (col < t2.columns.size() && t2.columns[col] != "11AB") ++col;
  if (col == t2.columns.size()) {
    std::cerr << "table 2 has no 11AB column\n";
    return 1;
  }
  const JacobiCoeffTable r11 = series_table(SeriesKind::R_N, 11, kPhi11MinD);
  JacobiCoeffTable phi(1, 2, kPhi11MinD);
  for (const auto& [abs_d, cells] : t2.rows) {
    const Rational c = make_rational(5, 11) * (2 * r11.at(-abs_d) - cells[col]);
    if (!is_integer(c)) {
      std::cerr << "non-integral coefficient at D=-" << abs_d << ": " << to_string(c) << "\n";
      return 1;
    }
    phi.set(-abs_d, c);
  }
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (argc > 1) {
    file.open(argv[1]);
    out = &file;
  }
  *out << "# Weight 2 index 1 cusp form phi_11 for Gamma0(11), normalized (y^-1 - 1 + y) q + O(q^2).\n"
       << "# Derived data: C(D) = (5/11) * (2*R_11(D) - H_11AB(D)), with H_11AB the 11AB column of\n"
       << "# table2_mckay_thompson_default.csv.  Regenerate with tools/derive_phi11.\n"
       << phi.to_csv();
  return 0;
}
