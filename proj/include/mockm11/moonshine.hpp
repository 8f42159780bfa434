#ifndef MOCKM11_MOONSHINE_HPP
#define MOCKM11_MOONSHINE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mockm11/characters.hpp"
#include "mockm11/jacobi_table.hpp"

namespace mockm11 {

enum class Variant { Default, Twisted };

Variant parse_variant(std::string_view name);
std::string_view variant_name(Variant v);

// q^n coefficient of eta(4t)^5 eta(16t) / (eta(2t)^2 eta(8t)); memoized.
Integer tunnell_a(std::int64_t n);

Rational phi84_coefficient(std::int64_t D);
JacobiCoeffTable phi84_table(std::int64_t d_min);

// Lowest discriminant covered by the bundled phi_11 data.
inline constexpr std::int64_t kPhi11MinD = -108;
JacobiCoeffTable phi11_table(std::int64_t d_min);

// Columns of the McKay-Thompson tables: 1A 2A 3A 4A 5A 6A 8AB 11AB.
const std::vector<std::string>& mt_class_labels();
// Maps 8A/8B to 8AB and 11A/11B to 11AB; throws on unknown labels.
std::string canonical_mt_class(std::string_view label);

// -2 theta0_{1,0} (theta0_{m,0} - theta0_{m,m})^2 theta_{1,0} with m = 4
// for order 4 and m = 16 for order 8.
JacobiCoeffTable theta_product_series(int order, std::int64_t d_min);

JacobiCoeffTable mt_series(Variant v, std::string_view cls, std::int64_t d_min);

// H_<N>, HCE_<N>, R_<N>, phi11, phi84, mt:<variant>:<class> or mult:<variant>:<chi>.
JacobiCoeffTable series_by_selector(const std::string& selector, std::int64_t d_min);

// Multiplicity of chi_index in each homogeneous component.  Throws
// std::domain_error if some value is not a rational integer.
JacobiCoeffTable multiplicity_series(Variant v, int chi_index, std::int64_t d_min);

struct LatticeGenerator {
  std::string cusp_form;
  VirtualCharacter character;
};

struct LatticeData {
  std::vector<LatticeGenerator> generators;
  // Inner products of the character factors; generators attached to
  // different cusp forms are orthogonal.
  std::vector<std::vector<Rational>> gram;
};

LatticeData lattice_generators(Variant v);

struct CellMismatch {
  std::int64_t abs_d;
  std::string column;
  std::int64_t expected;
  std::string got;
};

struct TableDiff {
  int which = 0;
  std::size_t cells_checked = 0;
  std::vector<CellMismatch> mismatches;
  std::vector<std::string> failed_checks;

  bool ok() const { return mismatches.empty() && failed_checks.empty(); }
};

// Recomputes every cell of appendix table 2, 3, 4 or 5 and compares.
TableDiff table_diff(int which);

}  // namespace mockm11

#endif
