#ifndef MOCKM11_JACOBI_TABLE_HPP
#define MOCKM11_JACOBI_TABLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "mockm11/rational.hpp"
#include "mockm11/series.hpp"

namespace mockm11 {

// Fourier coefficients C(D, r) of an index-m Jacobi form, D = s^2 - 4mn and
// r = s mod 2m.  At index 1 the residue is implied by D and is always 0 in
// storage.  Entries are exact for D >= d_min; absent keys are zero.
class JacobiCoeffTable {
 public:
  using Key = std::pair<std::int64_t, int>;

  explicit JacobiCoeffTable(int index = 1, int weight = 2, std::int64_t d_min = 0);

  int index() const { return index_; }
  int weight() const { return weight_; }
  std::int64_t d_min() const { return d_min_; }

  void set(std::int64_t D, const Rational& c, int r = 0);
  // Throws std::out_of_range below d_min.
  Rational at(std::int64_t D, int r = 0) const;
  Rational constant_term() const { return at(0); }
  const std::map<Key, Rational>& coefficients() const { return coeffs_; }

  bool holomorphic() const;
  JacobiCoeffTable restricted(std::int64_t d_min) const;
  JacobiCoeffTable scaled(const Rational& c) const;

  // sum C(s^2 - 4mn, s) q^n y^s over n < box.q_max; the box must lie inside
  // the exact range.
  QYSeries to_series(const Box& box) const;

  // "D,coefficient" rows, D descending from the largest key (0 for
  // holomorphic tables) down to d_min; index > 1 adds an r column.
  std::string to_csv() const;
  static JacobiCoeffTable from_csv(std::string_view text, int index = 1, int weight = 2);

  friend JacobiCoeffTable operator+(const JacobiCoeffTable& a, const JacobiCoeffTable& b);
  friend JacobiCoeffTable operator-(const JacobiCoeffTable& a, const JacobiCoeffTable& b);
  bool operator==(const JacobiCoeffTable& other) const;

 private:
  Key normalize(std::int64_t D, int r) const;

  int index_;
  int weight_;
  std::int64_t d_min_;
  std::map<Key, Rational> coeffs_;
};

bool is_discriminant(std::int64_t D);

}  // namespace mockm11

#endif
