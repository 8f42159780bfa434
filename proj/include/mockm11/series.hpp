#ifndef MOCKM11_SERIES_HPP
#define MOCKM11_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mockm11/rational.hpp"

namespace mockm11 {

enum class Convention { FinitePolynomial, AnnulusQltYlt1 };

std::string_view convention_name(Convention c);

// Region on which a truncated series is exact: every term q^a y^b with
// a < q_max and (when present) b < y_max.
struct Box {
  Rational q_max;
  std::optional<Rational> y_max;

  static Box q_only(const Rational& q_max) { return Box{q_max, std::nullopt}; }
  static Box q_y(const Rational& q_max, const Rational& y_max) { return Box{q_max, y_max}; }

  bool contains(const Rational& q, const Rational& y) const;
  Box intersect(const Box& other) const;
  bool operator==(const Box& other) const = default;
};

std::string to_string(const Box& box);

struct Monomial {
  Rational q;
  Rational y;
  bool operator==(const Monomial&) const = default;
};

struct Term {
  Rational q;
  Rational y;
  Rational coeff;
};

// Truncated Fourier expansion sum c(a,b) q^a y^b with a on the grid
// (1/q_den)Z and b on (1/y_den)Z.  Iteration is lexicographic in (a, b).
class QYSeries {
 public:
  QYSeries() : QYSeries(Convention::FinitePolynomial, Box::q_only(0)) {}
  QYSeries(Convention conv, Box box);

  static QYSeries constant(const Rational& c, Convention conv, Box box);
  static QYSeries monomial(const Rational& c, const Rational& q, const Rational& y, Convention conv, Box box);

  Convention convention() const { return conv_; }
  const Box& box() const { return box_; }
  std::int64_t q_denominator() const { return q_den_; }
  std::int64_t y_denominator() const { return y_den_; }

  bool empty() const { return rows_.empty(); }
  std::size_t size() const;

  // Adds c to the coefficient at (q, y).  Terms outside the box are dropped.
  void add_term(const Rational& q, const Rational& y, const Rational& c);
  Rational coefficient(const Rational& q, const Rational& y) const;
  std::vector<Term> terms() const;
  // Terms at one q-exponent, keyed by y-exponent.
  std::map<Rational, Rational> row(const Rational& q) const;
  std::vector<Rational> q_exponents() const;

  std::optional<Rational> min_q() const;
  std::optional<Rational> min_y() const;
  std::optional<Rational> max_y() const;

  QYSeries operator-() const;
  QYSeries scaled(const Rational& c) const;
  QYSeries truncated(const Box& box) const;
  QYSeries with_convention(Convention conv) const;
  QYSeries with_box(const Box& box) const;

  // Substitutes q -> q^qf, y -> y^yf (qf > 0, yf a nonzero integer or 1/2).
  QYSeries substituted(const Rational& qf, const Rational& yf) const;
  // y -> 1/y; requires no y truncation.
  QYSeries y_reflected() const;
  // y -> 1; requires no y truncation.
  QYSeries at_y_equal_one() const;

  std::string serialize() const;
  static QYSeries parse(std::string_view text, Convention conv, Box box);

  friend QYSeries operator+(const QYSeries& a, const QYSeries& b);
  friend QYSeries operator-(const QYSeries& a, const QYSeries& b);
  friend QYSeries operator*(const QYSeries& a, const QYSeries& b);
  friend QYSeries series_invert(const QYSeries& a, const std::vector<Monomial>& small, const Box& out_box);

  // Exact term-by-term equality including box and convention.
  bool operator==(const QYSeries& other) const;

 private:
  using Row = std::map<std::int64_t, Rational>;

  void regrid(std::int64_t q_den, std::int64_t y_den);
  QYSeries regridded(std::int64_t q_den, std::int64_t y_den) const;
  // Largest integer grid index strictly below bound * den.
  static std::int64_t last_index_below(const Rational& bound, std::int64_t den);
  void prune();
  void compact_grid();

  Convention conv_;
  Box box_;
  std::int64_t q_den_ = 1;
  std::int64_t y_den_ = 1;
  std::map<std::int64_t, Row> rows_;
};

// Inverse of a on out_box (intersected with what a determines).  Every term
// of a other than the chosen leading term L must be L times a monomial in
// the cone spanned by the declared small monomials and q (annulus), or L
// times a positive power of q (finite polynomials).  When a has terms
// in the leading q-row besides L, out_box must carry a y bound.
QYSeries series_invert(const QYSeries& a, const std::vector<Monomial>& small, const Box& out_box);

// Monomials that are small in the annulus q < |y| < 1.
bool small_in_annulus(const Monomial& m);

// Both series agree on the intersection of their boxes.
bool agree_on_common_box(const QYSeries& a, const QYSeries& b);

}  // namespace mockm11

#endif
