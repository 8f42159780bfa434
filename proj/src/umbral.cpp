#include "mockm11/umbral.hpp"

#include <map>
#include <stdexcept>

#include "mockm11/builders.hpp"
#include "mockm11/class_numbers.hpp"

namespace mockm11 {

namespace {

const Convention AN = Convention::AnnulusQltYlt1;
const Convention FP = Convention::FinitePolynomial;
constexpr std::int64_t kGuard = 4;

QYSeries require_box(const QYSeries& s, const Box& box, const char* what) {
  if (s.box().q_max < box.q_max || (box.y_max && (!s.box().y_max || *s.box().y_max < *box.y_max)))
    throw std::logic_error(std::string(what) + ": intermediate box " + to_string(s.box()) + " smaller than " +
                           to_string(box));
  return s.truncated(box);
}

QYSeries squared_quotient(int j, const Box& work) {
  const QYSeries t = jacobi_theta_classical(j, work).series;
  const QYSeries sq = t * t;
  const QYSeries null_sq = sq.at_y_equal_one();
  return sq * series_invert(null_sq, {}, work);
}

QYSeries z3_raw(const Box& work) {
  const QYSeries a = squared_quotient(2, work), b = squared_quotient(3, work), c = squared_quotient(4, work);
  return (a * b + b * c + c * a).scaled(4);
}

// 1 / T^2 with T the rational factor of theta_1, expanded in the annulus.
QYSeries inverse_theta1_squared(const Rational& q_max, const Rational& y_max) {
  const QYSeries t = theta1_product_form(Box::q_only(q_max + 1));
  const QYSeries t2 = (t * t).with_convention(AN);
  return series_invert(t2, {{0, 1}, {1, -1}}, Box::q_y(q_max, y_max));
}

// -f / T^2 on the box, for a finite expansion f.
QYSeries over_minus_theta1_squared(const QYSeries& f, const Box& box) {
  const QYSeries fa = f.with_convention(AN);
  const Rational ycap = *box.y_max - *fa.min_y();
  const QYSeries inv = inverse_theta1_squared(box.q_max + 1 - *fa.min_q(), ycap);
  return require_box(-(fa * inv), box, "quotient by theta_1^2");
}

void require_y_bound(const Box& box, const char* op) {
  if (!box.y_max) throw std::invalid_argument(std::string(op) + ": box needs a y bound");
}

}  // namespace

Box bridge_box(std::int64_t n_max) { return Box::q_y(n_max + 1, n_max + 13); }

JacobiExpansion Z3_expansion(const Box& box) {
  const Box work = Box::q_only(box.q_max + 1);
  return {0, 2, require_box(z3_raw(work), Box::q_only(box.q_max), "Z3")};
}

JacobiExpansion psi1_expansion(const Box& box) {
  require_y_bound(box, "psi1_expansion");
  const Box work = Box::q_only(box.q_max + 2);
  const QYSeries eta6 = eta_quotient({{1, 6}}, work);
  const QYSeries num = eta6 * z3_raw(work);
  return {1, 1, over_minus_theta1_squared(num, box)};
}

JacobiExpansion psi3_expansion(const Box& box) {
  require_y_bound(box, "psi3_expansion");
  const Box work = Box::q_only(box.q_max + 2);
  const QYSeries t2z = theta1_product_form(work).substituted(1, 2);
  const QYSeries eta3 = eta_quotient({{1, 3}}, work);
  const QYSeries num = t2z * eta3 * z3_raw(work);
  return {1, 3, over_minus_theta1_squared(num, box)};
}

QYSeries double_pole_kernel(const Rational& y_max) {
  QYSeries d(AN, Box::q_only(1));
  d.add_term(0, -1, 1);
  d.add_term(0, 0, -2);
  d.add_term(0, 1, 1);
  return series_invert(d, {{0, 1}}, Box::q_y(1, y_max));
}

QYSeries double_pole_kernel_twisted(const Rational& y_max) {
  QYSeries d(AN, Box::q_only(1));
  d.add_term(0, -1, 1);
  d.add_term(0, 0, 2);
  d.add_term(0, 1, 1);
  return -series_invert(d, {{0, 1}}, Box::q_y(1, y_max));
}

namespace {

Rational kernel_reach(const Box& box) { return box.y_max ? std::max(*box.y_max, box.q_max) : box.q_max; }

}  // namespace

QYSeries polar_part_index1(const Box& box) {
  require_y_bound(box, "polar_part_index1");
  return averaging_operator(1, double_pole_kernel(kernel_reach(box)), box).scaled(-12);
}

QYSeries mu1k_expansion(int k, const Box& box) {
  if (k != 0 && k != 1) throw std::invalid_argument("mu1k_expansion: k must be 0 or 1");
  require_y_bound(box, "mu1k_expansion");
  const QYSeries a = averaging_operator(1, double_pole_kernel(kernel_reach(box)), box);
  const QYSeries b = averaging_operator(1, double_pole_kernel_twisted(kernel_reach(box)), box);
  return (k == 0 ? a + b : a - b).scaled(make_rational(1, 2));
}

Rational polar_coefficient_index1(const QYSeries& psi, const Box& box) {
  const Box b = psi.box().intersect(box);
  require_y_bound(b, "finite_part_index1");
  const std::int64_t ytop = to_int64(ceil_of(*b.y_max)) - 1;
  if (ytop < 2 * kGuard) throw std::invalid_argument("finite_part_index1: y window too narrow");
  // In the q^0 row a double pole at z = 0 leaves c*k at y^k for all large k.
  const Rational c = psi.coefficient(0, ytop) - psi.coefficient(0, ytop - 1);
  for (std::int64_t k = ytop - kGuard; k <= ytop; ++k)
    if (psi.coefficient(0, k) != c * k)
      throw std::domain_error("finite_part_index1: q^0 row tail is not of the form c*k");
  return c;
}

JacobiCoeffTable finite_part_index1(const QYSeries& psi, const Box& box) {
  const Box b = psi.box().intersect(box);
  const Rational c = polar_coefficient_index1(psi, box);
  QYSeries rest = psi.truncated(b);
  if (c != 0) rest = (rest.with_convention(AN) - polar_part_index1(b).scaled(c / -12)).truncated(b);

  const std::int64_t ntop = to_int64(ceil_of(b.q_max)) - 1;
  const std::int64_t inner = to_int64(ceil_of(*b.y_max)) - 1 - kGuard;
  if (inner * inner < 4 * ntop) throw std::invalid_argument("finite_part_index1: y window too narrow for the q range");
  for (const auto& t : rest.terms())
    if (!is_integer(t.q) || !is_integer(t.y) || abs(t.y) > inner)
      throw std::domain_error("finite_part_index1: residual term at q^" + to_string(t.q) + " y^" + to_string(t.y) +
                              " after removing the polar part");

  std::map<std::int64_t, Rational> seen;
  JacobiCoeffTable table(1, 2, -4 * ntop);
  for (std::int64_t n = 0; n <= ntop; ++n)
    for (std::int64_t s = -inner; s <= inner; ++s) {
      const std::int64_t D = s * s - 4 * n;
      const Rational v = rest.coefficient(n, s);
      auto [it, fresh] = seen.try_emplace(D, v);
      if (!fresh && it->second != v)
        throw std::domain_error("finite_part_index1: coefficient at q^" + std::to_string(n) + " y^" +
                                std::to_string(s) + " disagrees with another of discriminant " + std::to_string(D));
    }
  for (const auto& [D, v] : seen) table.set(D, v);
  return table;
}

JacobiCoeffTable m12_identity_series(const Box& box) {
  const QYSeries psi = psi1_expansion(box).series;
  const QYSeries sum = psi + (mu1k_expansion(0, box) + mu1k_expansion(1, box)).scaled(12);
  JacobiCoeffTable t = finite_part_index1(sum, box);
  const JacobiCoeffTable h24 = series_table(SeriesKind::H_N, 1, t.d_min()).scaled(24);
  if (!(t.restricted(t.d_min()) == h24))
    throw std::domain_error("m12_identity_series: result differs from 24 H");
  return t;
}

}  // namespace mockm11
