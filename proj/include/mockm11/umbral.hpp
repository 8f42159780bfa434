#ifndef MOCKM11_UMBRAL_HPP
#define MOCKM11_UMBRAL_HPP

#include <cstdint>

#include "mockm11/jacobi_table.hpp"
#include "mockm11/series.hpp"

namespace mockm11 {

struct JacobiExpansion {
  int weight;
  int index;
  QYSeries series;
};

// Box used by the bridge computations: q-orders 0..n_max, y below
// n_max + 13 so that the residual tails can be inspected.
Box bridge_box(std::int64_t n_max);

JacobiExpansion Z3_expansion(const Box& box);
JacobiExpansion psi3_expansion(const Box& box);
JacobiExpansion psi1_expansion(const Box& box);

// y/(1-y)^2 and -y/(1+y)^2 expanded in |y| < 1 below y^y_max.
QYSeries double_pole_kernel(const Rational& y_max);
QYSeries double_pole_kernel_twisted(const Rational& y_max);

QYSeries polar_part_index1(const Box& box);
QYSeries mu1k_expansion(int k, const Box& box);

// Removes c * Av^(1)(y/(1-y)^2), with c read off the linear tail of the
// q^0 row, and returns the coefficients of what remains keyed by
// D = s^2 - 4n.  Throws std::domain_error when the remainder still reaches
// the edge of the y window or is not a function of D alone.
JacobiCoeffTable finite_part_index1(const QYSeries& psi, const Box& box);

// The polar coefficient c found by finite_part_index1.
Rational polar_coefficient_index1(const QYSeries& psi, const Box& box);

// psi1 + 12 mu^(1),0 + 12 mu^(1),1 as a table; throws std::domain_error
// if it differs from 24 H.
JacobiCoeffTable m12_identity_series(const Box& box);

}  // namespace mockm11

#endif
