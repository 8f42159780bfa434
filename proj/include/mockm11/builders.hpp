#ifndef MOCKM11_BUILDERS_HPP
#define MOCKM11_BUILDERS_HPP

#include <utility>
#include <vector>

#include "mockm11/series.hpp"

namespace mockm11 {

// Coefficients 0..top of prod over (k, e) of prod_n (1 - q^(kn))^e.
std::vector<Integer> eta_product_coefficients(const std::vector<std::pair<int, int>>& factors, std::int64_t top);

// prod over (k, e) of eta(k tau)^e, exact for exponents below box.q_max.
QYSeries eta_quotient(const std::vector<std::pair<int, int>>& factors, const Box& box);
QYSeries eta_expansion(const Box& box);
QYSeries eisenstein_E4(const Box& box);

struct ThetaSpec {
  int m;
  int r;
  bool nullwert;

  // Reduces r modulo 2m; m must be positive.
  static ThetaSpec make(int m, int r, bool nullwert = false);
};

// sum over s = r mod 2m of q^(s^2/4m) y^s.
QYSeries theta_mr(const ThetaSpec& spec, const Box& box);

// i^i_power * series; lets the classical theta functions keep rational
// coefficients while carrying their fourth-root-of-unity phase.
struct PhasedSeries {
  int i_power = 0;
  QYSeries series;

  PhasedSeries operator*(const PhasedSeries& other) const;
  // The series with the phase folded in; throws if the phase is odd.
  QYSeries rational() const;
};

// The four classical Jacobi theta functions on the half-integer y grid.
PhasedSeries jacobi_theta_classical(int j, const Box& box);

// The rational factor of theta_1 in product form:
// q^(1/8) (y^(1/2) - y^(-1/2)) prod (1 - q^n)(1 - q^n y)(1 - q^n / y).
QYSeries theta1_product_form(const Box& box);

// sum over s of y^(2ms) q^(ms^2) F(y q^s) for a pure-y kernel F.  Summands
// with s < 0 use the expansion of F in 1/y, so F must be invariant under
// y -> 1/y.  A y-truncated kernel must reach at least box.q_max - m.
QYSeries averaging_operator(int m, const QYSeries& kernel, const Box& box);

}  // namespace mockm11

#endif
