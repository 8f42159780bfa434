#include "mockm11/builders.hpp"

#include <stdexcept>

namespace mockm11 {

namespace {

std::int64_t last_below(const Rational& bound) { return to_int64(ceil_of(bound)) - 1; }

}  // namespace

std::vector<Integer> eta_product_coefficients(const std::vector<std::pair<int, int>>& factors, std::int64_t top) {
  if (top < 0) return {};
  std::vector<Integer> v(static_cast<std::size_t>(top + 1));
  v[0] = 1;
  for (const auto& [k, e] : factors) {
    if (k <= 0) throw std::invalid_argument("eta_quotient: scale must be positive");
    for (int rep = 0; rep < std::abs(e); ++rep) {
      for (std::int64_t j = k; j <= top; j += k) {
        if (e > 0) {
          for (std::int64_t i = top; i >= j; --i) v[i] -= v[i - j];
        } else {
          for (std::int64_t i = j; i <= top; ++i) v[i] += v[i - j];
        }
      }
    }
  }
  return v;
}

QYSeries eta_quotient(const std::vector<std::pair<int, int>>& factors, const Box& box) {
  Rational lead = 0;
  for (const auto& [k, e] : factors) lead += make_rational(static_cast<std::int64_t>(k) * e, 24);
  QYSeries out(Convention::FinitePolynomial, Box::q_only(box.q_max));
  const auto v = eta_product_coefficients(factors, last_below(box.q_max - lead));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.add_term(lead + static_cast<std::int64_t>(i), 0, Rational(v[i]));
  return out;
}

QYSeries eta_expansion(const Box& box) { return eta_quotient({{1, 1}}, box); }

QYSeries eisenstein_E4(const Box& box) {
  QYSeries out(Convention::FinitePolynomial, Box::q_only(box.q_max));
  const std::int64_t top = last_below(box.q_max);
  if (top < 0) return out;
  out.add_term(0, 0, 1);
  for (std::int64_t n = 1; n <= top; ++n) {
    Integer sigma = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) sigma += Integer(d) * d * d;
    out.add_term(n, 0, Rational(240 * sigma));
  }
  return out;
}

ThetaSpec ThetaSpec::make(int m, int r, bool nullwert) {
  if (m <= 0) throw std::invalid_argument("ThetaSpec: index must be positive");
  const int mod = 2 * m;
  return ThetaSpec{m, ((r % mod) + mod) % mod, nullwert};
}

QYSeries theta_mr(const ThetaSpec& spec, const Box& box) {
  const ThetaSpec t = ThetaSpec::make(spec.m, spec.r, spec.nullwert);
  QYSeries out(Convention::FinitePolynomial, Box::q_only(box.q_max));
  const std::int64_t mod = 2 * t.m;
  // s^2 < 4m q_max bounds |s|.
  const Rational bound = 4 * t.m * box.q_max;
  std::int64_t smax = 0;
  while (Rational(smax * smax) < bound) ++smax;
  for (std::int64_t s = -smax; s <= smax; ++s) {
    if (((s % mod) + mod) % mod != t.r) continue;
    out.add_term(make_rational(s * s, 4 * t.m), t.nullwert ? 0 : s, 1);
  }
  return out;
}

PhasedSeries PhasedSeries::operator*(const PhasedSeries& other) const {
  return PhasedSeries{(i_power + other.i_power) % 4, series * other.series};
}

QYSeries PhasedSeries::rational() const {
  const int p = ((i_power % 4) + 4) % 4;
  if (p % 2 != 0) throw std::domain_error("PhasedSeries: odd power of i has no rational form");
  return p == 0 ? series : -series;
}

PhasedSeries jacobi_theta_classical(int j, const Box& box) {
  if (j < 1 || j > 4) throw std::invalid_argument("jacobi_theta_classical: j must be in 1..4");
  QYSeries out(Convention::FinitePolynomial, Box::q_only(box.q_max));
  const Rational bound = 8 * box.q_max;
  std::int64_t smax = 0;
  while (Rational(smax * smax) < bound) ++smax;
  const bool odd = j <= 2;
  for (std::int64_t s = -smax; s <= smax; ++s) {
    if ((s % 2 != 0) != odd) continue;
    int sign = 1;
    if (j == 1) sign = (((s - 1) / 2) % 2 == 0) ? 1 : -1;
    if (j == 4) sign = ((s / 2) % 2 == 0) ? 1 : -1;
    out.add_term(make_rational(s * s, 8), make_rational(s, 2), sign);
  }
  // theta_1 = -i * sum (-1)^((s-1)/2) q^(s^2/8) y^(s/2).
  return PhasedSeries{j == 1 ? 3 : 0, std::move(out)};
}

QYSeries theta1_product_form(const Box& box) {
  const Rational lead = make_rational(1, 8);
  const Box inner = Box::q_only(box.q_max - lead);
  QYSeries prod = QYSeries::constant(1, Convention::FinitePolynomial, inner);
  for (std::int64_t n = 1; Rational(n) < inner.q_max; ++n) {
    QYSeries f = QYSeries::constant(1, Convention::FinitePolynomial, inner);
    f.add_term(n, 0, -1);
    QYSeries g = QYSeries::constant(1, Convention::FinitePolynomial, inner);
    g.add_term(n, 1, -1);
    QYSeries h = QYSeries::constant(1, Convention::FinitePolynomial, inner);
    h.add_term(n, -1, -1);
    prod = prod * f * g * h;
  }
  QYSeries front(Convention::FinitePolynomial, Box::q_only(box.q_max));
  front.add_term(lead, make_rational(1, 2), 1);
  front.add_term(lead, make_rational(-1, 2), -1);
  return (front * prod).truncated(Box::q_only(box.q_max));
}

QYSeries averaging_operator(int m, const QYSeries& kernel, const Box& box) {
  if (m < 0) throw std::invalid_argument("averaging_operator: index must be non-negative");
  if (kernel.empty()) return QYSeries(Convention::AnnulusQltYlt1, box);
  for (const auto& q : kernel.q_exponents())
    if (q != 0) throw std::invalid_argument("averaging_operator: kernel must be a pure y-series");
  const Rational kmin = *kernel.min_y();
  if (m == 0 && kmin <= 0)
    throw std::domain_error("averaging_operator: index 0 needs a kernel with only positive y-exponents");
  Box out_box = box;
  if (kernel.box().y_max) {
    const Rational& k = *kernel.box().y_max;
    if (k + m < box.q_max)
      throw std::domain_error("averaging_operator: kernel truncated at y<" + to_string(k) +
                              " does not determine the average below q^" + to_string(box.q_max));
    out_box.y_max = out_box.y_max ? std::min(*out_box.y_max, k) : k;
  }
  QYSeries out(Convention::AnnulusQltYlt1, out_box);
  const auto terms = kernel.terms();
  for (std::int64_t a = 0;; ++a) {
    // Smallest q-exponent any summand with |s| = a can contribute.
    const Rational floor_q = Rational(m * a * a) + a * kmin;
    if (a > 0 && floor_q >= box.q_max && (2 * m * a + kmin > 0 || m == 0)) break;
    for (int sign : {1, -1}) {
      if (a == 0 && sign < 0) continue;
      const std::int64_t s = sign * a;
      for (const auto& t : terms) {
        const Rational q = Rational(m * s * s) + a * t.y;
        const Rational y = Rational(2 * m * s) + sign * t.y;
        out.add_term(q, y, t.coeff);
      }
    }
  }
  return out;
}

}  // namespace mockm11
