#include <random>

#include "doctest.h"
#include "mockm11/builders.hpp"
#include "mockm11/series.hpp"

using namespace mockm11;

namespace {

const Convention FP = Convention::FinitePolynomial;
const Convention AN = Convention::AnnulusQltYlt1;

QYSeries poly(Convention c, Box box, std::initializer_list<std::tuple<Rational, Rational, Rational>> terms) {
  QYSeries s(c, std::move(box));
  for (const auto& [q, y, v] : terms) s.add_term(q, y, v);
  return s;
}

// Euler's pentagonal number theorem, independent of the product code.
std::vector<long> pentagonal(int top) {
  std::vector<long> v(top + 1, 0);
  for (int k = -top; k <= top; ++k) {
    const int e = k * (3 * k - 1) / 2;
    if (e >= 0 && e <= top) v[e] += (k % 2 == 0) ? 1 : -1;
  }
  return v;
}

std::vector<long> naive_mul(const std::vector<long>& a, const std::vector<long>& b, int top) {
  std::vector<long> c(top + 1, 0);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<long> dilate(const std::vector<long>& a, int k, int top) {
  std::vector<long> c(top + 1, 0);
  for (int i = 0; i * k <= top && i < static_cast<int>(a.size()); ++i) c[i * k] = a[i];
  return c;
}

QYSeries random_series(std::mt19937& rng, Box box) {
  std::uniform_int_distribution<int> qd(0, 5), yd(-3, 3), cd(-4, 4);
  QYSeries s(FP, std::move(box));
  for (int i = 0; i < 8; ++i) s.add_term(make_rational(qd(rng), 2), yd(rng), cd(rng));
  return s;
}

}  // namespace

TEST_CASE("difference of squares") {
  auto a = poly(FP, Box::q_only(10), {{0, 0, 1}, {1, 0, 1}});
  auto b = poly(FP, Box::q_only(10), {{0, 0, 1}, {1, 0, -1}});
  auto p = a * b;
  CHECK(p.serialize() == "0/1 0 1/1\n2/1 0 -1/1\n");
  CHECK(p.box().q_max == 10);
}

TEST_CASE("theta_{1,0} + theta_{1,1} covers every s once") {
  const Box box = Box::q_only(30);
  auto s = theta_mr(ThetaSpec::make(1, 0), box) + theta_mr(ThetaSpec::make(1, 1), box);
  int count = 0;
  for (const auto& t : s.terms()) {
    CHECK(t.coeff == 1);
    CHECK(t.q == t.y * t.y / 4);
    ++count;
  }
  CHECK(count == 21);  // |s| <= 10
}

TEST_CASE("products shrink the box to what the factors determine") {
  auto a = poly(FP, Box::q_only(5), {{1, 0, 1}});
  auto b = poly(FP, Box::q_only(3), {{2, 0, 1}});
  CHECK((a * b).box().q_max == 4);

  auto tail = poly(AN, Box::q_y(3, 6), {{0, 0, 1}, {0, 1, 1}});
  auto lift = poly(AN, Box::q_only(3), {{0, 2, 1}, {1, -1, 1}});
  CHECK((tail * lift).box().y_max == Rational(5));
}

TEST_CASE("series_invert geometric examples") {
  auto one_minus_y = poly(AN, Box::q_only(1), {{0, 0, 1}, {0, 1, -1}});
  auto inv = series_invert(one_minus_y, {{0, 1}}, Box::q_y(1, 12));
  for (int k = 0; k < 12; ++k) CHECK(inv.coefficient(0, k) == 1);
  CHECK(inv.size() == 12);
  CHECK(inv.box().y_max == Rational(12));

  auto wp = poly(AN, Box::q_only(1), {{0, 1, 1}, {0, 0, -2}, {0, -1, 1}});
  auto kern = series_invert(wp, {{0, 1}}, Box::q_y(1, 20));
  CHECK(kern.coefficient(0, 0) == 0);
  for (int k = 1; k < 20; ++k) CHECK(kern.coefficient(0, k) == k);
  CHECK(kern.size() == 19);
  CHECK(agree_on_common_box(wp * kern, QYSeries::constant(1, AN, Box::q_y(1, 20))));
}

TEST_CASE("series_invert rejects monomials that are not small") {
  auto a = poly(AN, Box::q_only(1), {{0, 0, 1}, {0, 1, -1}});
  CHECK_THROWS_AS(series_invert(a, {{0, -1}}, Box::q_y(1, 5)), std::domain_error);
  auto yonly = poly(AN, Box::q_only(1), {{0, 0, 1}, {0, 1, -1}});
  CHECK_THROWS_AS(series_invert(yonly, {}, Box::q_y(1, 5)), std::domain_error);
  CHECK_THROWS_AS(series_invert(yonly, {{0, 1}}, Box::q_only(1)), std::invalid_argument);
  CHECK_THROWS_AS(series_invert(QYSeries(AN, Box::q_only(1)), {}, Box::q_only(1)), std::domain_error);
}

TEST_CASE("eta matches the pentagonal oracle and inverts") {
  const Box box = Box::q_only(40);
  auto eta = eta_expansion(box);
  auto pent = pentagonal(39);
  for (int n = 0; n <= 38; ++n) CHECK(eta.coefficient(make_rational(1, 24) + n, 0) == pent[n]);
  CHECK(eta.q_denominator() % 24 == 0);

  auto inv = series_invert(eta, {}, box);
  CHECK(inv.min_q() == make_rational(-1, 24));
  CHECK(inv.coefficient(make_rational(-1, 24), 0) == 1);
  CHECK(inv.coefficient(make_rational(47, 24), 0) == 2);  // p(2)
  auto one = eta * inv;
  CHECK(agree_on_common_box(one, QYSeries::constant(1, FP, one.box())));
  CHECK(one.box().q_max >= 39);
}

TEST_CASE("eta quotients against naive products") {
  const int top = 30;
  auto p1 = pentagonal(top);
  auto p11 = dilate(p1, 11, top);
  auto direct = naive_mul(naive_mul(p1, p1, top), naive_mul(p11, p11, top), top);
  auto s = eta_quotient({{1, 2}, {11, 2}}, Box::q_only(top + 1));
  CHECK(s.min_q() == 1);
  for (int n = 0; n < top; ++n) CHECK(s.coefficient(1 + n, 0) == direct[n]);
  CHECK(direct[1] == -2);
  CHECK(direct[2] == -1);
  CHECK(direct[3] == 2);

  auto tq = eta_quotient({{4, 5}, {16, 1}, {2, -2}, {8, -1}}, Box::q_only(12));
  CHECK(tq.min_q() == 1);
  CHECK(tq.coefficient(1, 0) == 1);
}

TEST_CASE("E4 leading coefficients") {
  auto e4 = eisenstein_E4(Box::q_only(6));
  CHECK(e4.coefficient(0, 0) == 1);
  CHECK(e4.coefficient(1, 0) == 240);
  CHECK(e4.coefficient(2, 0) == 2160);
  CHECK(e4.coefficient(5, 0) == 240 * 126);
}

TEST_CASE("eta^24 gives Ramanujan tau") {
  auto d = eta_quotient({{1, 24}}, Box::q_only(5));
  CHECK(d.coefficient(1, 0) == 1);
  CHECK(d.coefficient(2, 0) == -24);
  CHECK(d.coefficient(3, 0) == 252);
  CHECK(d.coefficient(4, 0) == -1472);
}

TEST_CASE("theta_{m,r} examples and symmetries") {
  const Box box = Box::q_only(40);
  auto t11 = theta_mr(ThetaSpec::make(1, 1), Box::q_only(3));
  CHECK(t11.serialize() == "1/4 -1 1/1\n1/4 1 1/1\n9/4 -3 1/1\n9/4 3 1/1\n");

  auto d4 = theta_mr(ThetaSpec::make(4, 0, true), box) - theta_mr(ThetaSpec::make(4, 4, true), box);
  QYSeries expect4(FP, box);
  for (int k = 0; k * k < 40; ++k) expect4.add_term(k * k, 0, k == 0 ? 1 : (k % 2 ? -2 : 2));
  CHECK(d4 == expect4);

  auto d16 = theta_mr(ThetaSpec::make(16, 0, true), box) - theta_mr(ThetaSpec::make(16, 16, true), box);
  QYSeries expect16(FP, box);
  for (int k = -5; k <= 5; ++k) expect16.add_term(4 * k * k, 0, k % 2 ? -1 : 1);
  CHECK(d16 == expect16);

  for (int m = 1; m <= 4; ++m)
    for (int r = 0; r < 2 * m; ++r) {
      CHECK(theta_mr(ThetaSpec::make(m, r), box) == theta_mr(ThetaSpec::make(m, r + 2 * m), box));
      CHECK(theta_mr(ThetaSpec::make(m, r), box).y_reflected() == theta_mr(ThetaSpec::make(m, -r), box));
    }
  CHECK_THROWS_AS(ThetaSpec::make(0, 0), std::invalid_argument);
}

TEST_CASE("classical thetas") {
  const Box box = Box::q_only(12);
  auto t1 = jacobi_theta_classical(1, box);
  CHECK(t1.series.at_y_equal_one().empty());

  auto sq = (t1 * t1).rational();
  CHECK(sq.min_q() == make_rational(1, 4));
  auto lead = sq.row(make_rational(1, 4));
  CHECK(lead.size() == 3);
  CHECK(lead[Rational(1)] == -1);
  CHECK(lead[Rational(0)] == 2);
  CHECK(lead[Rational(-1)] == -1);

  auto t2 = jacobi_theta_classical(2, box).series.at_y_equal_one();
  for (int n : {0, 1, 3, 6, 10}) CHECK(t2.coefficient(make_rational(1, 8) + n, 0) == 2);
  CHECK(t2.coefficient(make_rational(1, 8) + 2, 0) == 0);
  CHECK(t2.size() == 5);

  // Jacobi triple product.
  CHECK(theta1_product_form(box) == t1.series);
  CHECK(t1.i_power == 3);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20261019);
  const Box box = Box::q_only(4);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_series(rng, box), b = random_series(rng, box), c = random_series(rng, box);
    CHECK(agree_on_common_box((a * b) * c, a * (b * c)));
    CHECK((a * b) == (b * a));
    CHECK(agree_on_common_box(a * (b + c), a * b + a * c));
    CHECK((a + b) - b == a);
    CHECK(a.scaled(3) == a + a + a);
  }
}

TEST_CASE("series_invert is a two-sided inverse") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> cd(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    QYSeries a(FP, Box::q_only(6));
    a.add_term(make_rational(1, 2), 1, 2 + trial % 3);
    for (int n = 1; n < 10; ++n) a.add_term(make_rational(1, 2) + make_rational(n, 2), cd(rng), cd(rng));
    auto inv = series_invert(a, {}, Box::q_only(6));
    auto left = inv * a, right = a * inv;
    CHECK(agree_on_common_box(left, QYSeries::constant(1, FP, left.box())));
    CHECK(agree_on_common_box(right, QYSeries::constant(1, FP, right.box())));
    CHECK(left.box().q_max == make_rational(11, 2));
  }
}

TEST_CASE("averaging operator") {
  const Box box = Box::q_y(8, 12);
  auto wp = poly(AN, Box::q_only(1), {{0, 1, 1}, {0, 0, -2}, {0, -1, 1}});
  auto kern = series_invert(wp, {{0, 1}}, Box::q_y(1, 12));
  auto av = averaging_operator(1, kern, box);
  for (int k = 1; k < 12; ++k) CHECK(av.coefficient(0, k) == k);
  CHECK(av.coefficient(0, 0) == 0);
  CHECK(av.coefficient(2, 3) == 1);  // s = 1, k = 1
  CHECK(av.coefficient(1, 2) == 0);

  // Naive evaluation of the defining sum.
  QYSeries naive(AN, box);
  for (int s = -4; s <= 4; ++s)
    for (int k = 1; k < 30; ++k) {
      if (s >= 0)
        naive.add_term(s * s + s * k, 2 * s + k, k);
      else
        naive.add_term(s * s - s * k, 2 * s - k, k);
    }
  CHECK(av == naive);

  auto av0 = averaging_operator(0, kern, Box::q_y(5, 12));
  QYSeries naive0(AN, Box::q_y(5, 12));
  for (int s = -6; s <= 6; ++s)
    for (int k = 1; k < 30; ++k) naive0.add_term(s >= 0 ? s * k : -s * k, s >= 0 ? k : -k, k);
  CHECK(av0 == naive0);

  CHECK_THROWS_AS(averaging_operator(1, kern, Box::q_y(20, 12)), std::domain_error);
  CHECK_THROWS_AS(averaging_operator(0, wp, box), std::domain_error);
}

TEST_CASE("canonical serialization round-trips") {
  auto t = jacobi_theta_classical(4, Box::q_only(5)).series;
  auto back = QYSeries::parse(t.serialize(), FP, t.box());
  CHECK(back == t);
  CHECK_THROWS_AS(QYSeries::parse("1/2 3", FP, t.box()), std::invalid_argument);
}

TEST_CASE("convention mismatch is rejected") {
  auto a = QYSeries::constant(1, FP, Box::q_only(3));
  auto b = QYSeries::constant(1, AN, Box::q_only(3));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("zero coefficients are never stored") {
  QYSeries s(FP, Box::q_only(3));
  s.add_term(1, 1, 2);
  s.add_term(1, 1, -2);
  CHECK(s.empty());
  s.add_term(5, 0, 1);
  CHECK(s.empty());
}
