#include <set>
#include <thread>

#include "doctest.h"
#include "mockm11/class_numbers.hpp"

using namespace mockm11;

namespace {

long powmod(long b, long e, long m) {
  long r = 1;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Euler's criterion for odd primes.
int legendre(long a, long p) {
  long v = powmod(a, (p - 1) / 2, p);
  return v == 0 ? 0 : (v == 1 ? 1 : -1);
}

long sigma1(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

bool square_mod(long D, long m) {
  for (long x = 0; x < m; ++x)
    if (((x * x - D) % m + m) % m == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("kronecker symbol") {
  CHECK(kronecker_symbol(-3, 2) == -1);
  CHECK(kronecker_symbol(-11, 11) == 0);
  CHECK(kronecker_symbol(-7, 11) == 1);
  CHECK(kronecker_symbol(1, 2) == 1);
  CHECK(kronecker_symbol(7, 2) == 1);
  CHECK(kronecker_symbol(4, 2) == 0);
  CHECK(kronecker_symbol(-5, -1) == -1);
  CHECK(kronecker_symbol(5, -1) == 1);
  for (long p : {3, 5, 7, 11, 13, 101})
    for (long a = -60; a <= 60; ++a) CHECK(kronecker_symbol(a, p) == legendre(a, p));
  for (long a = -40; a <= 40; ++a)
    for (long m = 1; m <= 30; ++m)
      for (long n = 1; n <= 30; ++n) REQUIRE(kronecker_symbol(a, m * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n));
}

TEST_CASE("fundamental decomposition") {
  auto d = fundamental_decomposition(-12);
  CHECK(d.conductor == 2);
  CHECK(d.fundamental == -3);
  d = fundamental_decomposition(-4);
  CHECK(d.conductor == 1);
  CHECK(d.fundamental == -4);
  d = fundamental_decomposition(-75);
  CHECK(d.conductor == 5);
  CHECK(d.fundamental == -3);
  CHECK(fundamental_decomposition(-16).fundamental == -4);
  CHECK_THROWS_AS(fundamental_decomposition(-5), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_decomposition(4), std::invalid_argument);
}

TEST_CASE("reduced forms") {
  auto f3 = reduced_forms(-3);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].form == BinaryQF{1, 1, 1});
  CHECK(f3[0].stabilizer == 6);
  auto f4 = reduced_forms(-4);
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].form == BinaryQF{1, 0, 1});
  CHECK(f4[0].stabilizer == 4);
  auto f23 = reduced_forms(-23);
  REQUIRE(f23.size() == 3);
  std::set<std::tuple<long, long, long>> got;
  for (const auto& f : f23) {
    got.insert({f.form.a, f.form.b, f.form.c});
    CHECK(f.stabilizer == 2);
    CHECK(f.form.discriminant() == -23);
    CHECK(f.form.positive_definite());
  }
  CHECK(got == std::set<std::tuple<long, long, long>>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}});
  CHECK_THROWS_AS(reduced_forms(0), std::invalid_argument);
  CHECK_THROWS_AS(reduced_forms(-6), std::invalid_argument);
}

TEST_CASE("Hurwitz class numbers") {
  CHECK(hurwitz_H(-3) == make_rational(1, 3));
  CHECK(hurwitz_H(-4) == make_rational(1, 2));
  CHECK(hurwitz_H(0) == make_rational(-1, 12));
  CHECK(24 * hurwitz_H(-23) == 72);
  CHECK(hurwitz_H(-6) == 0);
  CHECK(hurwitz_H(-5) == 0);
  CHECK_THROWS_AS(hurwitz_H(3), std::invalid_argument);
}

TEST_CASE("Kronecker-Hurwitz class number relation") {
  for (long n = 1; n <= 120; ++n) {
    Rational lhs = 0;
    for (long s = -2 * n; s <= 2 * n; ++s)
      if (s * s <= 4 * n) lhs += hurwitz_H(s * s - 4 * n);
    long mins = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) mins += std::min(d, n / d);
    CHECK(lhs == 2 * sigma1(n) - mins);
  }
}

TEST_CASE("H memo is consistent under concurrent use") {
  std::vector<std::thread> pool;
  std::vector<Rational> sums(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([t, &sums] {
      for (long D = -3; D >= -2000; --D) sums[t] += hurwitz_H(D);
    });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) CHECK(sums[t] == sums[0]);
}

TEST_CASE("index and coset representatives") {
  CHECK(index_iota(1) == 1);
  CHECK(index_iota(11) == 12);
  CHECK(index_iota(6) == 12);
  CHECK(index_iota(8) == 12);
  for (long N = 1; N <= 30; ++N) {
    auto reps = coset_reps_gamma0(N);
    REQUIRE(reps.size() == static_cast<std::size_t>(index_iota(N)));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto& g = reps[i];
      CHECK(g.a * g.d - g.b * g.c == 1);
      // Pairwise inequivalent: g_i g_j^{-1} is never in Gamma0(N).
      for (std::size_t j = 0; j < i; ++j) {
        const auto& h = reps[j];
        const long lower_left = g.c * h.d - g.d * h.c;
        CHECK(lower_left % N != 0);
      }
    }
  }
  auto r1 = coset_reps_gamma0(1);
  CHECK((r1[0].a == 1 && r1[0].b == 0 && r1[0].c == 0 && r1[0].d == 1));
}

TEST_CASE("generalized H examples") {
  CHECK(generalized_H(2, -3) == 0);
  CHECK(generalized_H(11, -7) == 2);
  CHECK(generalized_H(6, -3) == 0);
  CHECK(generalized_H(1, -23) == hurwitz_H(-23));
  CHECK(generalized_H(5, 0) == make_rational(-6, 12));
  CHECK_THROWS_AS(generalized_H(2, 5), std::invalid_argument);
}

TEST_CASE("Cohen-Eisenstein coefficients") {
  CHECK(cohen_eisenstein_coeff(2, -3) == make_rational(1, 3));
  CHECK(cohen_eisenstein_coeff(11, -7) == 0);
  CHECK(cohen_eisenstein_coeff(2, 0) == make_rational(1, 24));
  CHECK(cohen_eisenstein_coeff(7, 0) == make_rational(6, 24));
  CHECK_THROWS_AS(cohen_eisenstein_coeff(4, -3), std::invalid_argument);
  CHECK_THROWS_AS(cohen_eisenstein_coeff(3, 1), std::invalid_argument);
}

TEST_CASE("prime-level identities") {
  for (long N : {2, 3, 5, 7, 11}) {
    for (long D = -3; D >= -500; --D) {
      if (!is_discriminant(D)) continue;
      const Rational h = hurwitz_H(D), hn = generalized_H(N, D), hce = cohen_eisenstein_coeff(N, D);
      REQUIRE(h == hce + hn / 2);
      CHECK(hn >= 0);
      if (!square_mod(D, 4 * N)) CHECK(hn == 0);
      if (is_fundamental_discriminant(D)) {
        CHECK(hn == (1 + kronecker_symbol(D, N)) * h);
        CHECK(hce == make_rational(1 - kronecker_symbol(D, N), 2) * h);
      }
    }
  }
}

TEST_CASE("composite-level H_N vanishes off squares mod 4N") {
  for (long N : {4, 6, 8, 9, 10, 12})
    for (long D = -3; D >= -200; --D) {
      if (!is_discriminant(D)) continue;
      const Rational hn = generalized_H(N, D);
      CHECK(hn >= 0);
      if (!square_mod(D, 4 * N)) CHECK(hn == 0);
      // Total mass over all cosets of the trivial condition is iota(N) H(D).
      Rational mass = 0;
      for (const auto& f : reduced_forms(D)) mass += make_rational(2 * index_iota(N), f.stabilizer);
      CHECK(mass == index_iota(N) * hurwitz_H(D));
    }
}

TEST_CASE("R_N tables") {
  auto r1 = series_table(SeriesKind::R_N, 1, -108);
  CHECK(r1 == series_table(SeriesKind::H_N, 1, -108).scaled(12));
  for (long N : {1, 2, 3, 4, 5, 6, 7, 8, 11}) CHECK(series_table(SeriesKind::R_N, N, -20).constant_term() == -1);
  CHECK(2 * series_table(SeriesKind::R_N, 2, -10).at(-3) == -8);
  for (long N : {1, 2, 3, 4, 5, 6, 8}) {
    auto t = series_table(SeriesKind::R_N, N, -108);
    for (const auto& [k, c] : t.coefficients()) {
      INFO("N=" << N << " D=" << k.first);
      CHECK(is_integer(2 * c));
    }
  }
  // At level 11 only the combination with the weight-2 cusp form is integral.
  auto r11 = series_table(SeriesKind::R_N, 11, -108);
  CHECK(2 * r11.at(-11) == make_rational(-1, 5));
  for (const auto& [k, c] : r11.coefficients()) CHECK(is_integer(10 * c));
  CHECK_THROWS_AS(series_table(SeriesKind::HCE_N, 4, -10), std::invalid_argument);
  CHECK_THROWS_AS(series_table(SeriesKind::R_N, 0, -10), std::invalid_argument);
}

TEST_CASE("JacobiCoeffTable storage and CSV") {
  auto t = series_table(SeriesKind::H_N, 1, -12);
  const std::string csv = t.to_csv();
  CHECK(csv.rfind("D,coefficient\n0,-1/12\n-3,1/3\n-4,1/2\n-7,1\n-8,1\n-11,1\n-12,4/3\n", 0) == 0);
  CHECK(JacobiCoeffTable::from_csv(csv) == t);
  CHECK(t.at(-5) == 0);
  CHECK_THROWS_AS(t.at(-13), std::out_of_range);
  CHECK(t.holomorphic());

  JacobiCoeffTable m2(2, 0, -16);
  m2.set(-4, 5, 2);
  m2.set(1, 7, 1);
  CHECK(m2.at(-4, 2) == 5);
  CHECK(m2.at(-4, -2) == 5);
  CHECK(m2.at(-4, 0) == 0);
  CHECK(!m2.holomorphic());
  CHECK_THROWS_AS(m2.set(-4, 1, 1), std::invalid_argument);
  CHECK(JacobiCoeffTable::from_csv(m2.to_csv(), 2, 0).at(1, 1) == 7);

  auto s = t.to_series(Box::q_only(4));
  CHECK(s.coefficient(1, 1) == make_rational(1, 3));
  CHECK(s.coefficient(1, 0) == make_rational(1, 2));
  CHECK(s.coefficient(2, 1) == 1);
  CHECK(s.coefficient(0, 0) == make_rational(-1, 12));
  CHECK(s.coefficient(3, 0) == make_rational(4, 3));
  CHECK_THROWS_AS(t.to_series(Box::q_only(5)), std::domain_error);
}
