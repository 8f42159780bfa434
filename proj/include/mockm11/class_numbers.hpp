#ifndef MOCKM11_CLASS_NUMBERS_HPP
#define MOCKM11_CLASS_NUMBERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mockm11/jacobi_table.hpp"
#include "mockm11/rational.hpp"

namespace mockm11 {

struct BinaryQF {
  std::int64_t a, b, c;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool positive_definite() const { return discriminant() < 0 && a > 0; }
  std::int64_t eval(std::int64_t x, std::int64_t y) const { return a * x * x + b * x * y + c * y * y; }
  bool operator==(const BinaryQF&) const = default;
};

struct ReducedForm {
  BinaryQF form;
  int stabilizer;  // order of the SL2(Z) stabilizer, including -1
};

struct Discriminant {
  std::int64_t D;
  std::int64_t conductor;
  std::int64_t fundamental;
};

int kronecker_symbol(std::int64_t a, std::int64_t n);

bool is_fundamental_discriminant(std::int64_t D);
// D = f^2 D0 with D0 fundamental; D < 0 must be a discriminant.
Discriminant fundamental_decomposition(std::int64_t D);

std::vector<ReducedForm> reduced_forms(std::int64_t D);

// Hurwitz class number; memoized and safe to call concurrently.
Rational hurwitz_H(std::int64_t D);

std::int64_t index_iota(std::int64_t N);

struct SL2Z {
  std::int64_t a, b, c, d;
};

// One matrix per right coset of Gamma0(N) in SL2(Z), indexed by P^1(Z/N).
std::vector<SL2Z> coset_reps_gamma0(std::int64_t N);

Rational generalized_H(std::int64_t N, std::int64_t D);
Rational cohen_eisenstein_coeff(std::int64_t N, std::int64_t D);

enum class SeriesKind { H_N, HCE_N, R_N };

JacobiCoeffTable series_table(SeriesKind kind, std::int64_t N, std::int64_t d_min);

Rational r_coefficient(std::int64_t N, std::int64_t D);
// Smallest |D| <= bound at which scale * R_N(D) is not an integer.
std::optional<std::int64_t> r_nonintegral_witness(std::int64_t N, const Rational& scale, std::int64_t bound);
bool is_prime(std::int64_t n);

}  // namespace mockm11

#endif
