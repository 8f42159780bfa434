#ifndef MOCKM11_CHARACTERS_HPP
#define MOCKM11_CHARACTERS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mockm11/rational.hpp"

namespace mockm11 {

// rational + surd * sqrt(-radicand), radicand in {2, 11}; radicand is 0
// exactly when surd is 0.
struct AlgebraicValue {
  Rational rational;
  Rational surd;
  int radicand = 0;

  AlgebraicValue() = default;
  AlgebraicValue(const Rational& r) : rational(r) {}
  AlgebraicValue(const Rational& r, const Rational& s, int d);

  // "r" or "r|s|d".
  static AlgebraicValue parse(std::string_view text);

  bool is_rational() const { return surd == 0; }
  AlgebraicValue conj() const;
  // |x|^2, always rational.
  Rational norm() const;

  friend AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator-(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b);
  bool operator==(const AlgebraicValue& other) const;
};

std::string to_string(const AlgebraicValue& v);

inline constexpr std::size_t kClassCount = 10;
using ClassFunction = std::array<AlgebraicValue, kClassCount>;

class CharacterTable {
 public:
  // Parses the bundled CSV layout and validates both orthogonality relations.
  static CharacterTable from_csv(std::string_view text);

  const std::vector<std::string>& classes() const { return classes_; }
  int element_order(std::size_t cls) const { return orders_.at(cls); }
  std::int64_t centralizer_order(std::size_t cls) const { return centralizers_.at(cls); }
  std::int64_t class_size(std::size_t cls) const { return group_order() / centralizers_.at(cls); }
  std::int64_t group_order() const { return centralizers_.at(0); }
  const ClassFunction& character(std::size_t i) const { return chars_.at(i - 1); }  // 1-based
  std::size_t size() const { return chars_.size(); }
  std::size_t class_index(std::string_view label) const;

 private:
  std::vector<std::string> classes_;
  std::vector<int> orders_;
  std::vector<std::int64_t> centralizers_;
  std::vector<ClassFunction> chars_;
};

const CharacterTable& m11_character_table();

struct VirtualCharacter {
  std::array<std::int64_t, kClassCount> multiplicities{};

  ClassFunction values(const CharacterTable& table) const;
  std::string to_string() const;
};

// sum over classes of x(g) conj(y(g)) / |C(g)|.
AlgebraicValue char_inner_product(const ClassFunction& x, const ClassFunction& y,
                                  const CharacterTable& table = m11_character_table());

struct IdentityCheck {
  std::string name;
  bool passed;
};

std::vector<IdentityCheck> delta_identities();

// Row and column orthogonality of the bundled table.
std::vector<IdentityCheck> orthogonality_checks();

}  // namespace mockm11

#endif
