#include "mockm11/characters.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mockm11/data.hpp"

namespace mockm11 {

namespace {

// Exact sums that may mix sqrt(-2) and sqrt(-11) parts.
struct MixedSum {
  Rational r, s2, s11;

  void add(const AlgebraicValue& v) {
    r += v.rational;
    if (v.radicand == 2) s2 += v.surd;
    if (v.radicand == 11) s11 += v.surd;
  }

  AlgebraicValue value() const {
    if (s2 != 0 && s11 != 0) throw std::domain_error("value mixes sqrt(-2) and sqrt(-11)");
    if (s2 != 0) return AlgebraicValue(r, s2, 2);
    if (s11 != 0) return AlgebraicValue(r, s11, 11);
    return AlgebraicValue(r);
  }
};

}  // namespace

AlgebraicValue::AlgebraicValue(const Rational& r, const Rational& s, int d) : rational(r), surd(s), radicand(d) {
  if (surd == 0) {
    radicand = 0;
  } else if (d != 2 && d != 11) {
    throw std::invalid_argument("AlgebraicValue: radicand must be 2 or 11");
  }
}

AlgebraicValue AlgebraicValue::parse(std::string_view text) {
  std::string s(text);
  const auto p1 = s.find('|');
  if (p1 == std::string::npos) return AlgebraicValue(parse_rational(s));
  const auto p2 = s.find('|', p1 + 1);
  if (p2 == std::string::npos) throw std::invalid_argument("AlgebraicValue::parse: expected r|s|d, got " + s);
  return AlgebraicValue(parse_rational(s.substr(0, p1)), parse_rational(s.substr(p1 + 1, p2 - p1 - 1)),
                        std::stoi(s.substr(p2 + 1)));
}

AlgebraicValue AlgebraicValue::conj() const { return AlgebraicValue(rational, -surd, radicand); }

Rational AlgebraicValue::norm() const { return rational * rational + surd * surd * radicand; }

AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b) {
  MixedSum m;
  m.add(a);
  m.add(b);
  return m.value();
}

AlgebraicValue operator-(const AlgebraicValue& a, const AlgebraicValue& b) {
  return a + AlgebraicValue(-b.rational, -b.surd, b.radicand);
}

AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.radicand != 0 && b.radicand != 0 && a.radicand != b.radicand)
    throw std::domain_error("AlgebraicValue: product of sqrt(-2) and sqrt(-11) terms");
  const int d = a.radicand != 0 ? a.radicand : b.radicand;
  Rational r = a.rational * b.rational - a.surd * b.surd * d;
  Rational s = a.rational * b.surd + a.surd * b.rational;
  return AlgebraicValue(r, s, d);
}

bool AlgebraicValue::operator==(const AlgebraicValue& other) const {
  return rational == other.rational && surd == other.surd && radicand == other.radicand;
}

std::string to_string(const AlgebraicValue& v) {
  if (v.is_rational()) return to_string(v.rational);
  std::string out = v.rational == 0 ? "" : to_string(v.rational) + (v.surd > 0 ? "+" : "");
  return out + to_string(v.surd) + "*sqrt(-" + std::to_string(v.radicand) + ")";
}

CharacterTable CharacterTable::from_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.size() != kClassCount + 1 || rows[0].size() != kClassCount + 1)
    throw std::runtime_error("character table: expected a 10x10 table with header");
  CharacterTable t;
  for (std::size_t j = 1; j <= kClassCount; ++j) {
    const std::string& label = rows[0][j];
    t.classes_.push_back(label);
    t.orders_.push_back(std::stoi(label));
  }
  for (std::size_t i = 1; i <= kClassCount; ++i) {
    ClassFunction f;
    for (std::size_t j = 1; j <= kClassCount; ++j) f[j - 1] = AlgebraicValue::parse(rows[i][j]);
    t.chars_.push_back(f);
  }
  for (std::size_t j = 0; j < kClassCount; ++j) {
    Rational c = 0;
    for (const auto& f : t.chars_) c += f[j].norm();
    if (!is_integer(c) || c <= 0) throw std::runtime_error("character table: column norms are not positive integers");
    t.centralizers_.push_back(to_int64(c));
  }
  std::int64_t total = 0;
  for (std::size_t j = 0; j < kClassCount; ++j) {
    if (t.group_order() % t.centralizers_[j] != 0)
      throw std::runtime_error("character table: centralizer order does not divide the group order");
    total += t.class_size(j);
  }
  if (total != t.group_order()) throw std::runtime_error("character table: class sizes do not sum to the group order");
  for (std::size_t a = 1; a <= kClassCount; ++a)
    for (std::size_t b = 1; b <= kClassCount; ++b)
      if (!(char_inner_product(t.character(a), t.character(b), t) == AlgebraicValue(Rational(a == b ? 1 : 0))))
        throw std::runtime_error("character table: rows are not orthonormal");
  return t;
}

std::size_t CharacterTable::class_index(std::string_view label) const {
  for (std::size_t j = 0; j < classes_.size(); ++j)
    if (classes_[j] == label) return j;
  throw std::invalid_argument("unknown conjugacy class '" + std::string(label) + "'");
}

const CharacterTable& m11_character_table() {
  static std::once_flag flag;
  static CharacterTable table;
  std::call_once(flag, [] { table = CharacterTable::from_csv(read_data_file("m11_character_table.csv")); });
  return table;
}

ClassFunction VirtualCharacter::values(const CharacterTable& table) const {
  ClassFunction out;
  for (std::size_t j = 0; j < kClassCount; ++j) {
    MixedSum m;
    for (std::size_t i = 0; i < kClassCount; ++i)
      if (multiplicities[i] != 0) m.add(table.character(i + 1)[j] * AlgebraicValue(Rational(multiplicities[i])));
    out[j] = m.value();
  }
  return out;
}

std::string VirtualCharacter::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kClassCount; ++i) {
    const std::int64_t m = multiplicities[i];
    if (m == 0) continue;
    if (!out.empty() || m < 0) out += m < 0 ? "-" : "+";
    if (m != 1 && m != -1) out += std::to_string(m < 0 ? -m : m);
    out += "chi" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

AlgebraicValue char_inner_product(const ClassFunction& x, const ClassFunction& y, const CharacterTable& table) {
  MixedSum m;
  for (std::size_t j = 0; j < kClassCount; ++j) {
    const AlgebraicValue term = x[j] * y[j].conj();
    m.add(AlgebraicValue(term.rational / table.centralizer_order(j), term.surd / table.centralizer_order(j),
                         term.radicand));
  }
  return m.value();
}

namespace {

VirtualCharacter combo(std::initializer_list<std::pair<int, int>> terms) {
  VirtualCharacter v;
  for (const auto& [i, m] : terms) v.multiplicities[i - 1] += m;
  return v;
}

ClassFunction delta(const CharacterTable& t, int order, const Rational& scale) {
  ClassFunction f;
  for (std::size_t j = 0; j < kClassCount; ++j) f[j] = AlgebraicValue(t.element_order(j) == order ? scale : Rational(0));
  return f;
}

ClassFunction add(const ClassFunction& a, const ClassFunction& b, const Rational& sb = 1) {
  ClassFunction out;
  for (std::size_t j = 0; j < kClassCount; ++j) out[j] = a[j] + b[j] * AlgebraicValue(sb);
  return out;
}

bool vanishes_off_order(const ClassFunction& f, const CharacterTable& t, int order) {
  for (std::size_t j = 0; j < kClassCount; ++j)
    if (t.element_order(j) != order && !(f[j] == AlgebraicValue())) return false;
  return true;
}

}  // namespace

std::vector<IdentityCheck> delta_identities() {
  const CharacterTable& t = m11_character_table();
  std::vector<IdentityCheck> out;
  const auto d11 = combo({{1, 2}, {2, -2}, {3, -2}, {4, -2}, {6, -1}, {7, -1}, {9, 2}}).values(t);
  out.push_back({"11*delta_11 = 2chi1-2chi2-2chi3-2chi4-chi6-chi7+2chi9", d11 == delta(t, 11, 11)});
  const auto d8 = combo({{1, 1}, {5, -1}, {9, -1}, {10, 1}}).values(t);
  out.push_back({"4*delta_8 = chi1-chi5-chi9+chi10", d8 == delta(t, 8, 4)});
  const auto c6 = t.character(6), c7 = t.character(7);
  const auto half = delta(t, 11, make_rational(11, 2));
  const auto v1 = combo({{1, 1}, {2, -1}, {3, -1}, {4, -1}, {6, -1}, {9, 1}}).values(t);
  const auto v2 = combo({{1, 1}, {2, -1}, {3, -1}, {4, -1}, {7, -1}, {9, 1}}).values(t);
  out.push_back({"11/2*delta_11 - chi6/2 + chi7/2 = chi1-chi2-chi3-chi4-chi6+chi9",
                 add(add(half, c6, make_rational(-1, 2)), c7, make_rational(1, 2)) == v1});
  out.push_back({"11/2*delta_11 + chi6/2 - chi7/2 = chi1-chi2-chi3-chi4-chi7+chi9",
                 add(add(half, c6, make_rational(1, 2)), c7, make_rational(-1, 2)) == v2});
  out.push_back({"chi6-chi7 vanishes off order 11", vanishes_off_order(add(c6, c7, -1), t, 11)});
  out.push_back({"chi3-chi4 vanishes off order 8", vanishes_off_order(add(t.character(3), t.character(4), -1), t, 8)});
  return out;
}

std::vector<IdentityCheck> orthogonality_checks() {
  const CharacterTable& t = m11_character_table();
  bool rows = true;
  for (std::size_t a = 1; a <= kClassCount; ++a)
    for (std::size_t b = 1; b <= kClassCount; ++b)
      rows = rows && char_inner_product(t.character(a), t.character(b)) == AlgebraicValue(Rational(a == b ? 1 : 0));
  bool cols = true;
  for (std::size_t g = 0; g < kClassCount; ++g)
    for (std::size_t h = 0; h < kClassCount; ++h) {
      MixedSum m;
      for (std::size_t i = 1; i <= kClassCount; ++i) m.add(t.character(i)[g] * t.character(i)[h].conj());
      const AlgebraicValue expect(g == h ? Rational(t.centralizer_order(g)) : Rational(0));
      cols = cols && m.value() == expect;
    }
  return {{"row orthogonality", rows},
          {"column orthogonality", cols},
          {"|C(1A)| = 7920", t.centralizer_order(0) == 7920}};
}

}  // namespace mockm11
