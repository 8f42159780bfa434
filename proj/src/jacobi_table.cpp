#include "mockm11/jacobi_table.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace mockm11 {

bool is_discriminant(std::int64_t D) {
  const std::int64_t r = ((D % 4) + 4) % 4;
  return r == 0 || r == 1;
}

JacobiCoeffTable::JacobiCoeffTable(int index, int weight, std::int64_t d_min)
    : index_(index), weight_(weight), d_min_(d_min) {
  if (index <= 0) throw std::invalid_argument("JacobiCoeffTable: index must be positive");
}

JacobiCoeffTable::Key JacobiCoeffTable::normalize(std::int64_t D, int r) const {
  const std::int64_t mod = 2 * index_;
  const std::int64_t rr = ((r % mod) + mod) % mod;
  const std::int64_t m4 = 4 * index_;
  if ((((D - rr * rr) % m4) + m4) % m4 != 0)
    throw std::invalid_argument("JacobiCoeffTable: D=" + std::to_string(D) + " is not r^2 mod 4m for r=" +
                                std::to_string(rr));
  return {D, index_ == 1 ? 0 : static_cast<int>(rr)};
}

void JacobiCoeffTable::set(std::int64_t D, const Rational& c, int r) {
  if (index_ == 1) r = static_cast<int>(((D % 2) + 2) % 2);
  Key k = normalize(D, r);
  if (c == 0)
    coeffs_.erase(k);
  else
    coeffs_[k] = c;
}

Rational JacobiCoeffTable::at(std::int64_t D, int r) const {
  if (D < d_min_)
    throw std::out_of_range("JacobiCoeffTable: D=" + std::to_string(D) + " is below the exact range D>=" +
                            std::to_string(d_min_));
  if (index_ == 1) {
    if (!is_discriminant(D)) return 0;
    r = static_cast<int>(((D % 2) + 2) % 2);
  } else {
    const std::int64_t mod = 2 * index_, m4 = 4 * index_;
    const std::int64_t rr = ((r % mod) + mod) % mod;
    if ((((D - rr * rr) % m4) + m4) % m4 != 0) return 0;
  }
  auto it = coeffs_.find(normalize(D, r));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool JacobiCoeffTable::holomorphic() const {
  return coeffs_.empty() || coeffs_.rbegin()->first.first <= 0;
}

JacobiCoeffTable JacobiCoeffTable::restricted(std::int64_t d_min) const {
  JacobiCoeffTable t(index_, weight_, std::max(d_min, d_min_));
  for (const auto& [k, c] : coeffs_)
    if (k.first >= t.d_min_) t.coeffs_.emplace(k, c);
  return t;
}

JacobiCoeffTable JacobiCoeffTable::scaled(const Rational& c) const {
  JacobiCoeffTable t(index_, weight_, d_min_);
  if (c == 0) return t;
  for (const auto& [k, v] : coeffs_) t.coeffs_.emplace(k, v * c);
  return t;
}

QYSeries JacobiCoeffTable::to_series(const Box& box) const {
  if (!holomorphic()) throw std::domain_error("to_series: table has D > 0 keys");
  const std::int64_t ntop = to_int64(ceil_of(box.q_max)) - 1;
  if (ntop >= 0 && -4 * index_ * ntop < d_min_)
    throw std::domain_error("to_series: box " + to_string(box) + " exceeds the exact range D>=" + std::to_string(d_min_));
  QYSeries out(Convention::FinitePolynomial, Box::q_only(box.q_max));
  for (std::int64_t n = 0; n <= ntop; ++n)
    for (std::int64_t s = -n * 2 * index_; s <= n * 2 * index_; ++s) {
      const std::int64_t D = s * s - 4 * index_ * n;
      if (D > 0) continue;
      Rational c = at(D, static_cast<int>(s % (2 * index_)));
      if (c != 0) out.add_term(n, s, c);
    }
  return out;
}

std::string JacobiCoeffTable::to_csv() const {
  std::ostringstream os;
  os << (index_ == 1 ? "D,coefficient\n" : "D,r,coefficient\n");
  std::int64_t top = coeffs_.empty() ? 0 : std::max<std::int64_t>(0, coeffs_.rbegin()->first.first);
  for (std::int64_t D = top; D >= d_min_; --D) {
    if (index_ == 1) {
      if (!is_discriminant(D)) continue;
      os << D << ',' << to_string(at(D)) << '\n';
    } else {
      for (int r = 0; r < 2 * index_; ++r) {
        const std::int64_t m4 = 4 * index_;
        if ((((D - static_cast<std::int64_t>(r) * r) % m4) + m4) % m4 != 0) continue;
        os << D << ',' << r << ',' << to_string(at(D, r)) << '\n';
      }
    }
  }
  return os.str();
}

JacobiCoeffTable JacobiCoeffTable::from_csv(std::string_view text, int index, int weight) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<std::tuple<std::int64_t, int, Rational>> rows;
  bool header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    const std::size_t want = index == 1 ? 2 : 3;
    if (cells.size() != want) throw std::invalid_argument("JacobiCoeffTable::from_csv: malformed row '" + line + "'");
    const std::int64_t D = std::stoll(cells[0]);
    const int r = index == 1 ? 0 : std::stoi(cells[1]);
    rows.emplace_back(D, r, parse_rational(cells.back()));
  }
  std::int64_t dmin = 0;
  for (const auto& row : rows) dmin = std::min(dmin, std::get<0>(row));
  JacobiCoeffTable t(index, weight, dmin);
  for (const auto& [D, r, c] : rows) t.set(D, c, r);
  return t;
}

namespace {

JacobiCoeffTable combine(const JacobiCoeffTable& a, const JacobiCoeffTable& b, int sign) {
  if (a.index() != b.index()) throw std::invalid_argument("JacobiCoeffTable: index mismatch");
  JacobiCoeffTable out(a.index(), a.weight(), std::max(a.d_min(), b.d_min()));
  std::map<JacobiCoeffTable::Key, Rational> acc;
  for (const auto& [k, c] : a.coefficients()) acc[k] += c;
  for (const auto& [k, c] : b.coefficients()) acc[k] += sign * c;
  for (const auto& [k, c] : acc)
    if (k.first >= out.d_min()) out.set(k.first, c, k.second);
  return out;
}

}  // namespace

JacobiCoeffTable operator+(const JacobiCoeffTable& a, const JacobiCoeffTable& b) { return combine(a, b, 1); }
JacobiCoeffTable operator-(const JacobiCoeffTable& a, const JacobiCoeffTable& b) { return combine(a, b, -1); }

bool JacobiCoeffTable::operator==(const JacobiCoeffTable& other) const {
  return index_ == other.index_ && d_min_ == other.d_min_ && coeffs_ == other.coeffs_;
}

}  // namespace mockm11
