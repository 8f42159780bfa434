#include "mockm11/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mockm11 {

std::string_view convention_name(Convention c) {
  return c == Convention::FinitePolynomial ? "FinitePolynomial" : "AnnulusQltYlt1";
}

bool Box::contains(const Rational& q, const Rational& y) const {
  return q < q_max && (!y_max || y < *y_max);
}

Box Box::intersect(const Box& other) const {
  Box out{std::min(q_max, other.q_max), y_max};
  if (other.y_max) out.y_max = y_max ? std::min(*y_max, *other.y_max) : *other.y_max;
  return out;
}

std::string to_string(const Box& box) {
  std::string s = "q<" + to_string(box.q_max);
  if (box.y_max) s += ", y<" + to_string(*box.y_max);
  return s;
}

QYSeries::QYSeries(Convention conv, Box box) : conv_(conv), box_(std::move(box)) {}

QYSeries QYSeries::constant(const Rational& c, Convention conv, Box box) {
  QYSeries s(conv, std::move(box));
  s.add_term(0, 0, c);
  return s;
}

QYSeries QYSeries::monomial(const Rational& c, const Rational& q, const Rational& y, Convention conv, Box box) {
  QYSeries s(conv, std::move(box));
  s.add_term(q, y, c);
  return s;
}

std::size_t QYSeries::size() const {
  std::size_t n = 0;
  for (const auto& [r, row] : rows_) n += row.size();
  return n;
}

std::int64_t QYSeries::last_index_below(const Rational& bound, std::int64_t den) {
  Rational scaled = bound * den;
  return to_int64(ceil_of(scaled)) - 1;
}

void QYSeries::regrid(std::int64_t q_den, std::int64_t y_den) {
  if (q_den == q_den_ && y_den == y_den_) return;
  const std::int64_t qf = q_den / q_den_;
  const std::int64_t yf = y_den / y_den_;
  std::map<std::int64_t, Row> rows;
  for (auto& [r, row] : rows_) {
    Row& out = rows[r * qf];
    for (auto& [y, c] : row) out.emplace(y * yf, std::move(c));
  }
  rows_ = std::move(rows);
  q_den_ = q_den;
  y_den_ = y_den;
}

QYSeries QYSeries::regridded(std::int64_t q_den, std::int64_t y_den) const {
  QYSeries s = *this;
  s.regrid(q_den, y_den);
  return s;
}

void QYSeries::prune() {
  const std::int64_t qlast = last_index_below(box_.q_max, q_den_);
  std::optional<std::int64_t> ylast;
  if (box_.y_max) ylast = last_index_below(*box_.y_max, y_den_);
  for (auto it = rows_.begin(); it != rows_.end();) {
    if (it->first > qlast) {
      it = rows_.erase(it);
      continue;
    }
    Row& row = it->second;
    for (auto jt = row.begin(); jt != row.end();) {
      if (jt->second == 0 || (ylast && jt->first > *ylast))
        jt = row.erase(jt);
      else
        ++jt;
    }
    it = row.empty() ? rows_.erase(it) : std::next(it);
  }
  compact_grid();
}

void QYSeries::compact_grid() {
  std::int64_t gq = q_den_, gy = y_den_;
  for (const auto& [r, row] : rows_) {
    gq = std::gcd(gq, r);
    for (const auto& [y, c] : row) gy = std::gcd(gy, y);
  }
  if (gq == 1 && gy == 1) return;
  std::map<std::int64_t, Row> rows;
  for (auto& [r, row] : rows_) {
    Row& out = rows[r / gq];
    for (auto& [y, c] : row) out.emplace(y / gy, std::move(c));
  }
  rows_ = std::move(rows);
  q_den_ /= gq;
  y_den_ /= gy;
}

void QYSeries::add_term(const Rational& q, const Rational& y, const Rational& c) {
  if (c == 0 || !box_.contains(q, y)) return;
  const std::int64_t qd = lcm64(q_den_, to_int64(q.get_den()));
  const std::int64_t yd = lcm64(y_den_, to_int64(y.get_den()));
  regrid(qd, yd);
  const std::int64_t qi = to_int64(Rational(q * q_den_));
  const std::int64_t yi = to_int64(Rational(y * y_den_));
  Row& row = rows_[qi];
  auto [it, inserted] = row.try_emplace(yi, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      row.erase(it);
      if (row.empty()) rows_.erase(qi);
      compact_grid();
    }
  }
}

Rational QYSeries::coefficient(const Rational& q, const Rational& y) const {
  Rational qs = q * q_den_, ys = y * y_den_;
  if (!is_integer(qs) || !is_integer(ys)) return 0;
  auto it = rows_.find(to_int64(qs));
  if (it == rows_.end()) return 0;
  auto jt = it->second.find(to_int64(ys));
  return jt == it->second.end() ? Rational(0) : jt->second;
}

std::vector<Term> QYSeries::terms() const {
  std::vector<Term> out;
  out.reserve(size());
  for (const auto& [r, row] : rows_)
    for (const auto& [y, c] : row) out.push_back({make_rational(r, q_den_), make_rational(y, y_den_), c});
  return out;
}

std::map<Rational, Rational> QYSeries::row(const Rational& q) const {
  std::map<Rational, Rational> out;
  Rational qs = q * q_den_;
  if (!is_integer(qs)) return out;
  auto it = rows_.find(to_int64(qs));
  if (it == rows_.end()) return out;
  for (const auto& [y, c] : it->second) out.emplace(make_rational(y, y_den_), c);
  return out;
}

std::vector<Rational> QYSeries::q_exponents() const {
  std::vector<Rational> out;
  for (const auto& [r, row] : rows_) out.push_back(make_rational(r, q_den_));
  return out;
}

std::optional<Rational> QYSeries::min_q() const {
  if (rows_.empty()) return std::nullopt;
  return make_rational(rows_.begin()->first, q_den_);
}

std::optional<Rational> QYSeries::min_y() const {
  if (rows_.empty()) return std::nullopt;
  std::int64_t m = rows_.begin()->second.begin()->first;
  for (const auto& [r, row] : rows_) m = std::min(m, row.begin()->first);
  return make_rational(m, y_den_);
}

std::optional<Rational> QYSeries::max_y() const {
  if (rows_.empty()) return std::nullopt;
  std::int64_t m = rows_.begin()->second.rbegin()->first;
  for (const auto& [r, row] : rows_) m = std::max(m, row.rbegin()->first);
  return make_rational(m, y_den_);
}

QYSeries QYSeries::operator-() const { return scaled(-1); }

QYSeries QYSeries::scaled(const Rational& c) const {
  QYSeries s(conv_, box_);
  if (c == 0) return s;
  s = *this;
  for (auto& [r, row] : s.rows_)
    for (auto& [y, v] : row) v *= c;
  return s;
}

QYSeries QYSeries::truncated(const Box& box) const {
  QYSeries s = *this;
  s.box_ = box_.intersect(box);
  s.prune();
  return s;
}

QYSeries QYSeries::with_convention(Convention conv) const {
  QYSeries s = *this;
  s.conv_ = conv;
  return s;
}

QYSeries QYSeries::with_box(const Box& box) const {
  QYSeries s = *this;
  s.box_ = box;
  s.prune();
  return s;
}

QYSeries QYSeries::substituted(const Rational& qf, const Rational& yf) const {
  if (qf <= 0) throw std::invalid_argument("substituted: q factor must be positive");
  if (yf == 0) throw std::invalid_argument("substituted: y factor must be nonzero");
  Box box{box_.q_max * qf, std::nullopt};
  if (box_.y_max) {
    if (yf < 0) throw std::invalid_argument("substituted: cannot reflect a y-truncated series");
    box.y_max = *box_.y_max * yf;
  }
  QYSeries s(conv_, box);
  for (const auto& t : terms()) s.add_term(t.q * qf, t.y * yf, t.coeff);
  return s;
}

QYSeries QYSeries::y_reflected() const { return substituted(1, -1); }

QYSeries QYSeries::at_y_equal_one() const {
  if (box_.y_max) throw std::invalid_argument("at_y_equal_one: series is truncated in y");
  QYSeries s(conv_, box_);
  for (const auto& [r, row] : rows_) {
    Rational sum = 0;
    for (const auto& [y, c] : row) sum += c;
    s.add_term(make_rational(r, q_den_), 0, sum);
  }
  return s;
}

std::string QYSeries::serialize() const {
  std::ostringstream os;
  for (const auto& [r, row] : rows_)
    for (const auto& [y, c] : row)
      os << r << '/' << q_den_ << ' ' << to_string(make_rational(y, y_den_)) << ' ' << to_fraction_string(c) << '\n';
  return os.str();
}

QYSeries QYSeries::parse(std::string_view text, Convention conv, Box box) {
  QYSeries s(conv, std::move(box));
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string q, y, c, extra;
    if (!(ls >> q >> y >> c) || (ls >> extra))
      throw std::invalid_argument("QYSeries::parse: malformed line '" + line + "'");
    s.add_term(parse_rational(q), parse_rational(y), parse_rational(c));
  }
  return s;
}

bool QYSeries::operator==(const QYSeries& other) const {
  if (conv_ != other.conv_ || !(box_ == other.box_)) return false;
  const std::int64_t qd = lcm64(q_den_, other.q_den_), yd = lcm64(y_den_, other.y_den_);
  return regridded(qd, yd).rows_ == other.regridded(qd, yd).rows_;
}

namespace {

void require_same_convention(const QYSeries& a, const QYSeries& b, const char* op) {
  if (a.convention() != b.convention())
    throw std::invalid_argument(std::string(op) + ": convention mismatch (" +
                                std::string(convention_name(a.convention())) + " vs " +
                                std::string(convention_name(b.convention())) + ")");
}

}  // namespace

QYSeries operator+(const QYSeries& a, const QYSeries& b) {
  require_same_convention(a, b, "add");
  const std::int64_t qd = lcm64(a.q_den_, b.q_den_), yd = lcm64(a.y_den_, b.y_den_);
  QYSeries out = a.regridded(qd, yd);
  out.box_ = a.box_.intersect(b.box_);
  for (const auto& [r, row] : b.regridded(qd, yd).rows_) {
    QYSeries::Row& target = out.rows_[r];
    for (const auto& [y, c] : row) {
      auto [it, inserted] = target.try_emplace(y, c);
      if (!inserted) it->second += c;
    }
  }
  out.prune();
  return out;
}

QYSeries operator-(const QYSeries& a, const QYSeries& b) { return a + (-b); }

QYSeries operator*(const QYSeries& a0, const QYSeries& b0) {
  require_same_convention(a0, b0, "mul");
  const std::int64_t qd = lcm64(a0.q_den_, b0.q_den_), yd = lcm64(a0.y_den_, b0.y_den_);
  const QYSeries a = a0.regridded(qd, yd);
  const QYSeries b = b0.regridded(qd, yd);

  // A term of the product is determined once every possible partner term
  // of each factor is known, hence the shift by the other factor's minimum.
  Box box{std::min(a.box_.q_max, b.box_.q_max), std::nullopt};
  std::vector<Rational> qcands, ycands;
  if (!a.empty()) qcands.push_back(b.box_.q_max + *a.min_q());
  if (!b.empty()) qcands.push_back(a.box_.q_max + *b.min_q());
  if (!qcands.empty()) box.q_max = *std::min_element(qcands.begin(), qcands.end());
  if (a.box_.y_max && !b.empty()) ycands.push_back(*a.box_.y_max + *b.min_y());
  if (b.box_.y_max && !a.empty()) ycands.push_back(*b.box_.y_max + *a.min_y());
  if (!ycands.empty())
    box.y_max = *std::min_element(ycands.begin(), ycands.end());
  else if (a.box_.y_max || b.box_.y_max)
    box.y_max = a.box_.intersect(b.box_).y_max;

  QYSeries out(a.conv_, box);
  out.q_den_ = qd;
  out.y_den_ = yd;
  if (a.empty() || b.empty()) return out;

  const std::int64_t qlast = QYSeries::last_index_below(box.q_max, qd);
  const std::int64_t ylo = to_int64(Rational(*a.min_y() * yd)) + to_int64(Rational(*b.min_y() * yd));
  std::int64_t yhi = to_int64(Rational(*a.max_y() * yd)) + to_int64(Rational(*b.max_y() * yd));
  if (box.y_max) yhi = std::min(yhi, QYSeries::last_index_below(*box.y_max, yd));
  if (yhi < ylo) return out;

  std::map<std::int64_t, std::vector<Rational>> acc;
  Rational prod;
  for (const auto& [ra, rowa] : a.rows_) {
    for (const auto& [rb, rowb] : b.rows_) {
      const std::int64_t r = ra + rb;
      if (r > qlast) break;
      auto it = acc.find(r);
      if (it == acc.end()) it = acc.emplace(r, std::vector<Rational>(static_cast<std::size_t>(yhi - ylo + 1))).first;
      std::vector<Rational>& dense = it->second;
      for (const auto& [ya, ca] : rowa) {
        for (const auto& [yb, cb] : rowb) {
          const std::int64_t y = ya + yb;
          if (y > yhi) break;
          mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
          Rational& slot = dense[static_cast<std::size_t>(y - ylo)];
          mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod.get_mpq_t());
        }
      }
    }
  }
  for (auto& [r, dense] : acc) {
    QYSeries::Row row;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) row.emplace_hint(row.end(), ylo + static_cast<std::int64_t>(i), std::move(dense[i]));
    if (!row.empty()) out.rows_.emplace(r, std::move(row));
  }
  out.compact_grid();
  return out;
}

bool small_in_annulus(const Monomial& m) {
  return m.q >= 0 && m.q + m.y >= 0 && !(m.q == 0 && m.y == 0);
}

namespace {

// 2D cone spanned by a set of exponent vectors lying in an open half-plane.
struct Cone {
  Rational lo_q, lo_y, hi_q, hi_y;

  static Rational cross(const Rational& aq, const Rational& ay, const Rational& bq, const Rational& by) {
    return aq * by - ay * bq;
  }

  explicit Cone(const std::vector<Monomial>& gens) {
    lo_q = hi_q = gens.front().q;
    lo_y = hi_y = gens.front().y;
    for (const auto& g : gens) {
      if (cross(lo_q, lo_y, g.q, g.y) < 0) lo_q = g.q, lo_y = g.y;
      if (cross(g.q, g.y, hi_q, hi_y) < 0) hi_q = g.q, hi_y = g.y;
    }
  }

  bool contains(const Rational& q, const Rational& y) const {
    return cross(lo_q, lo_y, q, y) >= 0 && cross(q, y, hi_q, hi_y) >= 0;
  }
};

}  // namespace

QYSeries series_invert(const QYSeries& a, const std::vector<Monomial>& small, const Box& out_box) {
  if (a.empty()) throw std::domain_error("series_invert: zero series is not invertible");
  if (a.box_.y_max) throw std::invalid_argument("series_invert: input must not be truncated in y");

  std::vector<Monomial> gens{{1, 0}};
  for (const auto& m : small) {
    const bool ok = a.conv_ == Convention::AnnulusQltYlt1 ? small_in_annulus(m) : m.q > 0;
    if (!ok)
      throw std::domain_error("series_invert: monomial q^" + to_string(m.q) + " y^" + to_string(m.y) +
                              " is not small under " + std::string(convention_name(a.conv_)));
    gens.push_back(m);
  }
  const Cone cone(gens);

  const std::int64_t qd = a.q_den_, yd = a.y_den_;
  const auto& [r0, low] = *a.rows_.begin();
  std::optional<std::int64_t> lead;
  for (const auto& [yl, cl] : low) {
    bool admissible = true;
    for (const auto& [r, row] : a.rows_) {
      for (const auto& [y, c] : row) {
        if (r == r0 && y == yl) continue;
        const Rational eq = make_rational(r - r0, qd), ey = make_rational(y - yl, yd);
        const bool small_enough = a.conv_ == Convention::FinitePolynomial ? r > r0 : cone.contains(eq, ey);
        if (!small_enough) {
          admissible = false;
          break;
        }
      }
      if (!admissible) break;
    }
    if (admissible) {
      lead = yl;
      break;
    }
  }
  if (!lead) throw std::domain_error("series_invert: no leading term admits an expansion in the declared small monomials");
  const std::int64_t yl = *lead;
  const Rational cl = low.at(yl);
  const Rational lq = make_rational(r0, qd), ly = make_rational(yl, yd);

  // a = L (1 - u); solve v = 1 + u v, then 1/a = v / L.
  struct UTerm {
    std::int64_t dq, dy;
    Rational c;
  };
  std::vector<UTerm> shift, inrow;
  for (const auto& [r, row] : a.rows_)
    for (const auto& [y, c] : row) {
      if (r == r0 && y == yl) continue;
      UTerm t{r - r0, y - yl, -c / cl};
      (t.dq == 0 ? inrow : shift).push_back(std::move(t));
    }

  const Rational qrel = std::min(Rational(out_box.q_max + lq), Rational(a.box_.q_max - lq));
  const std::int64_t top = QYSeries::last_index_below(qrel, qd);
  if (!inrow.empty() && !out_box.y_max)
    throw std::invalid_argument("series_invert: a y bound is required to invert a series with several leading-row terms");

  Box rbox{qrel - lq, out_box.y_max};
  QYSeries out(a.conv_, rbox);
  out.q_den_ = qd;
  out.y_den_ = yd;
  if (top < 0) return out;

  const bool capped = out_box.y_max.has_value();
  std::vector<std::int64_t> ylim;
  if (capped) {
    const std::int64_t ycap = QYSeries::last_index_below(*out_box.y_max + ly, yd);
    ylim.assign(static_cast<std::size_t>(top + 1), ycap);
    for (std::int64_t r = top; r >= 0; --r)
      for (const auto& t : shift)
        if (r + t.dq <= top)
          ylim[r] = std::max(ylim[r], ylim[r + t.dq] - t.dy);
  }

  std::vector<QYSeries::Row> v(static_cast<std::size_t>(top + 1));
  Rational prod;
  for (std::int64_t r = 0; r <= top; ++r) {
    QYSeries::Row acc;
    if (r == 0) acc.emplace(0, 1);
    for (const auto& t : shift) {
      if (t.dq > r) continue;
      for (const auto& [ys, c] : v[r - t.dq]) {
        const std::int64_t y = ys + t.dy;
        if (capped && y > ylim[r]) continue;
        mpq_mul(prod.get_mpq_t(), t.c.get_mpq_t(), c.get_mpq_t());
        Rational& slot = acc[y];
        mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod.get_mpq_t());
      }
    }
    if (!inrow.empty() && !acc.empty() && acc.begin()->first <= ylim[r]) {
      const std::int64_t lo = acc.begin()->first;
      std::vector<Rational> dense(static_cast<std::size_t>(ylim[r] - lo + 1));
      for (auto& [y, c] : acc) dense[y - lo] = std::move(c);
      for (std::size_t i = 0; i < dense.size(); ++i)
        for (const auto& t : inrow)
          if (static_cast<std::int64_t>(i) >= t.dy) {
            mpq_mul(prod.get_mpq_t(), t.c.get_mpq_t(), dense[i - t.dy].get_mpq_t());
            mpq_add(dense[i].get_mpq_t(), dense[i].get_mpq_t(), prod.get_mpq_t());
          }
      acc.clear();
      for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) acc.emplace_hint(acc.end(), lo + static_cast<std::int64_t>(i), std::move(dense[i]));
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    v[r] = std::move(acc);
  }

  const Rational inv = 1 / cl;
  for (std::int64_t r = 0; r <= top; ++r) {
    if (v[r].empty()) continue;
    QYSeries::Row& row = out.rows_[r - r0];
    for (auto& [y, c] : v[r]) row.emplace(y - yl, c * inv);
  }
  out.prune();
  return out;
}

bool agree_on_common_box(const QYSeries& a, const QYSeries& b) {
  const Box box = a.box().intersect(b.box());
  const QYSeries ta = a.truncated(box), tb = b.truncated(box);
  const auto x = ta.terms(), y = tb.terms();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].q != y[i].q || x[i].y != y[i].y || x[i].coeff != y[i].coeff) return false;
  return true;
}

}  // namespace mockm11
