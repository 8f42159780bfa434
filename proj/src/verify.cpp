#include "mockm11/verify.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "mockm11/builders.hpp"
#include "mockm11/characters.hpp"
#include "mockm11/class_numbers.hpp"
#include "mockm11/moonshine.hpp"
#include "mockm11/umbral.hpp"

namespace mockm11 {

namespace {

using Suite = std::function<void(const VerifyOptions&, std::vector<CheckResult>&)>;

void add(std::vector<CheckResult>& out, const std::string& suite, std::string name, bool ok, std::string detail = {}) {
  out.push_back({suite, std::move(name), ok, std::move(detail)});
}

std::string at_d(std::int64_t D) { return "first failure at D=" + std::to_string(D); }

void suite_classnum(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const std::string s = "classnum";
  for (std::int64_t N : {2, 3, 5, 7, 11}) {
    std::optional<std::int64_t> bad_sum, bad_closed;
    for (std::int64_t D = -3; D >= -o.classnum_bound; --D) {
      if (!is_discriminant(D)) continue;
      const Rational h = hurwitz_H(D), hn = generalized_H(N, D), hce = cohen_eisenstein_coeff(N, D);
      if (!bad_sum && h != hce + hn / 2) bad_sum = D;
      if (!bad_closed && is_fundamental_discriminant(D)) {
        const int k = kronecker_symbol(D, N);
        if (hn != (1 + k) * h || hce != make_rational(1 - k, 2) * h) bad_closed = D;
      }
    }
    const std::string n = std::to_string(N);
    add(out, s, "H = HCE_" + n + " + H_" + n + "/2", !bad_sum, bad_sum ? at_d(*bad_sum) : "");
    add(out, s, "fundamental closed forms N=" + n, !bad_closed, bad_closed ? at_d(*bad_closed) : "");
  }
  for (std::int64_t N : {1, 2, 3, 4, 5, 6, 7, 8, 11}) {
    const Rational c = r_coefficient(N, 0);
    add(out, s, "R_" + std::to_string(N) + " constant term -1", c == -1, "got " + to_string(c));
  }
  const std::int64_t d = -o.classnum_bound;
  add(out, s, "R_1 = 12 H", series_table(SeriesKind::R_N, 1, d) == series_table(SeriesKind::H_N, 1, d).scaled(12));
}

void suite_bridge(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const std::string s = "bridge";
  const Box box = bridge_box(o.q_order);
  const QYSeries psi1 = psi1_expansion(box).series;
  const QYSeries psi3 = psi3_expansion(box).series;
  const Box work = Box::q_only(o.q_order + 4);
  const QYSeries t2z = theta1_product_form(work).substituted(1, 2).with_convention(Convention::AnnulusQltYlt1);
  const QYSeries eta3 = eta_quotient({{1, 3}}, work).with_convention(Convention::AnnulusQltYlt1);
  add(out, s, "psi1 T(2z) = eta^3 psi3", agree_on_common_box(psi1 * t2z, eta3 * psi3));
  try {
    const JacobiCoeffTable f = finite_part_index1(psi1, box);
    const JacobiCoeffTable h = series_table(SeriesKind::H_N, 1, f.d_min()).scaled(24);
    std::int64_t pairs = 0;
    for (std::int64_t n = 0; n <= o.q_order; ++n)
      for (std::int64_t r = -2 * n; r <= 2 * n; ++r)
        if (r * r <= 4 * n) ++pairs;
    std::ostringstream d;
    d << pairs << " (n, s) coefficients with n <= " << o.q_order;
    add(out, s, "finite part of psi1 = 24 H", f == h, d.str());
    add(out, s, "polar coefficient -12", polar_coefficient_index1(psi1, box) == -12);
    const JacobiCoeffTable m12 = m12_identity_series(box);
    add(out, s, "2.M12 identity series constant term -2", m12.constant_term() == -2);
  } catch (const std::exception& e) {
    add(out, s, "finite part of psi1 = 24 H", false, e.what());
  }
}

void suite_moonshine(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const std::string s = "moonshine";
  const std::int64_t d = -o.table_bound;
  for (int which : {2, 3, 4, 5}) {
    const TableDiff diff = table_diff(which);
    std::ostringstream detail;
    detail << diff.cells_checked << " cells";
    for (const auto& m : diff.mismatches)
      detail << "; |D|=" << m.abs_d << " " << m.column << " expected " << m.expected << " got " << m.got;
    for (const auto& f : diff.failed_checks) detail << "; " << f;
    add(out, s, "table " + std::to_string(which), diff.ok(), detail.str());
  }
  for (Variant v : {Variant::Default, Variant::Twisted}) {
    std::string bad;
    for (const auto& c : mt_class_labels())
      if (mt_series(v, c, d).constant_term() != -2) bad += " " + c;
    add(out, s, std::string("constant term -2 (") + std::string(variant_name(v)) + ")", bad.empty(), bad);
  }

  // Order-6 series against class numbers for fundamental D.
  const std::int64_t dc = -o.classnum_bound;
  const JacobiCoeffTable c6 = mt_series(Variant::Twisted, "6A", dc);
  std::optional<std::int64_t> bad6;
  for (std::int64_t D = -3; D >= dc && !bad6; --D) {
    if (!is_fundamental_discriminant(D)) continue;
    const int f = 1 - 2 * kronecker_symbol(D, 8) - 3 * kronecker_symbol(D, 3) + 6 * kronecker_symbol(D, 24);
    if (c6.at(D) != f * hurwitz_H(D)) bad6 = D;
  }
  add(out, s, "C_6 fundamental formula", !bad6, bad6 ? at_d(*bad6) : "");

  auto span = [&](const std::string& name, const JacobiCoeffTable& target, const std::vector<JacobiCoeffTable>& basis) {
    const auto x = solve_in_span(target, basis, d);
    std::string detail;
    if (x)
      for (std::size_t i = 0; i < x->size(); ++i) detail += (i ? ", " : "") + to_string((*x)[i]);
    add(out, s, name, x.has_value(), detail);
  };
  const JacobiCoeffTable h = series_table(SeriesKind::H_N, 1, d);
  span("2R_2 in span{H, HCE_2}", series_table(SeriesKind::R_N, 2, d).scaled(2),
       {h, series_table(SeriesKind::HCE_N, 2, d)});
  span("2R_3 in span{H, HCE_3}", series_table(SeriesKind::R_N, 3, d).scaled(2),
       {h, series_table(SeriesKind::HCE_N, 3, d)});
  JacobiCoeffTable c6p(1, 2, d);
  for (std::int64_t D = 0; D >= d; --D)
    if (is_discriminant(D)) c6p.set(D, hurwitz_H(36 * D) - hurwitz_H(D));
  span("2R_6 in span{H, HCE_2, HCE_3, C_6'}", series_table(SeriesKind::R_N, 6, d).scaled(2),
       {h, series_table(SeriesKind::HCE_N, 2, d), series_table(SeriesKind::HCE_N, 3, d), c6p});

  // m55 as a combination of the order-N series and C_{8|4}, with Re(lambda) = -4;
  // the order-8 term here is the lambda-free theta product.
  const JacobiCoeffTable m55 = multiplicity_series(Variant::Twisted, 10, d);
  auto tw = [&](const char* c) { return mt_series(Variant::Twisted, c, d); };
  const JacobiCoeffTable combo = tw("1A").scaled(make_rational(1, 144)) - tw("2A").scaled(make_rational(1, 48)) +
                                 tw("3A").scaled(make_rational(1, 18)) - tw("4A").scaled(make_rational(1, 8)) -
                                 tw("6A").scaled(make_rational(1, 6)) + theta_product_series(8, d).scaled(make_rational(1, 4)) -
                                 phi84_table(d);
  std::optional<std::int64_t> bad55;
  for (std::int64_t D = -1; D >= d && !bad55; --D)
    if (m55.at(D) != combo.at(D)) bad55 = D;
  add(out, s, "m55 from McKay-Thompson series", !bad55, bad55 ? at_d(*bad55) : "");

  const auto w1 = r_nonintegral_witness(5, 1, o.witness_bound);
  const auto w2 = r_nonintegral_witness(5, 2, o.witness_bound);
  std::string detail = w1 ? "R_5 non-integral at |D|=" + std::to_string(*w1)
                          : "no non-integral R_5 coefficient for |D| <= " + std::to_string(o.witness_bound);
  if (w2) detail += "; 2R_5 non-integral at |D|=" + std::to_string(*w2);
  add(out, s, "2R_5 integral, R_5 witness scan", !w2, detail);
}

void suite_lattice(const VerifyOptions&, std::vector<CheckResult>& out) {
  const std::string s = "lattice";
  for (const auto& c : orthogonality_checks()) add(out, s, c.name, c.passed);
  for (const auto& c : delta_identities()) add(out, s, c.name, c.passed);
  using Gram = std::vector<std::vector<Rational>>;
  const Gram def{{6, 5}, {5, 6}};
  const Gram twi{{2, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 6, 5}, {0, 0, 5, 6}};
  add(out, s, "Gram matrix (default)", lattice_generators(Variant::Default).gram == def);
  add(out, s, "Gram matrix (twisted)", lattice_generators(Variant::Twisted).gram == twi);
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> v{
      {"classnum", suite_classnum}, {"bridge", suite_bridge}, {"moonshine", suite_moonshine}, {"lattice", suite_lattice}};
  return v;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : suites()) n.push_back(k);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_verify(std::string_view suite, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    try {
      fn(opts, out);
    } catch (const std::exception& e) {
      add(out, name, "suite aborted", false, e.what());
    }
  }
  if (!found) throw std::invalid_argument("unknown verify suite: " + std::string(suite));
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(const JacobiCoeffTable& target,
                                                   const std::vector<JacobiCoeffTable>& basis, std::int64_t d_min) {
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> rows;
  for (std::int64_t D = 0; D >= d_min; --D) {
    if (!is_discriminant(D)) continue;
    std::vector<Rational> r;
    for (const auto& b : basis) r.push_back(b.at(D));
    r.push_back(target.at(D));
    rows.push_back(std::move(r));
  }
  // Gauss-Jordan elimination on the augmented matrix.
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < k && top < rows.size(); ++col) {
    std::size_t p = top;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[top]);
    const Rational inv = 1 / rows[top][col];
    for (auto& v : rows[top]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == top || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j <= k; ++j) rows[i][j] -= f * rows[top][j];
    }
    pivots.push_back(col);
    ++top;
  }
  for (std::size_t i = top; i < rows.size(); ++i)
    if (rows[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][k];
  return x;
}

}  // namespace mockm11
