#include "mockm11/moonshine.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mockm11/builders.hpp"
#include "mockm11/class_numbers.hpp"
#include "mockm11/data.hpp"

namespace mockm11 {

Variant parse_variant(std::string_view name) {
  if (name == "default") return Variant::Default;
  if (name == "twisted") return Variant::Twisted;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected default or twisted)");
}

std::string_view variant_name(Variant v) { return v == Variant::Default ? "default" : "twisted"; }

namespace {

std::mutex tunnell_mutex;
std::vector<Integer> tunnell_coeffs;  // index i holds a(i + 1)

}  // namespace

Integer tunnell_a(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("tunnell_a: n must be positive");
  std::lock_guard lock(tunnell_mutex);
  if (static_cast<std::int64_t>(tunnell_coeffs.size()) < n) {
    const std::int64_t top = std::max<std::int64_t>(n, 2 * static_cast<std::int64_t>(tunnell_coeffs.size()));
    tunnell_coeffs = eta_product_coefficients({{4, 5}, {16, 1}, {2, -2}, {8, -1}}, top - 1);
  }
  return tunnell_coeffs[n - 1];
}

Rational phi84_coefficient(std::int64_t D) {
  if (D > 0) throw std::invalid_argument("phi84_coefficient: D must be <= 0");
  if (D == 0 || ((D % 8) + 8) % 8 != 5) return 0;
  return Rational(tunnell_a(-D)) / 2;
}

JacobiCoeffTable phi84_table(std::int64_t d_min) {
  if (d_min > 0) throw std::invalid_argument("phi84_table: d_min must be <= 0");
  JacobiCoeffTable t(1, 2, d_min);
  for (std::int64_t D = -3; D >= d_min; D -= 8) t.set(D, phi84_coefficient(D));
  if (d_min <= -3 && t.at(-3) != 1) throw std::domain_error("phi84_table: normalization C(-3) = 1 fails");
  return t;
}

namespace {

const JacobiCoeffTable& bundled_phi11() {
  static std::once_flag flag;
  static JacobiCoeffTable table;
  std::call_once(flag, [] {
    JacobiCoeffTable t = JacobiCoeffTable::from_csv(read_data_file("phi11_coefficients.csv"));
    if (t.d_min() > kPhi11MinD) throw std::runtime_error("phi11 data does not reach D=-108");
    for (const auto& [k, c] : t.coefficients())
      if (!is_integer(c) || k.first >= 0) throw std::runtime_error("phi11 data: non-integral or non-cuspidal entry");
    if (t.at(-3) != 1 || t.at(-4) != -1) throw std::runtime_error("phi11 data: normalization C(-3)=1, C(-4)=-1 fails");
    table = t.restricted(kPhi11MinD);
  });
  return table;
}

}  // namespace

JacobiCoeffTable phi11_table(std::int64_t d_min) {
  if (d_min < kPhi11MinD)
    throw std::out_of_range("phi11_table: bundled data covers D >= " + std::to_string(kPhi11MinD) + ", requested " +
                            std::to_string(d_min));
  if (d_min > 0) throw std::invalid_argument("phi11_table: d_min must be <= 0");
  return bundled_phi11().restricted(d_min);
}

const std::vector<std::string>& mt_class_labels() {
  static const std::vector<std::string> labels{"1A", "2A", "3A", "4A", "5A", "6A", "8AB", "11AB"};
  return labels;
}

std::string canonical_mt_class(std::string_view label) {
  if (label == "8A" || label == "8B") return "8AB";
  if (label == "11A" || label == "11B") return "11AB";
  for (const auto& l : mt_class_labels())
    if (l == label) return l;
  throw std::invalid_argument("unknown conjugacy class '" + std::string(label) + "'");
}

JacobiCoeffTable theta_product_series(int order, std::int64_t d_min) {
  int m = 0;
  if (order == 4) m = 4;
  if (order == 8) m = 16;
  if (m == 0) throw std::invalid_argument("theta_product_series: order must be 4 or 8");
  const Box box = Box::q_only(make_rational(-d_min, 4) + 1);
  const QYSeries diff = theta_mr(ThetaSpec::make(m, 0, true), box) - theta_mr(ThetaSpec::make(m, m, true), box);
  const QYSeries h = (theta_mr(ThetaSpec::make(1, 0, true), box) * diff * diff).scaled(-2);
  // h(tau) theta_{1,0}(tau, z) has C(D) = h_{|D|/4} for 4 | D.
  JacobiCoeffTable t(1, 2, d_min);
  for (std::int64_t D = 0; D >= d_min; D -= 4) t.set(D, h.coefficient(make_rational(-D, 4), 0));
  return t;
}

namespace {

std::mutex mt_mutex;
std::map<std::tuple<Variant, std::string, std::int64_t>, JacobiCoeffTable> mt_cache;

JacobiCoeffTable compute_mt(Variant v, const std::string& cls, std::int64_t d_min) {
  const int order = std::stoi(cls);
  if (v == Variant::Twisted && order == 4) return theta_product_series(4, d_min);
  if (v == Variant::Twisted && order == 8) return theta_product_series(8, d_min) - phi84_table(d_min).scaled(4);
  const JacobiCoeffTable r2 = series_table(SeriesKind::R_N, order, d_min).scaled(2);
  if (order == 11) return r2 - phi11_table(d_min).scaled(make_rational(11, 5));
  return r2;
}

}  // namespace

JacobiCoeffTable mt_series(Variant v, std::string_view cls, std::int64_t d_min) {
  if (d_min > 0) throw std::invalid_argument("mt_series: d_min must be <= 0");
  const std::string c = canonical_mt_class(cls);
  const auto key = std::make_tuple(v, c, d_min);
  {
    std::lock_guard lock(mt_mutex);
    auto it = mt_cache.find(key);
    if (it != mt_cache.end()) return it->second;
  }
  JacobiCoeffTable t = compute_mt(v, c, d_min);
  std::lock_guard lock(mt_mutex);
  return mt_cache.emplace(key, std::move(t)).first->second;
}

JacobiCoeffTable multiplicity_series(Variant v, int chi_index, std::int64_t d_min) {
  const CharacterTable& ct = m11_character_table();
  if (chi_index < 1 || chi_index > static_cast<int>(ct.size()))
    throw std::invalid_argument("multiplicity_series: character index must be in 1..10");
  std::vector<JacobiCoeffTable> series;
  for (std::size_t j = 0; j < kClassCount; ++j) series.push_back(mt_series(v, ct.classes()[j], d_min));
  const ClassFunction& chi = ct.character(static_cast<std::size_t>(chi_index));
  JacobiCoeffTable out(1, 2, d_min);
  for (std::int64_t D = 0; D >= d_min; --D) {
    if (!is_discriminant(D)) continue;
    ClassFunction values;
    for (std::size_t j = 0; j < kClassCount; ++j) values[j] = AlgebraicValue(series[j].at(D));
    // <values, chi> = sum values(g) conj(chi(g)) / |C(g)|.
    const AlgebraicValue m = char_inner_product(values, chi, ct);
    if (!m.is_rational() || !is_integer(m.rational))
      throw std::domain_error("multiplicity of chi" + std::to_string(chi_index) + " at D=" + std::to_string(D) +
                              " is " + to_string(m) + ", not a rational integer");
    out.set(D, m.rational);
  }
  return out;
}

namespace {

VirtualCharacter vc(std::initializer_list<std::pair<int, int>> terms) {
  VirtualCharacter v;
  for (const auto& [i, m] : terms) v.multiplicities[i - 1] += m;
  return v;
}

}  // namespace

LatticeData lattice_generators(Variant v) {
  LatticeData out;
  if (v == Variant::Twisted) {
    out.generators.push_back({"phi_8|4", vc({{3, 1}, {4, -1}})});
    out.generators.push_back({"phi_8|4", vc({{1, 1}, {5, -1}, {9, -1}, {10, 1}})});
  }
  out.generators.push_back({"phi_11", vc({{1, 1}, {2, -1}, {3, -1}, {4, -1}, {6, -1}, {9, 1}})});
  out.generators.push_back({"phi_11", vc({{1, 1}, {2, -1}, {3, -1}, {4, -1}, {7, -1}, {9, 1}})});
  const CharacterTable& ct = m11_character_table();
  for (const auto& a : out.generators) {
    std::vector<Rational> row;
    for (const auto& b : out.generators) {
      if (a.cusp_form != b.cusp_form) {
        row.push_back(0);
        continue;
      }
      const AlgebraicValue ip = char_inner_product(a.character.values(ct), b.character.values(ct), ct);
      if (!ip.is_rational()) throw std::domain_error("lattice_generators: irrational inner product");
      row.push_back(ip.rational);
    }
    out.gram.push_back(std::move(row));
  }
  return out;
}

TableDiff table_diff(int which) {
  const ReferenceTable& ref = reference_table(which);
  TableDiff diff;
  diff.which = which;
  const Variant v = (which == 2 || which == 3) ? Variant::Default : Variant::Twisted;
  const std::int64_t d_min = -ref.rows.rbegin()->first;
  std::vector<JacobiCoeffTable> columns;
  for (std::size_t j = 0; j < ref.columns.size(); ++j) {
    const std::string& label = ref.columns[j];
    try {
      if (which == 2 || which == 4)
        columns.push_back(mt_series(v, label, d_min));
      else
        columns.push_back(multiplicity_series(v, std::stoi(label.substr(3)), d_min));
    } catch (const std::domain_error& e) {
      diff.failed_checks.push_back(label + ": " + e.what());
      columns.emplace_back(1, 2, d_min);
    }
  }
  if (which == 2 || which == 4) {
    try {
      const JacobiCoeffTable phi = phi11_table(d_min);
      if (phi.at(-3) != 1 || phi.at(-4) != -1) diff.failed_checks.push_back("phi_11 normalization");
      for (const auto& [k, c] : phi.coefficients())
        if (!is_integer(c)) diff.failed_checks.push_back("phi_11 integrality at D=" + std::to_string(k.first));
    } catch (const std::exception& e) {
      diff.failed_checks.push_back(std::string("phi_11: ") + e.what());
    }
  }
  for (const auto& [abs_d, cells] : ref.rows)
    for (std::size_t j = 0; j < cells.size(); ++j) {
      ++diff.cells_checked;
      const Rational got = columns[j].at(-abs_d);
      if (got != cells[j]) diff.mismatches.push_back({abs_d, ref.columns[j], cells[j], to_string(got)});
    }
  return diff;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_level(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size() || v < 1) throw std::invalid_argument("bad level: " + s);
  return v;
}

}  // namespace

// H_N, HCE_N and R_N take the level after the underscore, e.g. R_6.
JacobiCoeffTable series_by_selector(const std::string& sel, std::int64_t d_min) {
  if (sel == "phi11") return phi11_table(d_min);
  if (sel == "phi84") return phi84_table(d_min);
  for (const auto& [prefix, kind] : {std::pair{"H_", SeriesKind::H_N}, std::pair{"HCE_", SeriesKind::HCE_N},
                                     std::pair{"R_", SeriesKind::R_N}}) {
    const std::string p = prefix;
    if (sel.rfind(p, 0) == 0) return series_table(kind, parse_level(sel.substr(p.size())), d_min);
  }
  const auto parts = split(sel, ':');
  if (parts.size() == 3 && parts[0] == "mt") return mt_series(parse_variant(parts[1]), parts[2], d_min);
  if (parts.size() == 3 && parts[0] == "mult")
    return multiplicity_series(parse_variant(parts[1]), static_cast<int>(parse_level(parts[2])), d_min);
  throw std::invalid_argument("unknown series selector: " + sel);
}

}  // namespace mockm11
