#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mockm11/class_numbers.hpp"
#include "mockm11/congruent.hpp"
#include "mockm11/moonshine.hpp"
#include "mockm11/verify.hpp"

using namespace mockm11;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::optional<std::int64_t> qmax;
  std::optional<std::int64_t> dmin;
};

json table_json(const JacobiCoeffTable& t, const std::string& name) {
  json rows = json::array();
  for (std::int64_t D = 0; D >= t.d_min(); --D)
    if (is_discriminant(D)) rows.push_back({{"D", D}, {"coefficient", to_string(t.at(D))}});
  return {{"series", name}, {"d_min", t.d_min()}, {"coefficients", rows}};
}

int cmd_classnum(const Globals& g, const std::string& kind, std::int64_t level, std::int64_t dmax) {
  const std::int64_t dmin = g.dmin.value_or(-108);
  if (dmax > 0 || dmin > dmax) throw std::invalid_argument("classnum: need dmin <= dmax <= 0");
  std::function<Rational(std::int64_t)> f;
  if (kind == "H")
    f = hurwitz_H;
  else if (kind == "H_N")
    f = [level](std::int64_t D) { return generalized_H(level, D); };
  else if (kind == "HCE_N")
    f = [level](std::int64_t D) { return cohen_eisenstein_coeff(level, D); };
  else if (kind == "R_N")
    f = [level](std::int64_t D) { return r_coefficient(level, D); };
  else
    throw std::invalid_argument("classnum: unknown kind " + kind);
  json rows = json::array();
  if (!g.json) std::cout << "D,value\n";
  for (std::int64_t D = dmax; D >= dmin; --D) {
    if (!is_discriminant(D)) continue;
    const std::string v = to_string(f(D));
    if (g.json)
      rows.push_back({{"D", D}, {"value", v}});
    else
      std::cout << D << ',' << v << '\n';
  }
  if (g.json) std::cout << json{{"kind", kind}, {"level", level}, {"rows", rows}}.dump(2) << '\n';
  return kOk;
}

int cmd_series(const Globals& g, const std::string& sel) {
  const JacobiCoeffTable t = series_by_selector(sel, g.dmin.value_or(-108));
  if (g.json)
    std::cout << table_json(t, sel).dump(2) << '\n';
  else
    std::cout << "# " << sel << ", exact for " << t.d_min() << " <= D <= 0\n" << t.to_csv();
  return kOk;
}

int cmd_tables(const Globals& g, const std::vector<int>& which) {
  bool ok = true;
  json report = json::array();
  for (int w : which) {
    const TableDiff d = table_diff(w);
    ok = ok && d.ok();
    if (g.json) {
      json mm = json::array();
      for (const auto& m : d.mismatches)
        mm.push_back({{"absD", m.abs_d}, {"column", m.column}, {"expected", m.expected}, {"got", m.got}});
      report.push_back({{"table", w},
                        {"cells", d.cells_checked},
                        {"ok", d.ok()},
                        {"mismatches", mm},
                        {"failed_checks", d.failed_checks}});
      continue;
    }
    std::cout << "table " << w << ": " << d.cells_checked << " cells, " << d.mismatches.size() << " mismatches "
              << (d.ok() ? "OK" : "FAIL") << '\n';
    for (const auto& m : d.mismatches)
      std::cout << "  |D|=" << m.abs_d << " " << m.column << " expected " << m.expected << " got " << m.got << '\n';
    for (const auto& f : d.failed_checks) std::cout << "  " << f << '\n';
  }
  if (g.json) std::cout << report.dump(2) << '\n';
  return ok ? kOk : kFail;
}

int cmd_congruent(const Globals& g, std::int64_t n, std::int64_t lambda) {
  const VerdictRecord r = certify_congruent(n, lambda);
  json j{{"n", r.n},
         {"squarefree", r.squarefree},
         {"residueOk", r.residue_ok},
         {"c84", to_string(r.c84)},
         {"m55", r.m55 ? json(to_string(*r.m55)) : json(nullptr)},
         {"verdict", verdict_name(r.verdict)}};
  if (g.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n=" << r.n << " squarefree=" << r.squarefree << " residueOk=" << r.residue_ok
              << " c84=" << to_string(r.c84) << " m55=" << (r.m55 ? to_string(*r.m55) : "-") << " verdict="
              << verdict_name(r.verdict) << '\n';
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  VerifyOptions o;
  if (g.qmax) o.q_order = *g.qmax;
  if (g.dmin) o.table_bound = -*g.dmin;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_verify(suite, o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (g.json)
      arr.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name
                << (r.detail.empty() ? "" : "  [" + r.detail + "]") << '\n';
  }
  if (g.json)
    std::cout << json{{"suite", suite}, {"passed", ok}, {"seconds", secs}, {"checks", arr}}.dump(2) << '\n';
  else
    std::cout << (ok ? "all checks passed" : "verification FAILED") << " (" << results.size() << " checks, " << secs
              << " s)\n";
  return ok ? kOk : kFail;
}

const CLI::Validator kNonpositive(
    [](std::string& v) {
      try {
        return std::stoll(v) <= 0 ? std::string() : "must be <= 0";
      } catch (const std::exception&) {
        return std::string("not an integer");
      }
    },
    "<= 0");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact class numbers, mock Jacobi forms and M11 moonshine tables"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "emit JSON");
  app.add_option("--qmax", g.qmax, "q-order for series checks");
  app.add_option("--dmin", g.dmin, "lowest discriminant (default -108)")->check(kNonpositive);
  app.fallthrough();

  std::string kind = "H";
  std::int64_t level = 1, dmax = 0;
  auto* classnum = app.add_subcommand("classnum", "class numbers as D,value CSV");
  classnum->add_option("--kind", kind, "H, H_N, HCE_N or R_N")->check(CLI::IsMember({"H", "H_N", "HCE_N", "R_N"}));
  classnum->add_option("-N,--level", level, "level N")->check(CLI::PositiveNumber);
  classnum->add_option("--dmax", dmax, "highest discriminant")->check(kNonpositive);

  std::string selector;
  auto* series = app.add_subcommand("series", "dump coefficients of a form");
  series->add_option("selector", selector, "H_N, HCE_N, R_N, phi11, phi84, mt:<variant>:<class>, mult:<variant>:<chi>")
      ->required();

  std::vector<int> which{2, 3, 4, 5};
  auto* tables = app.add_subcommand("tables", "recompute the reference tables and diff");
  tables->add_option("which", which, "table numbers")->check(CLI::Range(2, 5));

  std::int64_t n = 0, lambda = -4;
  auto* congruent = app.add_subcommand("congruent", "non-congruence certificate from the 55-dimensional multiplicity");
  congruent->add_option("n", n, "positive integer")->required()->check(CLI::PositiveNumber);
  congruent->add_option("--lambda", lambda, "Re(lambda_{8|4}), even");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember({"classnum", "bridge", "moonshine", "lattice", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classnum) return cmd_classnum(g, kind, level, dmax);
    if (*series) return cmd_series(g, selector);
    if (*tables) return cmd_tables(g, which);
    if (*congruent) return cmd_congruent(g, n, lambda);
    if (*verify) return cmd_verify(g, suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
