#ifndef MOCKM11_VERIFY_HPP
#define MOCKM11_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mockm11/jacobi_table.hpp"

namespace mockm11 {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::int64_t q_order = 30;          // bridge suite
  std::int64_t table_bound = 108;     // moonshine suite, |D|
  std::int64_t classnum_bound = 500;  // class-number scans, |D|
  std::int64_t witness_bound = 10000;
};

const std::vector<std::string>& verify_suites();

// suite is one of verify_suites() or "all".
std::vector<CheckResult> run_verify(std::string_view suite, const VerifyOptions& opts = {});

// Exact coefficients x with target = sum x_i basis_i on every discriminant
// in [d_min, 0], or nullopt when target is outside the span.
std::optional<std::vector<Rational>> solve_in_span(const JacobiCoeffTable& target,
                                                   const std::vector<JacobiCoeffTable>& basis, std::int64_t d_min);

}  // namespace mockm11

#endif
