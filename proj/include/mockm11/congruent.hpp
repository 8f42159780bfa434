#ifndef MOCKM11_CONGRUENT_HPP
#define MOCKM11_CONGRUENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mockm11/rational.hpp"

namespace mockm11 {

enum class Verdict { NotCongruentCertified, Inconclusive, HypothesisNotMet };

std::string_view verdict_name(Verdict v);

struct VerdictRecord {
  std::int64_t n = 0;
  bool squarefree = false;
  bool residue_ok = false;  // n = 3 mod 24
  Rational c84;             // C_{8|4}(-n)
  std::optional<Rational> m55;
  Verdict verdict = Verdict::HypothesisNotMet;
};

bool is_squarefree(std::int64_t n);

// The converse direction is never claimed: c84 = 0 gives Inconclusive.
VerdictRecord certify_congruent(std::int64_t n, std::int64_t re_lambda = -4);

}  // namespace mockm11

#endif
