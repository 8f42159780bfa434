#include "mockm11/congruent.hpp"

#include <stdexcept>

#include "mockm11/moonshine.hpp"

namespace mockm11 {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotCongruentCertified:
      return "NotCongruentCertified";
    case Verdict::Inconclusive:
      return "Inconclusive";
    case Verdict::HypothesisNotMet:
      return "HypothesisNotMet";
  }
  return "?";
}

bool is_squarefree(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("is_squarefree: n must be positive");
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

VerdictRecord certify_congruent(std::int64_t n, std::int64_t re_lambda) {
  if (n < 1) throw std::invalid_argument("certify_congruent: n must be positive");
  if (re_lambda % 2 != 0) throw std::invalid_argument("certify_congruent: Re(lambda) must be even");
  VerdictRecord r;
  r.n = n;
  r.squarefree = is_squarefree(n);
  r.residue_ok = n % 24 == 3;
  r.c84 = phi84_coefficient(-n);
  if (!r.squarefree || !r.residue_ok) return r;
  r.m55 = make_rational(re_lambda, 4) * r.c84;
  r.verdict = r.c84 != 0 ? Verdict::NotCongruentCertified : Verdict::Inconclusive;
  return r;
}

}  // namespace mockm11
