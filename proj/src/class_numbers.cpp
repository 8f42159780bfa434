#include "mockm11/class_numbers.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace mockm11 {

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Kronecker symbol for odd positive n via quadratic reciprocity (Jacobi).
int jacobi(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

void require_negative_discriminant(std::int64_t D, const char* op) {
  if (D >= 0 || !is_discriminant(D))
    throw std::invalid_argument(std::string(op) + ": " + std::to_string(D) + " is not a negative discriminant");
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    const std::int64_t r = mod(a, 8);
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  const std::int64_t r = mod(D, 4);
  auto squarefree = [](std::int64_t n) {
    n = std::abs(n);
    for (const auto& [p, e] : factorize(n))
      if (e > 1) return false;
    return true;
  };
  if (r == 1) return squarefree(D);
  if (r == 0) {
    const std::int64_t m = D / 4;
    const std::int64_t mr = mod(m, 4);
    return (mr == 2 || mr == 3) && squarefree(m);
  }
  return false;
}

Discriminant fundamental_decomposition(std::int64_t D) {
  require_negative_discriminant(D, "fundamental_decomposition");
  std::int64_t f = 1;
  for (std::int64_t g = 1; g * g <= -D; ++g) {
    if (D % (g * g) != 0) continue;
    const std::int64_t d0 = D / (g * g);
    if (is_discriminant(d0) && is_fundamental_discriminant(d0)) f = g;
  }
  return Discriminant{D, f, D / (f * f)};
}

std::vector<ReducedForm> reduced_forms(std::int64_t D) {
  require_negative_discriminant(D, "reduced_forms");
  std::vector<ReducedForm> out;
  // |b| <= a <= c gives 3a^2 <= |D|.
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      int w = 2;
      if (a == b && b == c) w = 6;
      if (b == 0 && a == c) w = 4;
      out.push_back({{a, b, c}, w});
    }
  }
  return out;
}

namespace {

std::shared_mutex h_mutex;
std::unordered_map<std::int64_t, Rational> h_cache;

}  // namespace

Rational hurwitz_H(std::int64_t D) {
  if (D > 0) throw std::invalid_argument("hurwitz_H: D must be <= 0");
  if (D == 0) return make_rational(-1, 12);
  if (!is_discriminant(D)) return 0;
  {
    std::shared_lock lock(h_mutex);
    auto it = h_cache.find(D);
    if (it != h_cache.end()) return it->second;
  }
  Rational h = 0;
  for (const auto& f : reduced_forms(D)) h += make_rational(2, f.stabilizer);
  std::unique_lock lock(h_mutex);
  h_cache.emplace(D, h);
  return h;
}

std::int64_t index_iota(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("index_iota: N must be positive");
  std::int64_t v = N;
  for (const auto& [p, e] : factorize(N)) v = v / p * (p + 1);
  return v;
}

std::vector<SL2Z> coset_reps_gamma0(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("coset_reps_gamma0: N must be positive");
  if (N == 1) return {SL2Z{1, 0, 0, 1}};
  // Canonical representative of (c : d) in P^1(Z/N): least pair over unit multiples.
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t c = 0; c < N; ++c)
    for (std::int64_t d = 0; d < N; ++d) {
      if (std::gcd(std::gcd(c, d), N) != 1) continue;
      std::pair<std::int64_t, std::int64_t> best{c, d};
      for (std::int64_t u = 1; u < N; ++u)
        if (std::gcd(u, N) == 1) best = std::min(best, std::make_pair(u * c % N, u * d % N));
      if (best == std::make_pair(c, d)) points.emplace_back(c, d);
    }
  std::vector<SL2Z> out;
  for (auto [c, d] : points) {
    if (c == 0) d = 1;
    while (std::gcd(c, d) != 1) d += N;
    // x d + y c = 1 gives [[x, -y], [c, d]] in SL2(Z).
    std::int64_t old_r = d, r = c, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
      std::tie(old_x, x) = std::make_pair(x, old_x - q * x);
      std::tie(old_y, y) = std::make_pair(y, old_y - q * y);
    }
    out.push_back({old_x, -old_y, c, d});
  }
  return out;
}

namespace {

std::mutex reps_mutex;
std::map<std::int64_t, std::vector<SL2Z>> reps_cache;

const std::vector<SL2Z>& cached_reps(std::int64_t N) {
  std::lock_guard lock(reps_mutex);
  auto it = reps_cache.find(N);
  if (it == reps_cache.end()) it = reps_cache.emplace(N, coset_reps_gamma0(N)).first;
  return it->second;
}

}  // namespace

Rational generalized_H(std::int64_t N, std::int64_t D) {
  if (N < 1) throw std::invalid_argument("generalized_H: N must be positive");
  if (D > 0) throw std::invalid_argument("generalized_H: D must be <= 0");
  if (D == 0) return make_rational(-index_iota(N), 12);
  if (!is_discriminant(D)) return 0;
  const auto& reps = cached_reps(N);
  Rational mass = 0;
  for (const auto& f : reduced_forms(D)) {
    std::int64_t hits = 0;
    // The A-coefficient of Q o gamma is Q(a, c) for gamma = [[a, b], [c, d]];
    // we need it for gamma^{-1} = [[d, -b], [-c, a]].
    for (const auto& g : reps)
      if (mod(f.form.eval(g.d, -g.c), N) == 0) ++hits;
    mass += make_rational(2 * hits, f.stabilizer);
  }
  return mass;
}

Rational cohen_eisenstein_coeff(std::int64_t N, std::int64_t D) {
  if (!is_prime(N)) throw std::invalid_argument("cohen_eisenstein_coeff: N must be prime");
  if (D > 0) throw std::invalid_argument("cohen_eisenstein_coeff: D must be <= 0");
  if (D == 0) return make_rational(N - 1, 24);
  if (!is_discriminant(D)) return 0;
  const Discriminant dec = fundamental_decomposition(D);
  std::int64_t f = dec.conductor;
  while (f % N == 0) f /= N;
  const std::int64_t Dp = f * f * dec.fundamental;
  switch (kronecker_symbol(Dp, N)) {
    case 1:
      return 0;
    case 0:
      return hurwitz_H(Dp) / 2;
    default:
      return hurwitz_H(Dp);
  }
}

JacobiCoeffTable series_table(SeriesKind kind, std::int64_t N, std::int64_t d_min) {
  if (d_min > 0) throw std::invalid_argument("series_table: d_min must be <= 0");
  if (N < 1) throw std::invalid_argument("series_table: N must be positive");
  JacobiCoeffTable t(1, 2, d_min);
  switch (kind) {
    case SeriesKind::H_N:
      for (std::int64_t D = 0; D >= d_min; --D)
        if (is_discriminant(D)) t.set(D, generalized_H(N, D));
      return t;
    case SeriesKind::HCE_N:
      if (!is_prime(N)) throw std::invalid_argument("series_table: HCE_N needs prime N");
      for (std::int64_t D = 0; D >= d_min; --D)
        if (is_discriminant(D)) t.set(D, cohen_eisenstein_coeff(N, D));
      return t;
    case SeriesKind::R_N: {
      const Rational scale = make_rational(12, totient(N));
      for (std::int64_t M : divisors(N)) {
        const int mu = mobius(N / M);
        if (mu == 0) continue;
        t = t + series_table(SeriesKind::H_N, M, d_min).scaled(scale * mu * make_rational(M, index_iota(M)));
      }
      return t;
    }
  }
  throw std::invalid_argument("series_table: unknown kind");
}

Rational r_coefficient(std::int64_t N, std::int64_t D) {
  if (N < 1) throw std::invalid_argument("r_coefficient: N must be positive");
  if (D > 0) throw std::invalid_argument("r_coefficient: D must be <= 0");
  if (!is_discriminant(D)) return 0;
  Rational r = 0;
  for (std::int64_t M : divisors(N)) {
    const int mu = mobius(N / M);
    if (mu != 0) r += mu * make_rational(M, index_iota(M)) * generalized_H(M, D);
  }
  return make_rational(12, totient(N)) * r;
}

std::optional<std::int64_t> r_nonintegral_witness(std::int64_t N, const Rational& scale, std::int64_t bound) {
  for (std::int64_t D = 0; D >= -bound; --D)
    if (is_discriminant(D) && !is_integer(Rational(scale * r_coefficient(N, D)))) return -D;
  return std::nullopt;
}

}  // namespace mockm11
