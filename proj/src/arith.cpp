#include "thetalift/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thetalift/errors.hpp"

namespace thetalift {

namespace {

using u64 = std::uint64_t;

u64 magnitude(i64 n) { return n < 0 ? u64(0) - u64(n) : u64(n); }

// Jacobi symbol (a|n) for odd n > 0.
int jacobi(u64 a, u64 n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

void require_odd(i64 d, const char* what) {
  if ((magnitude(d) & 1) == 0)
    throw DomainError(std::string(what) + ": denominator must be odd, got " +
                      std::to_string(d));
}

}  // namespace

i64 Factorization::reconstruct() const {
  i64 v = sign;
  for (const auto& pp : factors)
    for (int e = 0; e < pp.exponent; ++e) v *= pp.prime;
  return v;
}

Factorization factorize(i64 n) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  if (n == std::numeric_limits<i64>::min())
    throw DomainError("factorize: |n| exceeds 2^63-1");
  Factorization out;
  out.value = n;
  out.sign = n < 0 ? -1 : 1;
  u64 m = magnitude(n);
  auto take = [&](u64 p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({i64(p), e});
  };
  take(2);
  take(3);
  for (u64 p = 5; p <= m / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (m > 1) out.factors.push_back({i64(m), 1});
  return out;
}

int mobius(i64 n) {
  if (n < 1) throw DomainError("mobius: n must be positive");
  int mu = 1;
  for (const auto& pp : factorize(n).factors) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<i64> divisors(i64 n) {
  if (n < 1) throw DomainError("divisors: n must be positive");
  std::vector<i64> divs{1};
  for (const auto& pp : factorize(n).factors) {
    std::size_t base = divs.size();
    i64 pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

i64 sigma(int ell, i64 n) {
  if (n < 1) throw DomainError("sigma: n must be positive");
  if (ell < 0) throw DomainError("sigma: exponent must be nonnegative");
  i64 total = 0;
  for (i64 d : divisors(n)) {
    i64 term = 1;
    for (int e = 0; e < ell; ++e)
      if (__builtin_mul_overflow(term, d, &term))
        throw DomainError("sigma: result overflows 64 bits");
    if (__builtin_add_overflow(total, term, &total))
      throw DomainError("sigma: result overflows 64 bits");
  }
  return total;
}

double sigma_real(double exponent, i64 n) {
  if (n < 1) throw DomainError("sigma: n must be positive");
  double total = 0.0;
  for (i64 d : divisors(n)) total += std::pow(double(d), exponent);
  return total;
}

i64 euler_phi(i64 n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  i64 phi = n;
  for (const auto& pp : factorize(n).factors) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

SquarefreeSplit squarefree_split(i64 n) {
  if (n == 0) throw DomainError("squarefree_split: zero input");
  Factorization fac = factorize(n);
  SquarefreeSplit s{n, fac.sign, 1, 0, 1};
  for (const auto& pp : fac.factors) {
    if (pp.exponent % 2) s.d *= pp.prime;
    for (int e = 0; e < pp.exponent / 2; ++e) s.f *= pp.prime;
  }
  s.w = s.f;
  while (s.w % 2 == 0) {
    s.w /= 2;
    ++s.q;
  }
  return s;
}

i64 isqrt(i64 n) {
  if (n < 0) throw DomainError("isqrt: negative input");
  i64 r = i64(std::sqrt(double(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

int kronecker(i64 a, i64 b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (b < 0 && a < 0) result = -result;
  u64 n = magnitude(b);
  int twos = __builtin_ctzll(n);
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    i64 r8 = floor_mod(a, 8);
    if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
    n >>= twos;
  }
  if (n == 1) return result;
  u64 am = a >= 0 ? u64(a) % n : (n - magnitude(a) % n) % n;
  return result * jacobi(am, n);
}

int star_upper(i64 c, i64 d) {
  require_odd(d, "star_upper");
  if (d == 1 || d == -1) return 1;
  return kronecker(c, i64(magnitude(d)));
}

int star_lower(i64 c, i64 d) {
  require_odd(d, "star_lower");
  if (c == 0) return d == 1 ? 1 : (d == -1 ? -1 : 0);
  int v = kronecker(c, i64(magnitude(d)));
  return (c < 0 && d < 0) ? -v : v;
}

i64 field_discriminant(i64 n) {
  if (n == 0) throw DomainError("field_discriminant: zero input");
  i64 d = squarefree_split(n).d;
  if (d == 1) return 1;
  return floor_mod(d, 4) == 1 ? d : 4 * d;
}

bool is_fundamental_discriminant(i64 D) {
  if (D == 0 || D == 1) return false;
  if (floor_mod(D, 4) == 1) return squarefree_split(D).f == 1;
  if (floor_mod(D, 4) != 0) return false;
  i64 m = D / 4;
  i64 r = floor_mod(m, 4);
  return (r == 2 || r == 3) && squarefree_split(m).f == 1;
}

QuadChar QuadChar::of_field(i64 n) { return QuadChar(n, field_discriminant(n)); }

QuadChar QuadChar::from_discriminant(i64 D) {
  if (D != 1 && !is_fundamental_discriminant(D))
    throw DomainError("QuadChar: " + std::to_string(D) +
                      " is not a fundamental discriminant");
  return QuadChar(D, D);
}

int psi(i64 n, i64 m) { return QuadChar::of_field(n)(m); }

double T(double s, const QuadChar& chi, i64 w) {
  if (w < 1) throw DomainError("T: w must be positive");
  double total = 0.0;
  for (i64 a : divisors(w)) {
    int mu = mobius(a);
    if (mu == 0) continue;
    int ch = chi(a);
    if (ch == 0) continue;
    total += mu * ch * std::pow(double(a), s - 1.0) * sigma_real(2.0 * s - 1.0, w / a);
  }
  return total;
}

i64 T1(const QuadChar& chi, i64 w) {
  if (w < 1) throw DomainError("T1: w must be positive");
  i64 total = 0;
  for (i64 a : divisors(w)) total += mobius(a) * chi(a) * sigma(1, w / a);
  return total;
}

}  // namespace thetalift
