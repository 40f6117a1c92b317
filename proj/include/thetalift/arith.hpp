#pragma once

// Exact integer arithmetic: factorization, multiplicative functions,
// Jacobi/Kronecker symbols and the real quadratic characters psi_n.

#include <cstdint>
#include <vector>

namespace thetalift {

using i64 = std::int64_t;

struct PrimePower {
  i64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  i64 value = 1;
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes

  // Product of the prime powers times the sign.
  [[nodiscard]] i64 reconstruct() const;
};

// n = d * f^2 with d squarefree (sign(d) = sign(n)) and f = 2^q * w, w odd.
struct SquarefreeSplit {
  i64 n;
  i64 d;
  i64 f;
  int q;
  i64 w;
};

// Deterministic trial division. Throws DomainError for n == 0 or n == INT64_MIN.
Factorization factorize(i64 n);

int mobius(i64 n);
// Sum of d^ell over the divisors of n; exact, throws DomainError on overflow.
i64 sigma(int ell, i64 n);
// Real-exponent divisor sum, used by T_s for non-integral s.
double sigma_real(double exponent, i64 n);
i64 euler_phi(i64 n);
std::vector<i64> divisors(i64 n);

SquarefreeSplit squarefree_split(i64 n);

i64 isqrt(i64 n);  // floor(sqrt(n)) for n >= 0
bool is_square(i64 n);
i64 floor_mod(i64 a, i64 m);  // result in [0, m) for m > 0

// Kronecker symbol (a|b), total on Z x Z.
int kronecker(i64 a, i64 b);

// (c/d)^* := (c/|d|), with (0/+-1)^* = 1. |d| must be odd.
int star_upper(i64 c, i64 d);
// (c/d)_* := (c/|d|) * (-1) exactly when c < 0 and d < 0, with
// (0/1)_* = 1 and (0/-1)_* = -1. |d| must be odd.
int star_lower(i64 c, i64 d);

// Fundamental discriminant of Q(sqrt(n)); 1 when n is a perfect square.
i64 field_discriminant(i64 n);
bool is_fundamental_discriminant(i64 D);

// Real quadratic character m -> (D|m) attached to Q(sqrt(label)).
class QuadChar {
 public:
  static QuadChar of_field(i64 n);
  static QuadChar from_discriminant(i64 D);
  static QuadChar trivial() { return QuadChar(1, 1); }

  [[nodiscard]] i64 label() const { return label_; }
  [[nodiscard]] i64 discriminant() const { return disc_; }
  [[nodiscard]] bool is_trivial() const { return disc_ == 1; }
  [[nodiscard]] int operator()(i64 m) const { return kronecker(disc_, m); }

 private:
  QuadChar(i64 label, i64 disc) : label_(label), disc_(disc) {}
  i64 label_;
  i64 disc_;
};

// psi_n(m). Throws DomainError for n == 0.
int psi(i64 n, i64 m);

// T_s^chi(w) = sum_{a | w} mu(a) chi(a) a^{s-1} sigma_{2s-1}(w/a).
double T(double s, const QuadChar& chi, i64 w);
// The s = 1 value, exactly.
i64 T1(const QuadChar& chi, i64 w);

}  // namespace thetalift
