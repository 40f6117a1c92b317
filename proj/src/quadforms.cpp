#include "thetalift/quadforms.hpp"

#include <cmath>
#include <numeric>

#include "thetalift/errors.hpp"
#include "thetalift/lseries.hpp"

namespace thetalift {

namespace {

void require_disc_residue(i64 N, const char* what) {
  if (N < 1 || (floor_mod(N, 4) != 0 && floor_mod(N, 4) != 3))
    throw DomainError(std::string(what) + ": N must be positive and = 0,3 mod 4, got " +
                      std::to_string(N));
}

// floor((P + sqrt(D)) / Q) for Q != 0 and non-square D.
i64 floor_quotient(i64 P, i64 Q, i64 root) {
  if (Q > 0) {
    i64 num = P + root;
    return num >= 0 ? num / Q : -((-num + Q - 1) / Q);
  }
  i64 num = -P - root - 1;  // floor(-(P + sqrt D))
  i64 q = -Q;
  return num >= 0 ? num / q : -((-num + q - 1) / q);
}

}  // namespace

Rational::Rational(i64 num, i64 den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational x, Rational y) {
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}
Rational operator-(Rational x, Rational y) {
  return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}
Rational operator*(Rational x, Rational y) { return {x.num_ * y.num_, x.den_ * y.den_}; }

int PellUnit::norm() const {
  BigInt n = x * x - BigInt(D) * y * y;
  return n < 0 ? -1 : 1;
}

std::vector<ReducedForm> reduced_forms(i64 Delta) {
  if (Delta >= 0 || (floor_mod(Delta, 4) != 0 && floor_mod(Delta, 4) != 1))
    throw DomainError("reduced_forms: discriminant must be negative and = 0,1 mod 4");
  std::vector<ReducedForm> forms;
  const i64 absD = -Delta;
  // a <= sqrt(|Delta| / 3)
  for (i64 a = 1; 3 * a * a <= absD; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      if (floor_mod(b, 2) != floor_mod(Delta, 2)) continue;
      i64 num = b * b - Delta;
      if (num % (4 * a) != 0) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      forms.push_back({a, b, c});
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

i64 class_number_imag(i64 Delta) {
  if (Delta >= 0 || !is_fundamental_discriminant(Delta))
    throw DomainError("class_number_imag: " + std::to_string(Delta) +
                      " is not a negative fundamental discriminant");
  i64 h = 0;
  for (const auto& f : reduced_forms(Delta))
    if (std::gcd(std::gcd(f.a, f.b), f.c) == 1) ++h;
  return h;
}

int omega_units(i64 Delta) {
  if (Delta >= 0) throw DomainError("omega_units: discriminant must be negative");
  if (Delta == -3) return 6;
  if (Delta == -4) return 4;
  return 2;
}

Rational hurwitz_direct(i64 N) {
  require_disc_residue(N, "hurwitz_direct");
  Rational h(0);
  for (const auto& f : reduced_forms(-N)) {
    if (f.b == 0 && f.a == f.c)
      h = h + Rational(1, 2);
    else if (f.b == f.a && f.a == f.c)
      h = h + Rational(1, 3);
    else
      h = h + Rational(1);
  }
  return h;
}

Rational hurwitz_formula(i64 N) {
  require_disc_residue(N, "hurwitz_formula");
  const i64 Delta = field_discriminant(-N);
  const i64 f = isqrt(N / -Delta);
  if (f * f * -Delta != N) throw InternalError("hurwitz_formula: conductor mismatch");
  const QuadChar chi = QuadChar::from_discriminant(Delta);
  return Rational(2 * class_number_imag(Delta), omega_units(Delta)) * Rational(T1(chi, f));
}

double big_log(const BigInt& v) {
  if (v <= 0) throw DomainError("big_log: argument must be positive");
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 60) return std::log(v.convert_to<double>());
  std::size_t shift = bits - 60;
  BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + double(shift) * std::log(2.0);
}

PellUnit pell_unit(i64 D) {
  if (D <= 1 || is_square(D) || !is_fundamental_discriminant(D))
    throw DomainError("pell_unit: " + std::to_string(D) +
                      " is not a positive non-square fundamental discriminant");
  const i64 root = isqrt(D);
  const i64 b = floor_mod(D, 2);
  // Complete quotients (P + sqrt D)/Q of omega = (b + sqrt D)/2 and the
  // convergent denominators q_k = a_k q_{k-1} + q_{k-2}, q_{-1} = 0, q_{-2} = 1.
  i64 P = b, Q = 2;
  BigInt qm2 = 1, qm1 = 0;
  for (;;) {
    const i64 a = floor_quotient(P, Q, root);
    const BigInt qk = BigInt(a) * qm1 + qm2;
    const i64 P_next = a * Q - P;
    const i64 Q_next = (D - P_next * P_next) / Q;
    if (Q_next == 2) {
      // The next complete quotient is omega + t, so omega is fixed by the
      // convergent matrix and q_k omega + q_k t + q_{k-1} is a unit.
      const i64 t = (P_next - b) / 2;
      PellUnit u{D, qk * b + 2 * (qk * t + qm1), qk, 0.0};
      // log((x + y sqrt D)/2) = log x + log1p(y sqrt(D) / x) - log 2
      const std::size_t bits = boost::multiprecision::msb(u.x) + 1;
      const std::size_t shift = bits > 60 ? bits - 60 : 0;
      const double xs = BigInt(u.x >> shift).convert_to<double>();
      const double ys = BigInt(u.y >> shift).convert_to<double>();
      u.log_eps = big_log(u.x) + std::log1p(ys * std::sqrt(double(D)) / xs) - std::log(2.0);
      return u;
    }
    qm2 = qm1;
    qm1 = qk;
    P = P_next;
    Q = Q_next;
  }
}

double class_number_real_quotient(i64 D) {
  const PellUnit u = pell_unit(D);
  return std::sqrt(double(D)) * L_at_1(D).value / (2.0 * u.log_eps);
}

i64 class_number_real(i64 D) {
  const double h = class_number_real_quotient(D);
  const double nearest = std::round(h);
  if (nearest < 1 || std::abs(h - nearest) > 1e-6)
    throw PrecisionError("class_number_real: quotient " + std::to_string(h) + " for D = " +
                         std::to_string(D) + " is not within 1e-6 of a positive integer");
  return i64(nearest);
}

i64 r3_brute(i64 n) {
  if (n < 0) throw DomainError("r3_brute: n must be nonnegative");
  const i64 m = isqrt(n);
  i64 count = 0;
  for (i64 x = -m; x <= m; ++x) {
    const i64 rest = n - x * x;
    const i64 my = isqrt(rest);
    for (i64 y = -my; y <= my; ++y) {
      const i64 z2 = rest - y * y;
      const i64 z = isqrt(z2);
      if (z * z == z2) count += z == 0 ? 1 : 2;
    }
  }
  return count;
}

i64 r3_hurwitz(i64 n) {
  if (n < 1) throw DomainError("r3_hurwitz: n must be positive");
  auto integral = [](Rational v, i64 n) {
    if (v.den() != 1)
      throw InternalError("r3_hurwitz: non-integral value " + v.str() + " at n = " +
                          std::to_string(n));
    return v.num();
  };
  switch (floor_mod(n, 4)) {
    case 0:
      return r3_hurwitz(n / 4);
    case 1:
    case 2:
      return integral(Rational(12) * hurwitz_formula(4 * n), n);
    default:
      if (floor_mod(n, 8) == 7) return 0;
      return integral(Rational(24) * hurwitz_formula(n), n);
  }
}

}  // namespace thetalift
